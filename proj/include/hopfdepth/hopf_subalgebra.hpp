#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfdepth/hopf_algebra.hpp"

namespace hopfdepth {

/// Hopf subalgebra K ⊆ H given by an inclusion matrix whose rows are the
/// coordinates of a basis x_0..x_{k-1} of K in the basis of H. The induced
/// structure constants on that basis form `algebra()`.
class HopfSubalgebra {
public:
    /// Checks full row rank, 1_H ∈ K, closure under multiplication, Δ(K) ⊆ K⊗K,
    /// S(K) ⊆ K, all Hopf axioms on the induced structure, and k | d.
    /// Throws SubalgebraError (or AxiomError) on failure.
    static HopfSubalgebra from_inclusion(HopfAlgebraPtr parent, Matrix<Scalar> rows,
                                         std::vector<std::string> labels = {}, std::string name = {});

    const HopfAlgebraPtr& parent() const noexcept { return parent_; }
    const HopfAlgebraPtr& algebra() const noexcept { return algebra_; }
    const Matrix<Scalar>& inclusion() const noexcept { return basis_.rows(); }
    std::size_t dimension() const noexcept { return basis_.size(); }
    /// |H| / |K|
    std::size_t index() const noexcept { return parent_->dimension() / dimension(); }

    /// K-coordinates → H-coordinates.
    Vector embed(const Vector& k_coords) const { return basis_.combine(k_coords); }
    /// H-coordinates → K-coordinates when the vector lies in K.
    std::optional<Vector> coordinates(const Vector& h_coords) const { return basis_.coordinates(h_coords); }
    bool contains(const Vector& h_coords) const { return basis_.contains(h_coords); }

private:
    HopfSubalgebra(HopfAlgebraPtr parent, RowBasis<Scalar> basis, HopfAlgebraPtr algebra)
        : parent_(std::move(parent)), basis_(std::move(basis)), algebra_(std::move(algebra)) {}

    HopfAlgebraPtr parent_;
    RowBasis<Scalar> basis_;
    HopfAlgebraPtr algebra_;
};

using HopfSubalgebraPtr = std::shared_ptr<const HopfSubalgebra>;

/// K⁺ = ker ε ∩ K as H-coordinate vectors (a basis).
Matrix<Scalar> augmentation_ideal(const HopfSubalgebra& k);

/// Span of {b_i·y : i, y ∈ K⁺}.
Subspace<Scalar> left_ideal_span(const HopfSubalgebra& k);
/// Span of {y·b_i : i, y ∈ K⁺}.
Subspace<Scalar> right_ideal_span(const HopfSubalgebra& k);

/// Σ h₁·x·S(h₂) ∈ K for every basis h of H and basis x of K. Valid as a
/// normality criterion because S² = id is verified on every algebra.
bool adjoint_stability_test(const HopfSubalgebra& k);

/// HK⁺ = K⁺H as subspaces.
bool ideal_test(const HopfSubalgebra& k);

struct QuotientHopf {
    HopfAlgebraPtr algebra;
    /// Row i holds π(b_i) in quotient coordinates (d × d/k).
    Matrix<Scalar> projection;
    /// H-basis indices whose images form the quotient basis.
    std::vector<std::size_t> complement;
};

/// H//K = H/HK⁺ on the lexicographically first complement of HK⁺ among the
/// H-basis vectors. Throws NotNormal unless ideal_test(k).
QuotientHopf quotient_hopf(const HopfSubalgebra& k);

}  // namespace hopfdepth
