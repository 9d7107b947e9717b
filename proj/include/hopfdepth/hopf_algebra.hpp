#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hopfdepth/cyclotomic.hpp"
#include "hopfdepth/linalg.hpp"

namespace hopfdepth {

using Scalar = Cyclotomic;
using Vector = Row<Scalar>;

struct Term {
    std::size_t index;
    Scalar value;
    friend bool operator==(const Term&, const Term&) = default;
};
/// Sorted by index, no zero values.
using SparseVector = std::vector<Term>;

struct Term2 {
    std::size_t left;
    std::size_t right;
    Scalar value;
    friend bool operator==(const Term2&, const Term2&) = default;
};
/// Element of H⊗H, sorted by (left, right), no zero values.
using SparseTensor2 = std::vector<Term2>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);

/// Raw structure constants of a finite-dimensional Hopf algebra on a basis
/// b_0..b_{d-1}:
///   b_i·b_j = Σ_k mult[i*d+j][k]·b_k,  Δ(b_i) = comult[i],
///   ε(b_i) = counit[i],  1 = Σ unit[i]·b_i,  S(b_i) = antipode[i].
struct HopfData {
    std::vector<std::string> labels;
    std::vector<SparseVector> mult;
    std::vector<SparseTensor2> comult;
    Vector counit;
    Vector unit;
    std::vector<SparseVector> antipode;

    friend bool operator==(const HopfData&, const HopfData&) = default;
};

/// Immutable structure-constant algebra. Construction only checks that the
/// data is dimensionally consistent; use verify_hopf_axioms / require_hopf
/// before relying on any Hopf identity.
class HopfAlgebra {
public:
    explicit HopfAlgebra(HopfData data, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return dim_; }
    const HopfData& data() const noexcept { return data_; }
    const std::vector<std::string>& labels() const noexcept { return data_.labels; }

    const SparseVector& product(std::size_t i, std::size_t j) const { return data_.mult[i * dim_ + j]; }
    const SparseTensor2& coproduct(std::size_t i) const { return data_.comult[i]; }
    const Scalar& counit(std::size_t i) const { return data_.counit[i]; }
    const Vector& unit() const noexcept { return data_.unit; }
    const SparseVector& antipode(std::size_t i) const { return data_.antipode[i]; }

    Vector basis_vector(std::size_t i) const;
    Vector multiply(const Vector& x, const Vector& y) const;
    Vector multiply_left_basis(std::size_t i, const Vector& x) const;   // b_i·x
    Vector multiply_right_basis(const Vector& x, std::size_t i) const;  // x·b_i
    Scalar counit_of(const Vector& x) const;
    Vector antipode_of(const Vector& x) const;

    bool is_commutative() const;
    bool is_cocommutative() const;

private:
    std::string name_;
    std::size_t dim_;
    HopfData data_;
};

using HopfAlgebraPtr = std::shared_ptr<const HopfAlgebra>;

struct AxiomResult {
    std::string name;
    bool passed;
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    bool all_passed() const;
    std::vector<std::string> failures() const;
};

/// Exact check of: associativity, unit, coassociativity, counit, Δ and ε
/// multiplicative, the antipode identity on both sides, and S² = id.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h);

/// Throws AxiomError naming every failed axiom.
void require_hopf(const HopfAlgebra& h);

/// Element of a specific algebra.
struct AlgebraElement {
    HopfAlgebraPtr parent;
    Vector coords;

    AlgebraElement(HopfAlgebraPtr p, Vector c);
};

/// Λ with b·Λ = ε(b)Λ for all b and ε(Λ) = 1.
/// Throws NotSemisimple if ε vanishes on the integral space and
/// MalformedAlgebra if that space is not one-dimensional.
AlgebraElement idempotent_integral(const HopfAlgebraPtr& h);

/// b_i·x = x·b_i for every basis element.
bool is_central(const AlgebraElement& x);

}  // namespace hopfdepth
