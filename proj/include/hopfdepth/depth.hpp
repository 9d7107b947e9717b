#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfdepth/characters.hpp"
#include "hopfdepth/hopf_subalgebra.hpp"

namespace hopfdepth {

/// Everything the character-level depth computations need for one
/// inclusion K ⊆ H: both irreducible sets, both idempotent integrals and the
/// restriction table R[χ][α] = m_K(α, χ↓).
class SubalgebraPair {
public:
    SubalgebraPair(std::string id, HopfSubalgebraPtr k, IrrSetPtr irr_h, IrrSetPtr irr_k);

    const std::string& id() const noexcept { return id_; }
    const HopfAlgebraPtr& parent() const noexcept { return k_->parent(); }
    const HopfSubalgebra& sub() const noexcept { return *k_; }
    const HopfAlgebraPtr& sub_algebra() const noexcept { return k_->algebra(); }
    const IrrSetPtr& irr_h() const noexcept { return irr_h_; }
    const IrrSetPtr& irr_k() const noexcept { return irr_k_; }
    const AlgebraElement& integral_h() const noexcept { return lambda_h_; }
    /// Λ_K in K-coordinates.
    const AlgebraElement& integral_k() const noexcept { return lambda_k_; }
    /// Λ_K as an element of H.
    AlgebraElement integral_k_in_h() const;
    /// |H| / |K|
    std::int64_t index() const noexcept { return static_cast<std::int64_t>(k_->index()); }
    const std::vector<std::vector<std::int64_t>>& restriction_table() const noexcept { return table_; }

private:
    std::string id_;
    HopfSubalgebraPtr k_;
    IrrSetPtr irr_h_;
    IrrSetPtr irr_k_;
    AlgebraElement lambda_h_;
    AlgebraElement lambda_k_;
    std::vector<std::vector<std::int64_t>> table_;
};

/// Non-negative integer combination of the members of an IrrSet.
struct Decomposition {
    IrrSetPtr base;
    std::vector<std::int64_t> multiplicities;

    Character to_character() const;
    std::int64_t total_degree() const;
    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.base == b.base && a.multiplicities == b.multiplicities;
    }
};

/// Decomposes ψ against Irr via m(α, ψ); throws CharacterError if the
/// combination does not reproduce ψ exactly.
Decomposition decompose(const Character& psi, const IrrSetPtr& irr, const AlgebraElement& lambda);

/// Functional χ∘ι on K (ι the inclusion).
Character restrict_functional(const Character& chi, const HopfSubalgebra& k);

/// χ↓ decomposed over Irr(K).
Decomposition restrict(const Character& chi, const SubalgebraPair& pair);
/// Linear extension to a decomposition over Irr(H).
Decomposition restrict(const Decomposition& d, const SubalgebraPair& pair);

/// α↑ = Σ_χ m_K(α, χ↓)·χ over Irr(H); checks total degree = |H|/|K|·α(1).
Decomposition induce(const Character& alpha, const SubalgebraPair& pair);
/// Linear extension to a decomposition over Irr(K).
Decomposition induce(const Decomposition& d, const SubalgebraPair& pair);

/// Indices with positive multiplicity.
std::set<std::size_t> constituents(const Decomposition& d);

struct DepthTwoWitness {
    std::size_t alpha;
    std::size_t chi;
    std::int64_t up_down_up;  // m(α↑↓↑, χ)
    std::int64_t up;          // m(α↑, χ)
};

struct DepthTwoResult {
    bool is_depth_two = false;
    std::optional<std::int64_t> minimal_n;
    std::vector<DepthTwoWitness> witnesses;
};

/// Depth two iff constituents(α↑↓↑) = constituents(α↑) for every α ∈ Irr(K).
DepthTwoResult depth_two_test(const SubalgebraPair& pair);

struct LemmaResult {
    bool holds = false;
    Decomposition eps_up_down;  // ε_K↑↓
};

/// ε_K↑↓ = (|H|/|K|)·ε_K
LemmaResult lemma_test(const SubalgebraPair& pair);

struct ClassPartition {
    std::vector<std::vector<std::size_t>> classes_h;  // C_i ⊆ Irr(H)
    std::vector<std::vector<std::size_t>> classes_k;  // A_i ⊆ Irr(K), index-aligned
    std::vector<std::int64_t> a_sizes;                // a_i(1) = Σ_{χ∈C_i} χ(1)²
    std::vector<std::int64_t> k_sizes;                // |A_i| = Σ_{α∈A_i} α(1)²
    /// False if two H-classes share a K-constituent or some α lies in no A_i.
    bool well_defined = true;
};

/// Connected components of χ ~ μ ⟺ m_K(χ↓, μ↓) > 0, with the induced
/// partition of Irr(K) by shared constituents.
ClassPartition equivalence_classes(const SubalgebraPair& pair);

struct FormulaFailure {
    std::string identity;  // "restriction", "induction", "proportional restriction"
    std::size_t class_index;
    std::size_t character;  // index into Irr(H) or Irr(K)
};

struct FormulaReport {
    std::size_t restriction_checks = 0;
    std::size_t induction_checks = 0;
    std::size_t proportionality_checks = 0;
    std::vector<FormulaFailure> failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// Exact check, per class, of
///   χ↓ = χ(1)/|A_i| · Σ_{α∈A_i} α(1)·α                     (χ ∈ C_i)
///   α↑ = α(1)/a_i(1) · |H|/|K| · Σ_{χ∈C_i} χ(1)·χ          (α ∈ A_i)
///   χ↓/χ(1) = μ↓/μ(1)                                       (χ, μ ∈ C_i)
/// The identities are only expected to hold for normal K.
FormulaReport verify_class_formulas(const ClassPartition& p, const SubalgebraPair& pair);

/// t_K↑↓ = (|H|/|K|)·t_K
bool regular_induction_check(const SubalgebraPair& pair);

struct Verdict {
    std::string pair_id;
    bool depth_two = false;
    bool lemma = false;
    bool central_integral = false;
    bool adjoint_stable = false;
    bool ideal_equal = false;
    std::optional<std::int64_t> minimal_n;
    std::vector<DepthTwoWitness> witnesses;
    /// m_K(α↑↓, ε_K) = 0 for α ≠ ε_K; checked on depth-two pairs only.
    std::optional<bool> vanishing_step;
    /// χ(Λ_K) ∈ {0, χ(1)} for every χ ∈ Irr(H); checked on depth-two pairs only.
    std::optional<bool> integral_values;
    bool regular_induction = false;
    ClassPartition partition;
    /// Present when K is normal (central integral).
    std::optional<FormulaReport> formulas;
    bool pass = false;

    bool all_agree() const noexcept {
        return depth_two == lemma && lemma == central_integral && central_integral == adjoint_stable &&
               adjoint_stable == ideal_equal;
    }
};

/// PASS iff the five booleans agree and, on depth-two pairs, the vanishing
/// step and the integral-value dichotomy both hold.
Verdict theorem_check(const SubalgebraPair& pair);

}  // namespace hopfdepth
