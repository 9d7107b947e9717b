#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfdepth/group.hpp"
#include "hopfdepth/hopf_subalgebra.hpp"

namespace hopfdepth {

/// k[G]: basis G, Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. Axioms verified.
HopfAlgebraPtr group_algebra(const FiniteGroup& g);

/// k^G: basis of orthogonal idempotents δ_g, Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b,
/// ε(δ_g) = [g = e], S(δ_g) = δ_{g⁻¹}. Axioms verified.
HopfAlgebraPtr dual_group_algebra(const FiniteGroup& g);

/// k[S] ⊆ k[G]; `h` must be group_algebra(g). Subalgebra basis follows
/// s.elements.
HopfSubalgebra subgroup_subalgebra(const FiniteGroup& g, const Subgroup& s, const HopfAlgebraPtr& h);

/// k^{G/N} ⊆ k^G spanned by coset indicators Σ_{x∈gN} δ_x, cosets ordered by
/// smallest element. `h` must be dual_group_algebra(g). Throws NotNormal.
HopfSubalgebra dual_quotient_subalgebra(const FiniteGroup& g, const Subgroup& n, const HopfAlgebraPtr& h);

/// Names accepted by builtin_group.
const std::vector<std::string>& builtin_group_names();

/// C2, C3, C4, C6, S3, D4, Q8, A4, S4, C2xC2 (also "C2×C2", "V4").
/// Throws GroupError for unknown names.
FiniteGroup builtin_group(std::string_view name);

/// Short label for a subgroup, e.g. "<(12),(34)>" style generator list or
/// "1" for the trivial subgroup; derived from a minimal generating set found
/// greedily in element order.
std::string subgroup_label(const FiniteGroup& g, const Subgroup& s);

}  // namespace hopfdepth
