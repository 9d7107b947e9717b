#include "hopfdepth/depth.hpp"

#include <algorithm>
#include <numeric>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {
namespace {

Decomposition zero_decomposition(const IrrSetPtr& base) {
    return Decomposition{base, std::vector<std::int64_t>(base->size(), 0)};
}

Decomposition scaled(Decomposition d, std::int64_t factor) {
    for (auto& m : d.multiplicities) m *= factor;
    return d;
}

Character zero_character(const HopfAlgebraPtr& h) { return Character(h, Vector(h->dimension())); }

}  // namespace

// ---- Decomposition -------------------------------------------------------------------

Character Decomposition::to_character() const {
    Vector v(base->parent()->dimension());
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] == 0) continue;
        const Scalar m(static_cast<long>(multiplicities[i]));
        const auto& values = (*base)[i].values();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!values[j].is_zero()) v[j] += m * values[j];
    }
    return Character(base->parent(), std::move(v));
}

std::int64_t Decomposition::total_degree() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) total += multiplicities[i] * base->degree(i);
    return total;
}

Decomposition decompose(const Character& psi, const IrrSetPtr& irr, const AlgebraElement& lambda) {
    if (psi.parent() != irr->parent()) throw CharacterError("decompose: character and Irr belong to different algebras");
    Decomposition d{irr, {}};
    d.multiplicities.reserve(irr->size());
    for (const auto& alpha : irr->characters()) d.multiplicities.push_back(multiplicity(alpha, psi, lambda));
    if (!(d.to_character() == psi))
        throw CharacterError("decomposition does not reproduce the character on " + irr->parent()->name());
    return d;
}

std::set<std::size_t> constituents(const Decomposition& d) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < d.multiplicities.size(); ++i)
        if (d.multiplicities[i] > 0) out.insert(i);
    return out;
}

// ---- SubalgebraPair ------------------------------------------------------------------

Character restrict_functional(const Character& chi, const HopfSubalgebra& k) {
    if (chi.parent() != k.parent()) throw CharacterError("restriction: character is not on the parent algebra");
    Vector v;
    v.reserve(k.dimension());
    for (const auto& row : k.inclusion()) v.push_back(chi(row));
    return Character(k.algebra(), std::move(v));
}

SubalgebraPair::SubalgebraPair(std::string id, HopfSubalgebraPtr k, IrrSetPtr irr_h, IrrSetPtr irr_k)
    : id_(std::move(id)),
      k_(std::move(k)),
      irr_h_(std::move(irr_h)),
      irr_k_(std::move(irr_k)),
      lambda_h_(idempotent_integral(k_->parent())),
      lambda_k_(idempotent_integral(k_->algebra())) {
    if (irr_h_->parent() != k_->parent()) throw CharacterError("Irr(H) does not belong to the parent algebra");
    if (irr_k_->parent() != k_->algebra()) throw CharacterError("Irr(K) does not belong to the subalgebra");
    table_.reserve(irr_h_->size());
    for (const auto& chi : irr_h_->characters())
        table_.push_back(decompose(restrict_functional(chi, *k_), irr_k_, lambda_k_).multiplicities);
}

AlgebraElement SubalgebraPair::integral_k_in_h() const { return AlgebraElement(parent(), k_->embed(lambda_k_.coords)); }

// ---- restriction and induction -------------------------------------------------------

Decomposition restrict(const Character& chi, const SubalgebraPair& pair) {
    return decompose(restrict_functional(chi, pair.sub()), pair.irr_k(), pair.integral_k());
}

Decomposition restrict(const Decomposition& d, const SubalgebraPair& pair) {
    if (d.base != pair.irr_h()) throw CharacterError("restrict: decomposition is not over Irr(H)");
    Decomposition out = zero_decomposition(pair.irr_k());
    const auto& table = pair.restriction_table();
    for (std::size_t chi = 0; chi < d.multiplicities.size(); ++chi)
        for (std::size_t a = 0; a < out.multiplicities.size(); ++a)
            out.multiplicities[a] += d.multiplicities[chi] * table[chi][a];
    return out;
}

Decomposition induce(const Character& alpha, const SubalgebraPair& pair) {
    if (alpha.parent() != pair.sub_algebra()) throw CharacterError("induce: character is not on the subalgebra");
    Decomposition out = zero_decomposition(pair.irr_h());
    for (std::size_t chi = 0; chi < pair.irr_h()->size(); ++chi) {
        const Character down = restrict_functional((*pair.irr_h())[chi], pair.sub());
        out.multiplicities[chi] = multiplicity(alpha, down, pair.integral_k());
    }
    const Scalar expected = alpha.degree() * Scalar(static_cast<long>(pair.index()));
    if (!(Scalar(static_cast<long>(out.total_degree())) == expected))
        throw CharacterError("induced degree " + std::to_string(out.total_degree()) + " != index * " +
                             alpha.degree().to_string() + " on " + pair.id());
    return out;
}

Decomposition induce(const Decomposition& d, const SubalgebraPair& pair) {
    if (d.base != pair.irr_k()) throw CharacterError("induce: decomposition is not over Irr(K)");
    Decomposition out = zero_decomposition(pair.irr_h());
    const auto& table = pair.restriction_table();
    for (std::size_t chi = 0; chi < out.multiplicities.size(); ++chi)
        for (std::size_t a = 0; a < d.multiplicities.size(); ++a)
            out.multiplicities[chi] += d.multiplicities[a] * table[chi][a];
    if (out.total_degree() != d.total_degree() * pair.index())
        throw CharacterError("induced degree balance failed on " + pair.id());
    return out;
}

// ---- depth two and the lemma ---------------------------------------------------------

DepthTwoResult depth_two_test(const SubalgebraPair& pair) {
    DepthTwoResult result;
    result.is_depth_two = true;
    std::int64_t worst = 0;
    const IrrSet& irr_k = *pair.irr_k();
    for (std::size_t a = 0; a < irr_k.size(); ++a) {
        const Decomposition up = induce(irr_k[a], pair);
        const Decomposition udu = induce(restrict(up, pair), pair);
        for (std::size_t chi = 0; chi < up.multiplicities.size(); ++chi) {
            const std::int64_t m_up = up.multiplicities[chi];
            const std::int64_t m_udu = udu.multiplicities[chi];
            if (m_up > 0) {
                worst = std::max(worst, (m_udu + m_up - 1) / m_up);
            } else if (m_udu > 0) {
                result.is_depth_two = false;
                result.witnesses.push_back({a, chi, m_udu, m_up});
            }
        }
    }
    if (result.is_depth_two) result.minimal_n = worst;
    return result;
}

LemmaResult lemma_test(const SubalgebraPair& pair) {
    const std::size_t eps = pair.irr_k()->trivial_index();
    LemmaResult r{false, restrict(induce((*pair.irr_k())[eps], pair), pair)};
    Decomposition expected = zero_decomposition(pair.irr_k());
    expected.multiplicities[eps] = pair.index();
    r.holds = r.eps_up_down == expected;
    return r;
}

// ---- class partition -----------------------------------------------------------------

ClassPartition equivalence_classes(const SubalgebraPair& pair) {
    const IrrSet& irr_h = *pair.irr_h();
    const IrrSet& irr_k = *pair.irr_k();
    const std::size_t n = irr_h.size();

    std::vector<Character> down;
    down.reserve(n);
    for (const auto& chi : irr_h.characters()) down.push_back(restrict_functional(chi, pair.sub()));

    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (multiplicity(down[i], down[j], pair.integral_k()) > 0) {
                const std::size_t a = find(i), b = find(j);
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }

    ClassPartition p;
    std::vector<std::size_t> class_of_root(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (class_of_root[r] == n) {
            class_of_root[r] = p.classes_h.size();
            p.classes_h.emplace_back();
        }
        p.classes_h[class_of_root[r]].push_back(i);
    }

    const auto& table = pair.restriction_table();
    std::vector<std::size_t> owner(irr_k.size(), p.classes_h.size());
    for (std::size_t c = 0; c < p.classes_h.size(); ++c) {
        std::set<std::size_t> members;
        std::int64_t a_size = 0;
        for (auto chi : p.classes_h[c]) {
            a_size += irr_h.degree(chi) * irr_h.degree(chi);
            for (std::size_t a = 0; a < irr_k.size(); ++a)
                if (table[chi][a] > 0) members.insert(a);
        }
        std::int64_t k_size = 0;
        for (auto a : members) {
            k_size += irr_k.degree(a) * irr_k.degree(a);
            if (owner[a] != p.classes_h.size()) p.well_defined = false;
            owner[a] = c;
        }
        p.classes_k.emplace_back(members.begin(), members.end());
        p.a_sizes.push_back(a_size);
        p.k_sizes.push_back(k_size);
    }
    for (auto o : owner)
        if (o == p.classes_h.size()) p.well_defined = false;
    return p;
}

FormulaReport verify_class_formulas(const ClassPartition& p, const SubalgebraPair& pair) {
    const IrrSet& irr_h = *pair.irr_h();
    const IrrSet& irr_k = *pair.irr_k();
    FormulaReport report;
    const Scalar index(static_cast<long>(pair.index()));

    for (std::size_t c = 0; c < p.classes_h.size(); ++c) {
        // Σ_{α∈A_i} α(1)·α and Σ_{χ∈C_i} χ(1)·χ
        Character k_sum = zero_character(pair.sub_algebra());
        for (auto a : p.classes_k[c]) k_sum = k_sum + irr_k[a].scaled(Scalar(static_cast<long>(irr_k.degree(a))));
        Character h_sum = zero_character(pair.parent());
        for (auto chi : p.classes_h[c]) h_sum = h_sum + irr_h[chi].scaled(Scalar(static_cast<long>(irr_h.degree(chi))));

        for (auto chi : p.classes_h[c]) {
            ++report.restriction_checks;
            const Scalar coeff = Scalar(Rational(irr_h.degree(chi), p.k_sizes[c]));
            const Character expected = k_sum.scaled(coeff);
            if (!(restrict_functional(irr_h[chi], pair.sub()) == expected) ||
                !(restrict(irr_h[chi], pair).to_character() == expected))
                report.failures.push_back({"restriction", c, chi});
        }
        for (auto a : p.classes_k[c]) {
            ++report.induction_checks;
            const Scalar coeff = Scalar(Rational(irr_k.degree(a), p.a_sizes[c])) * index;
            if (!(induce(irr_k[a], pair).to_character() == h_sum.scaled(coeff)))
                report.failures.push_back({"induction", c, a});
        }
        const auto& members = p.classes_h[c];
        for (std::size_t i = 1; i < members.size(); ++i) {
            ++report.proportionality_checks;
            const std::size_t chi = members.front(), mu = members[i];
            const Character lhs = restrict_functional(irr_h[chi], pair.sub())
                                      .scaled(Scalar(Rational(1, irr_h.degree(chi))));
            const Character rhs = restrict_functional(irr_h[mu], pair.sub())
                                      .scaled(Scalar(Rational(1, irr_h.degree(mu))));
            if (!(lhs == rhs)) report.failures.push_back({"proportional restriction", c, mu});
        }
    }
    return report;
}

bool regular_induction_check(const SubalgebraPair& pair) {
    Decomposition t_k{pair.irr_k(), pair.irr_k()->degrees()};
    return restrict(induce(t_k, pair), pair) == scaled(t_k, pair.index());
}

// ---- theorem -------------------------------------------------------------------------

Verdict theorem_check(const SubalgebraPair& pair) {
    Verdict v;
    v.pair_id = pair.id();

    const DepthTwoResult d2 = depth_two_test(pair);
    v.depth_two = d2.is_depth_two;
    v.minimal_n = d2.minimal_n;
    v.witnesses = d2.witnesses;
    v.lemma = lemma_test(pair).holds;
    v.central_integral = is_central(pair.integral_k_in_h());
    v.adjoint_stable = adjoint_stability_test(pair.sub());
    v.ideal_equal = ideal_test(pair.sub());

    if (v.depth_two) {
        const IrrSet& irr_k = *pair.irr_k();
        const std::size_t eps = irr_k.trivial_index();
        bool vanishing = true;
        for (std::size_t a = 0; a < irr_k.size(); ++a) {
            if (a == eps) continue;
            if (restrict(induce(irr_k[a], pair), pair).multiplicities[eps] != 0) vanishing = false;
        }
        v.vanishing_step = vanishing;

        const AlgebraElement lambda = pair.integral_k_in_h();
        bool dichotomy = true;
        for (const auto& chi : pair.irr_h()->characters()) {
            const Scalar value = chi(lambda.coords);
            if (!value.is_zero() && !(value == chi.degree())) dichotomy = false;
        }
        v.integral_values = dichotomy;
    }

    v.regular_induction = regular_induction_check(pair);
    v.partition = equivalence_classes(pair);
    if (v.central_integral) v.formulas = verify_class_formulas(v.partition, pair);

    v.pass = v.all_agree() && (!v.depth_two || (*v.vanishing_step && *v.integral_values));
    return v;
}

}  // namespace hopfdepth
