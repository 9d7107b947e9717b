// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hopfdepth/constructors.hpp"
#include "hopfdepth/corpus.hpp"
#include "hopfdepth/serialize.hpp"
#include "oracles.hpp"

using namespace hopfdepth;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<GroupContextPtr> corpus_contexts() {
    std::vector<GroupContextPtr> out;
    for (const auto& name : builtin_group_names()) out.push_back(make_group_context(builtin_group(name), true));
    return out;
}

template <class F>
void for_each_pair(const std::vector<GroupContextPtr>& ctxs, bool groups, bool duals, F f) {
    for (const auto& ctx : ctxs)
        for (std::size_t i = 0; i < ctx->subgroups.size(); ++i) {
            if (groups) f(*ctx, group_pair(*ctx, i), i);
            if (duals && is_normal(ctx->group, ctx->subgroups[i])) f(*ctx, dual_pair(*ctx, i), i);
        }
}

/// Decomposes a class function on K by the classical inner product.
std::vector<Cyclotomic> classical_decompose(const oracle::ClassFunction& psi,
                                            const std::vector<oracle::ClassFunction>& irr) {
    std::vector<Cyclotomic> m;
    for (const auto& chi : irr) m.push_back(oracle::inner(psi, chi));
    return m;
}

Outcome theorem_equivalence(const SurveyReport& survey) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& r : survey.records) {
        if (r.kind != "group") continue;
        ++n;
        if (!r.internal_error.empty()) o.fail(r.id + ": " + r.internal_error);
        else if (!r.verdict.pass || !r.verdict.all_agree()) o.fail(r.id + " disagrees");
    }
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " group-algebra pairs";
    return o;
}

Outcome dual_corpus(const SurveyReport& survey) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& r : survey.records) {
        if (r.kind != "dual") continue;
        ++n;
        const Verdict& v = r.verdict;
        if (!r.internal_error.empty() || !(v.depth_two && v.adjoint_stable && v.central_integral && v.ideal_equal && v.lemma))
            o.fail(r.id + " not normal and depth two");
    }
    if (n != 38) o.fail("expected 38 dual pairs, got " + std::to_string(n));
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " dual pairs";
    return o;
}

Outcome regular_character_identity(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    std::size_t n = 0;
    for (const auto& ctx : ctxs)
        for (const auto& [h, irr] : {std::pair{ctx->algebra, ctx->irr}, std::pair{ctx->dual, ctx->irr_dual}}) {
            ++n;
            Vector sum(h->dimension());
            for (std::size_t i = 0; i < irr->size(); ++i)
                for (std::size_t b = 0; b < sum.size(); ++b)
                    sum[b] += Scalar(static_cast<long>(irr->degree(i))) * (*irr)[i].values()[b];
            if (!(regular_character(h).values() == sum)) o.fail(h->name());
        }
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " algebras";
    return o;
}

Outcome regular_induction(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    std::size_t n = 0;
    for_each_pair(ctxs, true, true, [&](const GroupContext&, const SubalgebraPair& p, std::size_t) {
        ++n;
        if (!regular_induction_check(p)) o.fail(p.id());
    });
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " pairs";
    return o;
}

Outcome lemma_sharpness(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    const GroupContext* s3 = nullptr;
    for (const auto& c : ctxs)
        if (c->group.name() == "S3") s3 = c.get();
    const auto gens = [&](const char* cycles) {
        return *s3->group.index_of(parse_cycle_list(cycles, 3)[0]);
    };
    struct Case {
        const char* gen;
        std::vector<std::int64_t> expected;  // ε_K↑↓ over Irr(K)
        bool holds;
    };
    for (const Case& c : {Case{"(123)", {2, 0, 0}, true}, Case{"(12)", {2, 1}, false}}) {
        const Subgroup k = generate_subgroup(s3->group, {gens(c.gen)});
        std::size_t index = 0;
        while (!(s3->subgroups[index] == k)) ++index;
        const SubalgebraPair pair = group_pair(*s3, index);
        const LemmaResult lemma = lemma_test(pair);
        if (lemma.eps_up_down.multiplicities != c.expected || lemma.holds != c.holds)
            o.fail(std::string("lemma on <") + c.gen + ">");

        // classical oracle: induce ε_K by the explicit formula, restrict by
        // evaluation, decompose by the inner product on K
        std::map<std::size_t, Cyclotomic> eps;
        for (auto x : k.elements) eps[x] = Cyclotomic(1);
        const auto up = oracle::induce_classical(s3->group, k.elements, eps);
        const FiniteGroup kk = subgroup_as_group(s3->group, k, "K");
        oracle::ClassFunction down;
        for (auto x : k.elements) down.push_back(up[x]);
        std::vector<oracle::ClassFunction> irr_k;
        for (const auto& alpha : pair.irr_k()->characters()) irr_k.push_back(alpha.values());
        const auto m = classical_decompose(down, irr_k);
        for (std::size_t a = 0; a < m.size(); ++a)
            if (!(m[a] == Cyclotomic(static_cast<long>(c.expected[a])))) o.fail(std::string("oracle on <") + c.gen + ">");
        if (kk.order() != k.order()) o.fail("subgroup order");
    }
    if (o.ok) o.detail = "A3: 2eps_K; <(12)>: 2eps_K + sgn_K != 3eps_K";
    return o;
}

Outcome class_formulas(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    std::size_t n = 0;
    for_each_pair(ctxs, true, true, [&](const GroupContext& ctx, const SubalgebraPair& p, std::size_t i) {
        if (!is_normal(ctx.group, ctx.subgroups[i])) return;
        ++n;
        const ClassPartition part = equivalence_classes(p);
        if (!part.well_defined) o.fail(p.id() + " partition");
        const FormulaReport r = verify_class_formulas(part, p);
        if (!r.ok()) o.fail(p.id() + " " + r.failures.front().identity);
    });
    for (const auto& c : ctxs) {
        if (c->group.name() != "S3") continue;
        for (std::size_t i = 0; i < c->subgroups.size(); ++i) {
            if (subgroup_label(c->group, c->subgroups[i]) != "<(123)>") continue;
            const ClassPartition p = equivalence_classes(group_pair(*c, i));
            using V = std::vector<std::vector<std::size_t>>;
            if (p.classes_h != V{{0, 1}, {2}} || p.classes_k != V{{0}, {1, 2}} ||
                p.a_sizes != std::vector<std::int64_t>{2, 4} || p.k_sizes != std::vector<std::int64_t>{1, 2})
                o.fail("S3/A3 partition");
        }
    }
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " normal pairs, S3/A3 partition exact";
    return o;
}

Outcome table_oracle(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    for (const auto& ctx : ctxs) {
        const IrrSet& irr = *ctx->irr;
        const auto brute = oracle::brute_force_irreducibles(ctx->group);
        if (brute.size() != irr.size()) {
            o.fail(ctx->group.name() + " size");
            continue;
        }
        for (const auto& chi : irr.characters())
            if (std::find(brute.begin(), brute.end(), chi.values()) == brute.end())
                o.fail(ctx->group.name() + " character missing from oracle");
        const AlgebraElement lambda = idempotent_integral(ctx->algebra);
        std::int64_t total = 0;
        for (std::size_t i = 0; i < irr.size(); ++i) {
            total += irr.degree(i) * irr.degree(i);
            for (std::size_t j = 0; j < irr.size(); ++j)
                if (multiplicity(irr[i], irr[j], lambda) != (i == j)) o.fail(ctx->group.name() + " orthonormality");
        }
        if (total != static_cast<std::int64_t>(ctx->group.order())) o.fail(ctx->group.name() + " degree sum");
    }
    if (o.ok) o.detail = std::to_string(ctxs.size()) + " groups";
    return o;
}

Outcome frobenius(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    std::size_t n = 0;
    for_each_pair(ctxs, true, false, [&](const GroupContext& ctx, const SubalgebraPair& p, std::size_t i) {
        const auto& elems = ctx.subgroups[i].elements;
        for (std::size_t a = 0; a < p.irr_k()->size(); ++a) {
            ++n;
            const Character& alpha = (*p.irr_k())[a];
            std::map<std::size_t, Cyclotomic> on_k;
            for (std::size_t j = 0; j < elems.size(); ++j) on_k[elems[j]] = alpha.values()[j];
            const auto classical = oracle::induce_classical(ctx.group, elems, on_k);
            const Decomposition up = induce(alpha, p);
            for (std::size_t chi = 0; chi < p.irr_h()->size(); ++chi) {
                // m_H(α↑, χ) by the classical inner product against m_K(α, χ↓)
                const Cyclotomic m = oracle::inner(classical, (*p.irr_h())[chi].values());
                if (!(m == Cyclotomic(static_cast<long>(up.multiplicities[chi])))) o.fail(p.id());
                if (up.multiplicities[chi] != p.restriction_table()[chi][a]) o.fail(p.id() + " table");
            }
        }
    });
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " induced characters";
    return o;
}

Outcome vanishing(const std::vector<GroupContextPtr>& ctxs) {
    Outcome o;
    std::size_t n = 0;
    for_each_pair(ctxs, true, true, [&](const GroupContext&, const SubalgebraPair& p, std::size_t) {
        if (!depth_two_test(p).is_depth_two) return;
        ++n;
        const IrrSet& irr_k = *p.irr_k();
        const std::size_t eps = irr_k.trivial_index();
        for (std::size_t a = 0; a < irr_k.size(); ++a)
            if (a != eps && restrict(induce(irr_k[a], p), p).multiplicities[eps] != 0) o.fail(p.id() + " vanishing");
        const AlgebraElement lambda = p.integral_k_in_h();
        for (const auto& chi : p.irr_h()->characters()) {
            const Scalar v = chi(lambda.coords);
            if (!v.is_zero() && !(v == chi.degree())) o.fail(p.id() + " integral value");
        }
    });
    o.detail = (o.ok ? "" : o.detail + "; ") + std::to_string(n) + " depth-two pairs";
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::string a = survey_to_json(run_survey(default_corpus(), 1));
    const std::string b = survey_to_json(run_survey(default_corpus(), 4));
    const std::string c = survey_to_json(run_survey(default_corpus(), 1));
    if (a != b) o.fail("jobs=1 and jobs=4 differ");
    if (a != c) o.fail("two jobs=1 runs differ");
    if (o.ok) o.detail = std::to_string(a.size()) + " bytes, jobs 1/4/1 identical";
    return o;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto ctxs = corpus_contexts();
    const SurveyReport survey = run_survey(default_corpus(), 1);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"theorem equivalence on every group-algebra pair", [&] { return theorem_equivalence(survey); }},
        {"dual pairs are normal and depth two", [&] { return dual_corpus(survey); }},
        {"regular character equals sum of chi(1)*chi", [&] { return regular_character_identity(ctxs); }},
        {"regular character of K induced and restricted is |H|/|K| t_K", [&] { return regular_induction(ctxs); }},
        {"lemma sharpness on S3", [&] { return lemma_sharpness(ctxs); }},
        {"class formulas on normal pairs", [&] { return class_formulas(ctxs); }},
        {"Dixon tables match the brute-force oracle", [&] { return table_oracle(ctxs); }},
        {"Frobenius reciprocity against classical induction", [&] { return frobenius(ctxs); }},
        {"vanishing step and integral values on depth-two pairs", [&] { return vanishing(ctxs); }},
        {"survey determinism across runs and job counts", [&] { return determinism(); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " (" << o.detail << ")" << std::endl;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << " (" << std::fixed << std::setprecision(1) << secs
              << " s)" << std::endl;
    return failed ? 1 : 0;
}
