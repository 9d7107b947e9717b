#include <array>
#include <map>

#include "doctest.h"
#include "hopfdepth/characters.hpp"
#include "hopfdepth/constructors.hpp"
#include "hopfdepth/errors.hpp"
#include "oracles.hpp"

using namespace hopfdepth;

namespace {

using Mat2 = std::array<Scalar, 4>;  // row-major 2×2

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

/// Character of the representation determined by matrices for the group's
/// generators, built by closing (permutation, matrix) pairs. Fails the test
/// if the assignment is not a homomorphism.
std::vector<Scalar> character_from_generators(const FiniteGroup& g, const std::vector<Permutation>& gens,
                                              const std::vector<Mat2>& mats) {
    std::map<std::size_t, Mat2> rho;
    const std::size_t e = g.identity();
    rho[e] = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    std::vector<std::size_t> frontier{e};
    const auto& perms = *g.permutations();
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto x : frontier)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const std::size_t y = *g.index_of(perms[x] * gens[i]);
                const Mat2 m = mul(rho[x], mats[i]);
                auto [it, fresh] = rho.emplace(y, m);
                if (fresh)
                    next.push_back(y);
                else
                    REQUIRE(it->second == m);
            }
        frontier = std::move(next);
    }
    REQUIRE(rho.size() == g.order());
    std::vector<Scalar> chi(g.order());
    for (const auto& [x, m] : rho) chi[x] = m[0] + m[3];
    return chi;
}

std::set<std::vector<Scalar>, bool (*)(const std::vector<Scalar>&, const std::vector<Scalar>&)> as_set(
    const std::vector<std::vector<Scalar>>& rows) {
    auto less = +[](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
    };
    std::set<std::vector<Scalar>, bool (*)(const std::vector<Scalar>&, const std::vector<Scalar>&)> s(less);
    for (const auto& r : rows) s.insert(r);
    return s;
}

std::vector<std::vector<Scalar>> irr_values(const IrrSet& irr) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& c : irr.characters()) out.push_back(c.values());
    return out;
}

}  // namespace

TEST_CASE("Dixon tables match the brute-force oracle") {
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        const auto h = group_algebra(g);
        const IrrSet irr = irr_group_algebra(g, h);
        const auto oracle_rows = oracle::brute_force_irreducibles(g);
        REQUIRE(oracle_rows.size() == oracle::class_count(g));
        CHECK(irr.size() == oracle_rows.size());
        CHECK(as_set(irr_values(irr)) == as_set(oracle_rows));
    }
}

TEST_CASE("character table degrees") {
    const std::map<std::string, std::vector<std::int64_t>> degrees{
        {"C2", {1, 1}},          {"C3", {1, 1, 1}},          {"C4", {1, 1, 1, 1}},    {"C6", {1, 1, 1, 1, 1, 1}},
        {"C2xC2", {1, 1, 1, 1}}, {"S3", {1, 1, 2}},          {"D4", {1, 1, 1, 1, 2}}, {"Q8", {1, 1, 1, 1, 2}},
        {"A4", {1, 1, 1, 3}},    {"S4", {1, 1, 2, 3, 3}}};
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        const IrrSet irr = irr_group_algebra(g, group_algebra(g));
        CHECK(irr.degrees() == degrees.at(name));
        CHECK(irr.trivial_index() == 0);
    }
}

TEST_CASE("orthonormality and the regular character decomposition") {
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        for (const bool dual : {false, true}) {
            const auto h = dual ? dual_group_algebra(g) : group_algebra(g);
            const IrrSet irr = dual ? irr_dual_group_algebra(g, h) : irr_group_algebra(g, h);
            const AlgebraElement lambda = idempotent_integral(h);
            std::int64_t total = 0;
            Vector sum(h->dimension());
            for (std::size_t i = 0; i < irr.size(); ++i) {
                total += irr.degree(i) * irr.degree(i);
                for (std::size_t j = 0; j < irr.size(); ++j)
                    CHECK(multiplicity(irr[i], irr[j], lambda) == (i == j ? 1 : 0));
                for (std::size_t b = 0; b < sum.size(); ++b)
                    sum[b] += Scalar(static_cast<long>(irr.degree(i))) * irr[i].values()[b];
            }
            CHECK(total == static_cast<std::int64_t>(g.order()));
            // t_H = Σ χ(1)·χ
            CHECK(regular_character(h).values() == sum);
        }
    }
}

TEST_CASE("explicit two-dimensional representations") {
    SUBCASE("S3 standard representation") {
        const FiniteGroup g = builtin_group("S3");
        const auto gens = parse_cycle_list("(12), (123)", 3);
        // permutation action on the sum-zero plane, basis e1-e2, e2-e3
        const Mat2 t{Scalar(-1), Scalar(1), Scalar(0), Scalar(1)};
        const Mat2 c{Scalar(0), Scalar(-1), Scalar(1), Scalar(-1)};
        const auto chi = character_from_generators(g, gens, {t, c});
        const IrrSet irr = irr_group_algebra(g, group_algebra(g));
        CHECK(irr[2].values() == chi);
        CHECK(chi[0] == Scalar(2));
    }
    SUBCASE("Q8 quaternion representation") {
        const FiniteGroup g = builtin_group("Q8");
        const auto gens = parse_cycle_list("(1324)(5768), (1526)(3847)", 8);
        const Scalar i = Scalar::root_of_unity(4, 1);
        const Mat2 a{i, Scalar(0), Scalar(0), -i};
        const Mat2 b{Scalar(0), Scalar(1), Scalar(-1), Scalar(0)};
        const auto chi = character_from_generators(g, gens, {a, b});
        const IrrSet irr = irr_group_algebra(g, group_algebra(g));
        CHECK(irr[4].values() == chi);
        // integer-valued, -2 on the central involution
        std::size_t minus_two = 0;
        for (const auto& v : chi) minus_two += v == Scalar(-2);
        CHECK(minus_two == 1);
    }
}

TEST_CASE("irrational values appear where expected") {
    const FiniteGroup c3 = builtin_group("C3");
    const IrrSet irr = irr_group_algebra(c3, group_algebra(c3));
    const Scalar w = Scalar::root_of_unity(3, 1);
    std::size_t hits = 0;
    for (const auto& chi : irr.characters())
        for (const auto& v : chi.values()) hits += v == w;
    CHECK(hits == 2);  // ω appears once in each of the two nontrivial characters

    const FiniteGroup a4 = builtin_group("A4");
    const CharacterTable t = dixon_character_table(a4);
    CHECK(t.exponent == 6);
    CHECK(t.prime % 6 == 1);
    CHECK(t.prime > 2 * 4);  // 2⌈√12⌉ = 8
}

TEST_CASE("multiplicity examples in k[S3]") {
    const FiniteGroup g = builtin_group("S3");
    const auto h = group_algebra(g);
    const IrrSet irr = irr_group_algebra(g, h);
    const AlgebraElement lambda = idempotent_integral(h);
    const Character eps = irr[0], sgn = irr[1], std_ = irr[2];
    CHECK(eps == counit_character(h));
    CHECK(multiplicity(std_, char_mul(std_, std_), lambda) == 1);
    CHECK(multiplicity(sgn, char_mul(std_, std_), lambda) == 1);
    CHECK(multiplicity(eps, regular_character(h), lambda) == 1);
    CHECK(multiplicity(std_, regular_character(h), lambda) == 2);
    CHECK(char_star(std_) == std_);
    // a non-character functional has a non-integer multiplicity
    Vector v(6);
    v[0] = Scalar(1);
    CHECK_THROWS_AS(multiplicity(eps, Character(h, v), lambda), CharacterError);
}

TEST_CASE("IrrSet validation") {
    const FiniteGroup g = builtin_group("S3");
    const auto h = group_algebra(g);
    const IrrSet irr = irr_group_algebra(g, h);
    std::vector<Character> two(irr.characters().begin(), irr.characters().begin() + 2);
    CHECK_THROWS_AS(IrrSet(h, two), CharacterError);
    CHECK_THROWS_AS(irr_idempotent_basis(h), CharacterError);
    const auto dual = dual_group_algebra(g);
    const IrrSet d = irr_dual_group_algebra(g, dual);
    CHECK(d.size() == 6);
    CHECK(d.trivial_index() == 0);
    CHECK(d[0] == counit_character(dual));
}
