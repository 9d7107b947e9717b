#include <array>
#include <map>

#include "doctest.h"
#include "hopfdepth/constructors.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/group.hpp"
#include "oracles.hpp"

using namespace hopfdepth;

TEST_CASE("cycle notation parsing") {
    const auto gens = parse_cycle_list("(12)(34), (1,3)", 4);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].images() == std::vector<std::uint32_t>{1, 0, 3, 2});
    CHECK(gens[1].images() == std::vector<std::uint32_t>{2, 1, 0, 3});
    CHECK(parse_cycle_list("(123);(12)", 3).size() == 2);
    CHECK(parse_cycle_list("(1,10)", 10)[0](9) == 0);
    CHECK(parse_cycle_list("", 3).empty());
    CHECK(parse_cycle_list("()", 3)[0].is_identity());
    CHECK_THROWS(parse_cycle_list("(12", 3));
    CHECK_THROWS(parse_cycle_list("(14)", 3));
    CHECK_THROWS(parse_cycle_list("(11)", 3));
}

TEST_CASE("permutation composition is right to left") {
    const auto g = parse_cycle_list("(12)", 3)[0];
    const auto h = parse_cycle_list("(23)", 3)[0];
    // (g*h)(3) = g(h(3)) = g(2) = 1
    CHECK((g * h)(2) == 0);
    CHECK((g * h).cycle_string() == "(123)");
    CHECK((g * g).is_identity());
    CHECK(Permutation::identity(3).cycle_string() == "()");
}

TEST_CASE("built-in group orders, exponents and class counts") {
    // order, exponent, number of conjugacy classes
    const std::map<std::string, std::array<std::size_t, 3>> expected{
        {"C2", {2, 2, 2}},   {"C3", {3, 3, 3}},   {"C4", {4, 4, 4}},    {"C6", {6, 6, 6}},
        {"C2xC2", {4, 2, 4}}, {"S3", {6, 6, 3}},   {"D4", {8, 4, 5}},    {"Q8", {8, 4, 5}},
        {"A4", {12, 6, 4}},  {"S4", {24, 12, 5}}};
    CHECK(builtin_group_names().size() == expected.size());
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        const auto& e = expected.at(name);
        CHECK(g.order() == e[0]);
        CHECK(g.exponent() == e[1]);
        CHECK(conjugacy_classes(g).size() == e[2]);
        CHECK(oracle::class_count(g) == e[2]);
        CHECK(g.is_abelian() == (e[2] == e[0]));
    }
    CHECK(builtin_group("V4").order() == 4);
    CHECK(builtin_group("C2×C2").order() == 4);
    CHECK_THROWS_AS(builtin_group("S5"), GroupError);
}

TEST_CASE("D4 and Q8 are distinguished by their involutions") {
    auto involutions = [](const FiniteGroup& g) {
        std::size_t n = 0;
        for (std::size_t x = 0; x < g.order(); ++x) n += g.element_order(x) == 2;
        return n;
    };
    CHECK(involutions(builtin_group("D4")) == 5);
    CHECK(involutions(builtin_group("Q8")) == 1);
}

TEST_CASE("subgroup enumeration matches brute force") {
    // total subgroups and normal subgroups
    const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
        {"C2", {2, 2}}, {"C3", {2, 2}}, {"C4", {3, 3}}, {"C6", {4, 4}},  {"C2xC2", {5, 5}},
        {"S3", {6, 3}}, {"D4", {10, 6}}, {"Q8", {6, 6}}, {"A4", {10, 3}}, {"S4", {30, 4}}};
    std::size_t total = 0, total_normal = 0;
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        const auto subs = enumerate_subgroups(g);
        std::set<std::vector<std::size_t>> found;
        std::size_t normal = 0;
        for (const auto& s : subs) {
            found.insert(s.elements);
            CHECK(g.order() % s.order() == 0);
            CHECK(is_subgroup(g, s.elements));
            CHECK(is_normal(g, s) == oracle::normal_by_conjugation(g, s.elements));
            normal += is_normal(g, s);
        }
        CHECK(found.size() == subs.size());
        const auto brute = g.order() <= 12 ? oracle::subgroups_by_subsets(g) : oracle::subgroups_by_pairs(g);
        CHECK(found == brute);
        CHECK(subs.size() == expected.at(name).first);
        CHECK(normal == expected.at(name).second);
        CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
            return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
        }));
        total += subs.size();
        total_normal += normal;
    }
    CHECK(total == 78);
    CHECK(total_normal == 38);
}

TEST_CASE("cosets and subgroup groups") {
    const FiniteGroup g = builtin_group("S3");
    const auto idx = g.index_of(parse_cycle_list("(123)", 3)[0]);
    REQUIRE(idx);
    const Subgroup a3 = generate_subgroup(g, {*idx});
    CHECK(a3.order() == 3);
    const auto cosets = left_cosets(g, a3);
    CHECK(cosets.size() == 2);
    CHECK(cosets[0] == a3.elements);
    const FiniteGroup sub = subgroup_as_group(g, a3, "A3");
    CHECK(sub.order() == 3);
    CHECK(sub.is_abelian());
    CHECK(subgroup_label(g, a3) == "<(123)>");
    CHECK(subgroup_label(g, Subgroup{{0}}) == "1");
    CHECK_THROWS_AS(verify_subgroup(g, Subgroup{{0, 1, 2, 3}}), GroupError);
}

TEST_CASE("Cayley table validation") {
    // Z/3
    CHECK_NOTHROW(FiniteGroup("Z3", {"0", "1", "2"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    // not a Latin square
    CHECK_THROWS_AS(FiniteGroup("bad", {"a", "b"}, {{0, 1}, {1, 1}}), GroupError);
    // Latin square with identity but not associative: a loop of order 5
    const std::vector<std::vector<std::size_t>> loop{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup("loop", {"e", "a", "b", "c", "d"}, loop), GroupError);
}

TEST_CASE("generator closure respects the cap") {
    const auto gens = parse_cycle_list("(12), (12345)", 5);
    CHECK_THROWS_AS(group_from_generators("S5", 5, gens, 24), CapExceeded);
    CHECK(group_from_generators("S5", 5, gens, 200).order() == 120);
}
