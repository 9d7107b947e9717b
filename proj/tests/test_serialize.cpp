#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hopfdepth/constructors.hpp"
#include "hopfdepth/corpus.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/serialize.hpp"
#include "json.hpp"

using namespace hopfdepth;
using nlohmann::json;

TEST_CASE("scalar serialization") {
    const Cyclotomic x = Cyclotomic::root_of_unity(8, 3) * Cyclotomic(Rational(-2, 3)) + Cyclotomic(5);
    const std::string text = scalar_to_json(x);
    CHECK(scalar_from_json(text) == x);
    const json j = json::parse(text);
    CHECK(j["order"] == 8);
    CHECK(j["coeffs"][0] == "5/1");
    CHECK(scalar_to_json(Cyclotomic(3)) == "{\n  \"order\": 1,\n  \"coeffs\": [\n    \"3/1\"\n  ]\n}\n");
    // non-minimal input is canonicalized: ζ6 written in order 6
    CHECK(scalar_from_json(R"({"order": 6, "coeffs": ["0/1", "1/1"]})") == -Cyclotomic::root_of_unity(3, 2));
    CHECK_THROWS_AS(scalar_from_json(R"({"order": 0, "coeffs": []})"), ParseError);
    CHECK_THROWS_AS(scalar_from_json("{"), ParseError);
    CHECK_THROWS_AS(scalar_from_json(R"({"order": 3, "coeffs": ["1/0"]})"), Error);
}

TEST_CASE("algebra dumps round-trip exactly") {
    for (const auto& name : builtin_group_names()) {
        CAPTURE(name);
        const FiniteGroup g = builtin_group(name);
        for (const auto& h : {group_algebra(g), dual_group_algebra(g)}) {
            const std::string text = dump_algebra(*h);
            const auto back = load_algebra(text);
            CHECK(back->data() == h->data());
            CHECK(back->name() == h->name());
            CHECK(dump_algebra(*back) == text);
        }
    }
}

TEST_CASE("a tampered dump fails verification") {
    const auto h = group_algebra(builtin_group("C2"));
    json j = json::parse(dump_algebra(*h));
    CHECK(j["dimension"] == 2);
    // b_1·b_1 = 2·b_0 breaks associativity/antipode consistency
    for (auto& e : j["mult"])
        if (e[0] == 1 && e[1] == 1) e[3]["coeffs"][0] = "2/1";
    const auto bad = load_algebra(j.dump());
    CHECK_FALSE(verify_hopf_axioms(*bad).all_passed());

    json k = json::parse(dump_algebra(*dual_group_algebra(builtin_group("S3"))));
    k["counit"][1]["coeffs"][0] = "1/1";
    CHECK_FALSE(verify_hopf_axioms(*load_algebra(k.dump())).all_passed());

    json bad_index = json::parse(dump_algebra(*h));
    bad_index["mult"][0][2] = 7;
    CHECK_THROWS_AS(load_algebra(bad_index.dump()), ParseError);
}

TEST_CASE("character table dump") {
    const FiniteGroup g = builtin_group("S3");
    const auto h = group_algebra(g);
    const IrrSet irr = irr_group_algebra(g, h);
    const json j = json::parse(dump_character_table(irr));
    CHECK(j["labels"].size() == 6);
    REQUIRE(j["characters"].size() == 3);
    CHECK(j["characters"][0]["degree"] == 1);
    CHECK(j["characters"][2]["degree"] == 2);
    CHECK(j["characters"][2]["values"][0]["coeffs"][0] == "2/1");
    CHECK(dump_character_table(irr) == dump_character_table(irr_group_algebra(g, h)));
}

TEST_CASE("verdict record field order") {
    const auto ctx = make_group_context(builtin_group("S3"), false);
    const Verdict v = theorem_check(group_pair(*ctx, 1));
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(verdict_to_json(v));
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"id", "depth_two", "lemma", "central_integral", "adjoint_stable",
                                           "ideal_equal", "minimal_n", "witnesses", "vanishing_step",
                                           "integral_values", "regular_induction", "partition", "formulas", "pass"});
    CHECK(j["minimal_n"].is_null());
    CHECK(j["witnesses"].size() == 2);
}

TEST_CASE("group files") {
    const auto dir = std::filesystem::temp_directory_path() / "hopfdepth_group_files";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "s3.json") << R"({"name": "S3p", "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]})";
        std::ofstream(dir / "z3.json") << R"({"name": "Z3", "cayley": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})";
        std::ofstream(dir / "bad.json") << R"({"name": "X", "cayley": [[0, 1], [1, 1]]})";
        std::ofstream(dir / "corpus.json") << R"({"groups": ["s3.json", "C2"], "include_duals": false})";
    }
    const FiniteGroup s3 = load_group((dir / "s3.json").string());
    CHECK(s3.order() == 6);
    CHECK(s3.name() == "S3p");
    const FiniteGroup z3 = load_group((dir / "z3.json").string());
    CHECK(z3.order() == 3);
    CHECK(z3.is_abelian());
    CHECK_FALSE(z3.permutations().has_value());
    CHECK_THROWS_AS(load_group((dir / "bad.json").string()), GroupError);
    CHECK_THROWS_AS(load_group("no-such-group"), GroupError);

    const CorpusSpec spec = load_corpus_spec((dir / "corpus.json").string());
    CHECK(spec.groups.size() == 2);
    CHECK_FALSE(spec.include_duals);
    const SurveyReport r = run_survey(spec, 2);
    CHECK(r.pairs == 6 + 2);
    CHECK(r.failures.empty());
    CHECK(r.agreements == r.pairs);
}

TEST_CASE("survey reports are deterministic") {
    CorpusSpec spec{{"S3", "C4", "Q8"}, true, 24};
    const std::string a = survey_to_json(run_survey(spec, 1));
    const std::string b = survey_to_json(run_survey(spec, 3));
    CHECK(a == b);
    const json j = json::parse(a);
    CHECK(j["summary"]["pairs"] == 6 + 3 + 3 + 3 + 6 + 6);
    CHECK(j["summary"]["failures"] == 0);
    CHECK(j["records"][0]["id"] == "S3/group/0");
}

TEST_CASE("abelian-only and dual-only surveys") {
    const SurveyReport ab = run_survey(CorpusSpec{{"C2", "C3", "C4", "C6", "C2xC2"}, false, 24}, 1);
    for (const auto& r : ab.records) CHECK((r.verdict.depth_two && r.verdict.central_integral));
    const SurveyReport all = run_survey(default_corpus(), 1);
    CHECK(all.pairs == 78 + 38);
    CHECK(all.failures.empty());
    for (const auto& r : all.records)
        if (r.kind == "dual") CHECK((r.verdict.depth_two && r.verdict.adjoint_stable));
}
