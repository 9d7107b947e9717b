#include "hopfdepth/serialize.hpp"

#include "hopfdepth/errors.hpp"
#include "json.hpp"

namespace hopfdepth {
namespace {

using json = nlohmann::ordered_json;

std::string emit(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json scalar_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& q : c.coefficients()) coeffs.push_back(to_fraction_string(q));
    return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic scalar_from(const json& j) {
    const auto order = j.at("order").get<std::uint32_t>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    if (order == 0) throw ParseError("scalar order must be positive");
    if (coeffs.size() > order) throw ParseError("scalar has more coefficients than its order");
    return Cyclotomic::from_polynomial(order, coeffs);
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

json partition_json(const ClassPartition& p) {
    return json{{"classes_h", p.classes_h},
                {"classes_k", p.classes_k},
                {"a_sizes", p.a_sizes},
                {"k_sizes", p.k_sizes},
                {"well_defined", p.well_defined}};
}

template <class T>
json optional_json(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

json verdict_json(const Verdict& v) {
    json witnesses = json::array();
    for (const auto& w : v.witnesses)
        witnesses.push_back(json{{"alpha", w.alpha}, {"chi", w.chi}, {"up_down_up", w.up_down_up}, {"up", w.up}});
    json formulas = nullptr;
    if (v.formulas) {
        json failures = json::array();
        for (const auto& f : v.formulas->failures)
            failures.push_back(json{{"identity", f.identity}, {"class", f.class_index}, {"character", f.character}});
        formulas = json{{"restriction_checks", v.formulas->restriction_checks},
                        {"induction_checks", v.formulas->induction_checks},
                        {"proportionality_checks", v.formulas->proportionality_checks},
                        {"failures", std::move(failures)}};
    }
    return json{{"id", v.pair_id},
                {"depth_two", v.depth_two},
                {"lemma", v.lemma},
                {"central_integral", v.central_integral},
                {"adjoint_stable", v.adjoint_stable},
                {"ideal_equal", v.ideal_equal},
                {"minimal_n", optional_json(v.minimal_n)},
                {"witnesses", std::move(witnesses)},
                {"vanishing_step", optional_json(v.vanishing_step)},
                {"integral_values", optional_json(v.integral_values)},
                {"regular_induction", v.regular_induction},
                {"partition", partition_json(v.partition)},
                {"formulas", std::move(formulas)},
                {"pass", v.pass}};
}

}  // namespace

std::string scalar_to_json(const Cyclotomic& c) { return emit(scalar_json(c)); }

Cyclotomic scalar_from_json(std::string_view text) {
    try {
        return scalar_from(parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad scalar: ") + e.what());
    }
}

std::string dump_algebra(const HopfAlgebra& h) {
    const std::size_t d = h.dimension();
    json mult = json::array(), comult = json::array(), antipode = json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : h.product(i, j)) mult.push_back(json{i, j, t.index, scalar_json(t.value)});
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : h.coproduct(i)) comult.push_back(json{i, t.left, t.right, scalar_json(t.value)});
    for (std::size_t i = 0; i < d; ++i)
        for (const auto& t : h.antipode(i)) antipode.push_back(json{i, t.index, scalar_json(t.value)});
    return emit(json{{"name", h.name()},
                     {"dimension", d},
                     {"labels", h.labels()},
                     {"mult", std::move(mult)},
                     {"comult", std::move(comult)},
                     {"counit", vector_json(h.data().counit)},
                     {"unit", vector_json(h.unit())},
                     {"antipode", std::move(antipode)}});
}

HopfAlgebraPtr load_algebra(std::string_view text) {
    const json j = parse(text);
    try {
        const auto d = j.at("dimension").get<std::size_t>();
        HopfData data;
        data.labels = j.at("labels").get<std::vector<std::string>>();
        data.mult.assign(d * d, {});
        data.comult.assign(d, {});
        data.antipode.assign(d, {});
        auto index = [d](const json& x) {
            const auto i = x.get<std::size_t>();
            if (i >= d) throw ParseError("basis index out of range: " + std::to_string(i));
            return i;
        };
        for (const auto& e : j.at("mult")) {
            const std::size_t a = index(e.at(0)), b = index(e.at(1));
            data.mult[a * d + b].push_back({index(e.at(2)), scalar_from(e.at(3))});
        }
        for (const auto& e : j.at("comult")) data.comult[index(e.at(0))].push_back({index(e.at(1)), index(e.at(2)), scalar_from(e.at(3))});
        for (const auto& e : j.at("antipode")) data.antipode[index(e.at(0))].push_back({index(e.at(1)), scalar_from(e.at(2))});
        for (const auto& c : j.at("counit")) data.counit.push_back(scalar_from(c));
        for (const auto& c : j.at("unit")) data.unit.push_back(scalar_from(c));
        return std::make_shared<const HopfAlgebra>(std::move(data), j.value("name", std::string{}));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad algebra dump: ") + e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(std::string("bad algebra dump: ") + e.what());
    }
}

std::string dump_character_table(const IrrSet& irr) {
    json chars = json::array();
    for (std::size_t i = 0; i < irr.size(); ++i)
        chars.push_back(json{{"degree", irr.degree(i)}, {"values", vector_json(irr[i].values())}});
    return emit(json{{"algebra", irr.parent()->name()}, {"labels", irr.parent()->labels()}, {"characters", std::move(chars)}});
}

std::string verdict_to_json(const Verdict& v) { return emit(verdict_json(v)); }

std::string survey_to_json(const SurveyReport& report) {
    json records = json::array();
    for (const auto& r : report.records) {
        json rec{{"id", r.id},         {"group", r.group}, {"kind", r.kind},        {"subgroup", r.subgroup},
                 {"dim_h", r.dim_h},   {"dim_k", r.dim_k}, {"problems", r.problems}};
        if (r.internal_error.empty())
            rec["verdict"] = verdict_json(r.verdict);
        else
            rec["internal_error"] = r.internal_error;
        records.push_back(std::move(rec));
    }
    return emit(json{{"summary",
                      {{"pairs", report.pairs},
                       {"normal", report.normal},
                       {"depth_two", report.depth_two},
                       {"agreements", report.agreements},
                       {"failures", report.failures.size()},
                       {"internal_errors", report.internal_errors}}},
                     {"failures", report.failures},
                     {"records", std::move(records)}});
}

}  // namespace hopfdepth
