#include "hopfdepth/constructors.hpp"

#include <algorithm>
#include <map>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

HopfAlgebraPtr group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    HopfData data;
    data.labels = g.labels();
    data.mult.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) data.mult[a * n + b] = {{g.mul(a, b), Scalar(1)}};
    data.comult.resize(n);
    data.antipode.resize(n);
    data.counit.assign(n, Scalar(1));
    data.unit.assign(n, Scalar());
    data.unit[g.identity()] = Scalar(1);
    for (std::size_t a = 0; a < n; ++a) {
        data.comult[a] = {{a, a, Scalar(1)}};
        data.antipode[a] = {{g.inverse(a), Scalar(1)}};
    }
    auto h = std::make_shared<const HopfAlgebra>(std::move(data), "k[" + g.name() + "]");
    require_hopf(*h);
    return h;
}

HopfAlgebraPtr dual_group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    HopfData data;
    for (const auto& l : g.labels()) data.labels.push_back("d" + l);
    data.mult.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) data.mult[a * n + a] = {{a, Scalar(1)}};
    data.comult.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) data.comult[g.mul(a, b)].push_back({a, b, Scalar(1)});
    data.antipode.resize(n);
    data.counit.assign(n, Scalar());
    data.counit[g.identity()] = Scalar(1);
    data.unit.assign(n, Scalar(1));
    for (std::size_t a = 0; a < n; ++a) data.antipode[a] = {{g.inverse(a), Scalar(1)}};
    auto h = std::make_shared<const HopfAlgebra>(std::move(data), "k^" + g.name());
    require_hopf(*h);
    return h;
}

HopfSubalgebra subgroup_subalgebra(const FiniteGroup& g, const Subgroup& s, const HopfAlgebraPtr& h) {
    verify_subgroup(g, s);
    if (h->dimension() != g.order()) throw DimensionMismatch("group algebra dimension does not match group");
    Matrix<Scalar> rows;
    std::vector<std::string> labels;
    for (auto x : s.elements) {
        rows.push_back(h->basis_vector(x));
        labels.push_back(g.labels()[x]);
    }
    return HopfSubalgebra::from_inclusion(h, std::move(rows), std::move(labels),
                                          "k[" + subgroup_label(g, s) + "]");
}

HopfSubalgebra dual_quotient_subalgebra(const FiniteGroup& g, const Subgroup& n, const HopfAlgebraPtr& h) {
    verify_subgroup(g, n);
    if (!is_normal(g, n)) throw NotNormal("subgroup " + subgroup_label(g, n) + " is not normal in " + g.name());
    if (h->dimension() != g.order()) throw DimensionMismatch("dual group algebra dimension does not match group");
    Matrix<Scalar> rows;
    std::vector<std::string> labels;
    for (const auto& coset : left_cosets(g, n)) {
        Vector v(g.order());
        for (auto x : coset) v[x] = Scalar(1);
        rows.push_back(std::move(v));
        labels.push_back("d" + g.labels()[coset.front()] + "N");
    }
    return HopfSubalgebra::from_inclusion(h, std::move(rows), std::move(labels),
                                          "k^(" + g.name() + "/" + subgroup_label(g, n) + ")");
}

namespace {

struct BuiltinSpec {
    const char* name;
    std::size_t degree;
    const char* generators;
};

// Q8 acts regularly on its 8 elements 1,-1,i,-i,j,-j,k,-k.
constexpr BuiltinSpec kBuiltins[] = {
    {"C2", 2, "(12)"},
    {"C3", 3, "(123)"},
    {"C4", 4, "(1234)"},
    {"C6", 6, "(123456)"},
    {"C2xC2", 4, "(12), (34)"},
    {"S3", 3, "(12), (123)"},
    {"D4", 4, "(1234), (13)"},
    {"Q8", 8, "(1324)(5768), (1526)(3847)"},
    {"A4", 4, "(123), (12)(34)"},
    {"S4", 4, "(1234), (12)"},
};

}  // namespace

const std::vector<std::string>& builtin_group_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& b : kBuiltins) v.emplace_back(b.name);
        return v;
    }();
    return names;
}

FiniteGroup builtin_group(std::string_view name) {
    std::string key(name);
    if (key == "C2×C2" || key == "V4") key = "C2xC2";
    for (const auto& b : kBuiltins)
        if (key == b.name) return group_from_generators(b.name, b.degree, parse_cycle_list(b.generators, b.degree));
    throw GroupError("unknown built-in group: " + std::string(name));
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& s) {
    if (s.order() == 1) return "1";
    std::vector<std::size_t> gens;
    Subgroup current = generate_subgroup(g, {});
    for (auto x : s.elements) {
        if (std::binary_search(current.elements.begin(), current.elements.end(), x)) continue;
        gens.push_back(x);
        current = generate_subgroup(g, gens);
        if (current.order() == s.order()) break;
    }
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i > 0) out += ",";
        out += g.labels()[gens[i]];
    }
    return out + ">";
}

}  // namespace hopfdepth
