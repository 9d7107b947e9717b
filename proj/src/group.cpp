#include "hopfdepth/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

// ---- Permutation ----------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x]) throw GroupError("permutation is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> id(degree);
    std::iota(id.begin(), id.end(), 0u);
    return Permutation(std::move(id));
}

Permutation Permutation::from_one_based(const std::vector<std::uint32_t>& images) {
    std::vector<std::uint32_t> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == 0) throw GroupError("one-based permutation contains 0");
        zero[i] = images[i] - 1;
    }
    return Permutation(std::move(zero));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::uint32_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::uint32_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::string Permutation::cycle_string() const {
    const bool compact = images_.size() <= 9;
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::uint32_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == start) continue;
        out += '(';
        std::uint32_t x = start;
        bool first = true;
        do {
            if (!first && !compact) out += ',';
            out += std::to_string(x + 1);
            done[x] = true;
            x = images_[x];
            first = false;
        } while (x != start);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw GroupError("permutation degree mismatch");
    std::vector<std::uint32_t> out(g.degree());
    for (std::uint32_t x = 0; x < out.size(); ++x) out[x] = g.images_[h.images_[x]];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

// ---- cycle-notation parser --------------------------------------------------

namespace {

class CycleParser {
public:
    CycleParser(std::string_view text, std::size_t degree) : s_(text), degree_(degree) {}

    std::vector<Permutation> parse_list() {
        std::vector<Permutation> gens;
        skip_separators();
        while (pos_ < s_.size()) {
            gens.push_back(parse_generator());
            skip_separators();
        }
        return gens;
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void skip_separators() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',' ||
                                    s_[pos_] == ';'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cycle notation: " + what + " at position " + std::to_string(pos_) + " in \"" +
                         std::string(s_) + "\"");
    }

    // generator := cycle+
    Permutation parse_generator() {
        Permutation g = Permutation::identity(degree_);
        if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
        while (pos_ < s_.size() && s_[pos_] == '(') {
            g = g * parse_cycle();
            skip_space();
        }
        return g;
    }

    // cycle := '(' ')' | '(' point (',' point)* ')' | '(' digit+ ')'
    Permutation parse_cycle() {
        ++pos_;
        const std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unterminated cycle");
        std::string_view body = s_.substr(pos_, close - pos_);
        std::vector<std::uint32_t> points;
        if (body.find(',') != std::string_view::npos) {
            std::size_t i = 0;
            while (i <= body.size()) {
                std::size_t j = body.find(',', i);
                if (j == std::string_view::npos) j = body.size();
                points.push_back(parse_point(body.substr(i, j - i)));
                i = j + 1;
            }
        } else {
            for (char c : body) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                if (!std::isdigit(static_cast<unsigned char>(c))) fail("unexpected character");
                points.push_back(parse_point(std::string_view(&c, 1)));
            }
        }
        pos_ = close + 1;
        std::vector<std::uint32_t> images(degree_);
        std::iota(images.begin(), images.end(), 0u);
        std::set<std::uint32_t> distinct(points.begin(), points.end());
        if (distinct.size() != points.size()) fail("repeated point in cycle");
        for (std::size_t i = 0; i < points.size(); ++i) images[points[i]] = points[(i + 1) % points.size()];
        return Permutation(std::move(images));
    }

    std::uint32_t parse_point(std::string_view tok) {
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (tok.empty()) fail("empty point");
        std::uint64_t v = 0;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("non-numeric point");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (v == 0 || v > degree_) fail("point " + std::string(tok) + " out of range 1.." + std::to_string(degree_));
        return static_cast<std::uint32_t>(v - 1);
    }

    std::string_view s_;
    std::size_t degree_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Permutation> parse_cycle_list(std::string_view text, std::size_t degree) {
    return CycleParser(text, degree).parse_list();
}

// ---- FiniteGroup --------------------------------------------------------------

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels,
                         std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw GroupError("group must have at least one element");
    if (labels_.size() != n) throw GroupError("label count does not match group order");
    for (const auto& row : table_) {
        if (row.size() != n) throw GroupError("Cayley table is not square");
        std::vector<bool> seen(n, false);
        for (auto x : row) {
            if (x >= n || seen[x]) throw GroupError("Cayley table is not a Latin square");
            seen[x] = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[table_[i][j]]) throw GroupError("Cayley table is not a Latin square");
            seen[table_[i][j]] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a) throw GroupError("element 0 is not the identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == 0) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (table_[inverse_[a]][a] != 0) throw GroupError("inverses are not two-sided");
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw GroupError("Cayley table is not associative");
    }
}

std::size_t FiniteGroup::power(std::size_t a, std::int64_t k) const {
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    std::size_t r = identity();
    std::size_t base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
}

std::uint64_t FiniteGroup::exponent() const {
    std::uint64_t e = 1;
    for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, static_cast<std::uint64_t>(element_order(a)));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
    if (!perms_) return std::nullopt;
    for (std::size_t i = 0; i < perms_->size(); ++i)
        if ((*perms_)[i] == p) return i;
    return std::nullopt;
}

void FiniteGroup::set_permutations(std::vector<Permutation> perms) {
    if (perms.size() != order()) throw GroupError("permutation list does not match group order");
    perms_ = std::move(perms);
}

FiniteGroup group_from_generators(std::string name, std::size_t degree, const std::vector<Permutation>& generators,
                                  std::size_t order_cap) {
    for (const auto& g : generators)
        if (g.degree() != degree) throw GroupError("generator degree does not match " + std::to_string(degree));
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::map<Permutation, std::size_t> index{{elements[0], 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            Permutation y = elements[head] * g;
            if (index.contains(y)) continue;
            if (elements.size() >= order_cap)
                throw CapExceeded("group closure exceeds order cap " + std::to_string(order_cap));
            index.emplace(y, elements.size());
            elements.push_back(std::move(y));
        }
    }
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(elements[a] * elements[b]);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements) labels.push_back(p.cycle_string());
    FiniteGroup group(std::move(name), std::move(labels), std::move(table));
    group.set_permutations(std::move(elements));
    return group;
}

// ---- subgroups ------------------------------------------------------------------

bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
    if (elements.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (auto x : elements) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    if (!in[g.identity()]) return false;
    for (auto a : elements) {
        if (!in[g.inverse(a)]) return false;
        for (auto b : elements)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

void verify_subgroup(const FiniteGroup& g, const Subgroup& s) {
    if (!std::is_sorted(s.elements.begin(), s.elements.end()) ||
        std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end())
        throw GroupError("subgroup element list must be sorted and duplicate-free");
    if (!is_subgroup(g, s.elements)) throw GroupError("element list is not a subgroup of " + g.name());
}

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
    std::vector<bool> in(g.order(), false);
    std::vector<std::size_t> elems{g.identity()};
    in[g.identity()] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (auto s : generators) {
            const std::size_t y = g.mul(elems[head], s);
            if (!in[y]) {
                in[y] = true;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems)};
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
    std::vector<bool> in(g.order(), false);
    for (auto x : s.elements) in[x] = true;
    for (std::size_t h = 0; h < g.order(); ++h)
        for (auto x : s.elements)
            if (!in[g.mul(g.mul(h, x), g.inverse(h))]) return false;
    return true;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t order_cap) {
    if (g.order() > order_cap)
        throw CapExceeded("subgroup enumeration: |G| = " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(order_cap));
    std::set<Subgroup> found{generate_subgroup(g, {})};
    std::deque<Subgroup> frontier{*found.begin()};
    while (!frontier.empty()) {
        Subgroup h = std::move(frontier.front());
        frontier.pop_front();
        std::vector<bool> in(g.order(), false);
        for (auto x : h.elements) in[x] = true;
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (in[x]) continue;
            auto gens = h.elements;
            gens.push_back(x);
            Subgroup ext = generate_subgroup(g, gens);
            if (found.insert(ext).second) frontier.push_back(std::move(ext));
        }
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<bool> done(g.order(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (done[x]) continue;
        std::set<std::size_t> orbit;
        for (std::size_t h = 0; h < g.order(); ++h) orbit.insert(g.mul(g.mul(h, x), g.inverse(h)));
        for (auto y : orbit) done[y] = true;
        classes.emplace_back(orbit.begin(), orbit.end());
    }
    return classes;
}

std::vector<std::vector<std::size_t>> left_cosets(const FiniteGroup& g, const Subgroup& n) {
    std::vector<bool> done(g.order(), false);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (done[x]) continue;
        std::vector<std::size_t> c;
        for (auto y : n.elements) c.push_back(g.mul(x, y));
        std::sort(c.begin(), c.end());
        for (auto y : c) done[y] = true;
        cosets.push_back(std::move(c));
    }
    return cosets;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name) {
    verify_subgroup(g, s);
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < s.elements.size(); ++i) local[s.elements[i]] = i;
    const std::size_t n = s.order();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(g.labels()[s.elements[i]]);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = local.at(g.mul(s.elements[i], s.elements[j]));
    }
    FiniteGroup sub(std::move(name), std::move(labels), std::move(table));
    if (g.permutations()) {
        std::vector<Permutation> perms;
        for (auto x : s.elements) perms.push_back((*g.permutations())[x]);
        sub.set_permutations(std::move(perms));
    }
    return sub;
}

}  // namespace hopfdepth
