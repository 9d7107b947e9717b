#include "hopfdepth/characters.hpp"

#include <algorithm>
#include <numeric>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

Character::Character(HopfAlgebraPtr parent, Vector values) : parent_(std::move(parent)), values_(std::move(values)) {
    if (!parent_) throw Error("character without parent algebra");
    if (values_.size() != parent_->dimension()) throw DimensionMismatch("character length does not match dimension");
    degree_ = (*this)(parent_->unit());
}

Scalar Character::operator()(const Vector& x) const {
    if (x.size() != values_.size()) throw DimensionMismatch("character evaluation: vector length");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !values_[i].is_zero()) s += x[i] * values_[i];
    return s;
}

Character operator+(const Character& a, const Character& b) {
    if (a.parent_ != b.parent_) throw Error("character sum: parent mismatch");
    Vector v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return Character(a.parent_, std::move(v));
}

Character Character::scaled(const Scalar& c) const {
    Vector v = values_;
    for (auto& x : v) x *= c;
    return Character(parent_, std::move(v));
}

Character counit_character(const HopfAlgebraPtr& h) { return Character(h, h->data().counit); }

Character char_mul(const Character& chi, const Character& psi) {
    if (chi.parent() != psi.parent()) throw Error("char_mul: parent mismatch");
    const HopfAlgebra& h = *chi.parent();
    Vector v(h.dimension());
    for (std::size_t i = 0; i < h.dimension(); ++i)
        for (const auto& t : h.coproduct(i)) {
            const Scalar& a = chi.values()[t.left];
            const Scalar& b = psi.values()[t.right];
            if (!a.is_zero() && !b.is_zero()) v[i] += t.value * a * b;
        }
    return Character(chi.parent(), std::move(v));
}

Character char_star(const Character& chi) {
    const HopfAlgebra& h = *chi.parent();
    Vector v(h.dimension());
    for (std::size_t i = 0; i < h.dimension(); ++i) v[i] = chi(to_dense(h.antipode(i), h.dimension()));
    return Character(chi.parent(), std::move(v));
}

std::int64_t multiplicity(const Character& chi, const Character& psi, const AlgebraElement& lambda) {
    if (chi.parent() != psi.parent() || chi.parent() != lambda.parent)
        throw Error("multiplicity: characters and integral must share an algebra");
    const Scalar m = char_mul(char_star(chi), psi)(lambda.coords);
    if (!m.is_rational() || !is_integer(m.rational()) || sgn(m.rational()) < 0 || !m.rational().get_num().fits_slong_p())
        throw CharacterError("multiplicity is not a non-negative integer: " + m.to_string());
    return m.rational().get_num().get_si();
}

Character regular_character(const HopfAlgebraPtr& h) {
    Vector v(h->dimension());
    for (std::size_t i = 0; i < h->dimension(); ++i)
        for (std::size_t j = 0; j < h->dimension(); ++j)
            for (const auto& t : h->product(i, j))
                if (t.index == j) v[i] += t.value;
    return Character(h, std::move(v));
}

// ---- IrrSet -----------------------------------------------------------------------

IrrSet::IrrSet(HopfAlgebraPtr parent, std::vector<Character> characters)
    : parent_(std::move(parent)), chars_(std::move(characters)) {
    Integer total = 0;
    std::vector<std::pair<std::int64_t, std::size_t>> keyed;
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        const auto& c = chars_[i];
        if (c.parent() != parent_) throw CharacterError("irreducible character belongs to another algebra");
        const Scalar& d = c.degree();
        if (!d.is_rational() || !is_integer(d.rational()) || sgn(d.rational()) <= 0)
            throw CharacterError("irreducible degree is not a positive integer: " + d.to_string());
        const std::int64_t deg = d.rational().get_num().get_si();
        total += Integer(deg) * deg;
        keyed.push_back({deg, i});
    }
    if (total != static_cast<long>(parent_->dimension()))
        throw CharacterError("sum of squared degrees " + total.get_str() + " != dim " +
                             std::to_string(parent_->dimension()));
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        const auto& x = chars_[a.second].values();
        const auto& y = chars_[b.second].values();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
    });
    std::vector<Character> sorted;
    for (const auto& [deg, i] : keyed) {
        sorted.push_back(chars_[i]);
        degrees_.push_back(deg);
    }
    chars_ = std::move(sorted);
}

std::size_t IrrSet::trivial_index() const {
    const Character eps = counit_character(parent_);
    for (std::size_t i = 0; i < chars_.size(); ++i)
        if (chars_[i] == eps) return i;
    throw CharacterError("trivial character not found in irreducible set");
}

IrrSet irr_group_algebra(const FiniteGroup& g, const HopfAlgebraPtr& h) {
    if (h->dimension() != g.order()) throw DimensionMismatch("group algebra dimension does not match group");
    const CharacterTable table = dixon_character_table(g);
    std::vector<Character> chars;
    for (const auto& row : table.values) {
        Vector v(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) v[x] = row[table.class_of[x]];
        chars.emplace_back(h, std::move(v));
    }
    return IrrSet(h, std::move(chars));
}

IrrSet irr_idempotent_basis(const HopfAlgebraPtr& h) {
    const std::size_t d = h->dimension();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const SparseVector expected = i == j ? SparseVector{{i, Scalar(1)}} : SparseVector{};
            if (h->product(i, j) != expected)
                throw CharacterError("basis is not a complete set of orthogonal idempotents");
        }
    std::vector<Character> chars;
    for (std::size_t i = 0; i < d; ++i) chars.emplace_back(h, h->basis_vector(i));
    return IrrSet(h, std::move(chars));
}

IrrSet irr_dual_group_algebra(const FiniteGroup& g, const HopfAlgebraPtr& h) {
    if (h->dimension() != g.order()) throw DimensionMismatch("dual group algebra dimension does not match group");
    return irr_idempotent_basis(h);
}

}  // namespace hopfdepth
