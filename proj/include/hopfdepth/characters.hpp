#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfdepth/group.hpp"
#include "hopfdepth/hopf_algebra.hpp"

namespace hopfdepth {

/// A linear functional on an algebra, given by its values on the basis.
class Character {
public:
    Character(HopfAlgebraPtr parent, Vector values);

    const HopfAlgebraPtr& parent() const noexcept { return parent_; }
    const Vector& values() const noexcept { return values_; }
    /// Value on 1.
    const Scalar& degree() const noexcept { return degree_; }
    Scalar operator()(const Vector& x) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.parent_ == b.parent_ && a.values_ == b.values_;
    }
    friend Character operator+(const Character& a, const Character& b);
    Character scaled(const Scalar& c) const;

private:
    HopfAlgebraPtr parent_;
    Vector values_;
    Scalar degree_;
};

/// The trivial character ε.
Character counit_character(const HopfAlgebraPtr& h);

/// (χψ)(h) = Σ χ(h₁)ψ(h₂). Throws Error on parent mismatch.
Character char_mul(const Character& chi, const Character& psi);

/// χ∘S
Character char_star(const Character& chi);

/// m(χ, ψ) = (χ∘S · ψ)(Λ). For ψ = ε this is χ(Λ). Throws CharacterError
/// unless the value is a non-negative rational integer.
std::int64_t multiplicity(const Character& chi, const Character& psi, const AlgebraElement& lambda);

/// t_H(b) = trace of left multiplication by b.
Character regular_character(const HopfAlgebraPtr& h);

/// Irreducible characters of one algebra, sorted by degree and then by
/// value vector (canonical_less, entrywise).
class IrrSet {
public:
    /// Sorts the characters; throws CharacterError if Σ degree² ≠ dim or a
    /// degree is not a positive integer.
    IrrSet(HopfAlgebraPtr parent, std::vector<Character> characters);

    const HopfAlgebraPtr& parent() const noexcept { return parent_; }
    std::size_t size() const noexcept { return chars_.size(); }
    const Character& operator[](std::size_t i) const { return chars_[i]; }
    const std::vector<Character>& characters() const noexcept { return chars_; }
    std::int64_t degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
    /// Index of ε; throws CharacterError if absent.
    std::size_t trivial_index() const;

private:
    HopfAlgebraPtr parent_;
    std::vector<Character> chars_;
    std::vector<std::int64_t> degrees_;
};

using IrrSetPtr = std::shared_ptr<const IrrSet>;

/// Class-function form of a group's character table.
struct CharacterTable {
    std::vector<std::vector<std::size_t>> classes;
    /// class_of[g] = index of the class containing g
    std::vector<std::size_t> class_of;
    /// values[χ][c] on a representative of class c
    std::vector<std::vector<Scalar>> values;
    /// Lifting prime and exponent used by the modular stage.
    std::uint64_t prime = 0;
    std::uint64_t exponent = 0;
};

/// Irreducible characters of G by the modular eigenvector method: integer
/// class-multiplication matrices, joint eigenspace splitting over F_p with
/// p ≡ 1 (mod exp G), and lifting of each value to Q(ζ_e) by counting
/// eigenvalue multiplicities with a discrete Fourier sum over powers of the
/// class representative. Rows are in no particular order.
CharacterTable dixon_character_table(const FiniteGroup& g);

/// Irr(k[G]); `h` must be group_algebra(g) (or any algebra whose basis is G
/// in the same order).
IrrSet irr_group_algebra(const FiniteGroup& g, const HopfAlgebraPtr& h);

/// Irr of an algebra whose basis is a complete set of orthogonal idempotents
/// (such as k^G or its coset subalgebras): the coordinate functionals.
IrrSet irr_idempotent_basis(const HopfAlgebraPtr& h);

/// Irr(k^G) = {χ_g(δ_h) = [g = h]}.
IrrSet irr_dual_group_algebra(const FiniteGroup& g, const HopfAlgebraPtr& h);

}  // namespace hopfdepth
