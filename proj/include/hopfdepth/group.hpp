#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfdepth {

/// Permutation of {0, …, degree-1} in one-line form (images). Composition
/// follows function notation: (g * h)(x) = g(h(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);  // throws GroupError if not a bijection
    static Permutation identity(std::size_t degree);
    /// From 1-based one-line images, as in group input files.
    static Permutation from_one_based(const std::vector<std::uint32_t>& images);

    std::size_t degree() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycle notation on 1-based points; "()" for the identity. Points are
    /// written without separators when the degree is at most 9.
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& g, const Permutation& h);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

/// Parses a list of generators in cycle notation, e.g. "(1,2)(3,4), (1,3)"
/// or "(12)(34);(13)". Generators are separated by ',' or ';' or whitespace
/// outside parentheses. Inside a cycle, points are separated by commas, or
/// written as single digits when no comma is present.
std::vector<Permutation> parse_cycle_list(std::string_view text, std::size_t degree);

/// Finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
public:
    /// Validates the table: Latin square, identity, inverses, and
    /// associativity (exhaustive up to order 64).
    FiniteGroup(std::string name, std::vector<std::string> labels,
                std::vector<std::vector<std::size_t>> table);

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return table_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t identity() const noexcept { return 0; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t power(std::size_t a, std::int64_t k) const;
    std::size_t element_order(std::size_t a) const;
    /// Least common multiple of element orders.
    std::uint64_t exponent() const;
    bool is_abelian() const;
    const std::vector<std::vector<std::size_t>>& cayley_table() const noexcept { return table_; }

    /// Present for groups built from permutations.
    const std::optional<std::vector<Permutation>>& permutations() const noexcept { return perms_; }
    std::optional<std::size_t> index_of(const Permutation& p) const;

    void set_permutations(std::vector<Permutation> perms);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::optional<std::vector<Permutation>> perms_;
};

/// Closure of the generators under composition, breadth first. Elements are
/// numbered in discovery order with the identity first.
FiniteGroup group_from_generators(std::string name, std::size_t degree,
                                  const std::vector<Permutation>& generators,
                                  std::size_t order_cap = 1024);

/// A subgroup as a sorted list of element indices of its parent.
struct Subgroup {
    std::vector<std::size_t> elements;

    std::size_t order() const noexcept { return elements.size(); }
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

bool is_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements);
/// Throws GroupError unless `s` is a subgroup of `g`.
void verify_subgroup(const FiniteGroup& g, const Subgroup& s);
Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& generators);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

/// All subgroups by cyclic extension from the trivial subgroup, sorted by
/// (order, element list).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t order_cap = 24);

/// Orbits of conjugation; each class sorted, classes ordered by their
/// smallest element (so the identity class comes first).
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Left cosets gN, each sorted, ordered by smallest element.
std::vector<std::vector<std::size_t>> left_cosets(const FiniteGroup& g, const Subgroup& n);

/// The subgroup as a group in its own right, with elements in the order of
/// `s.elements` and labels inherited from the parent.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s, std::string name);

}  // namespace hopfdepth
