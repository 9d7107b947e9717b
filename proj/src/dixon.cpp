#include <algorithm>

#include "hopfdepth/characters.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/prime_field.hpp"

namespace hopfdepth {
namespace {

using ModRow = std::vector<std::uint64_t>;
using ModMatrix = std::vector<ModRow>;

/// Basis of {c : A c = 0} over F_p, A given as rows.
ModMatrix mod_nullspace(ModMatrix a, std::size_t cols, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const std::uint64_t inv = f.inv(a[r][c]);
        for (auto& x : a[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const std::uint64_t factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    ModMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ModRow v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, a[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Splits `space` (rows spanning an invariant subspace of F_p^r) into the
/// eigenspaces of `m` acting on column vectors.
std::vector<ModMatrix> split_space(const ModMatrix& space, const ModMatrix& m, const PrimeField& f) {
    const std::size_t r = m.size();
    const std::size_t s = space.size();
    // image[t] = m · space[t]
    ModMatrix image(s, ModRow(r, 0));
    for (std::size_t t = 0; t < s; ++t)
        for (std::size_t i = 0; i < r; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < r; ++j) acc = f.add(acc, f.mul(m[i][j], space[t][j]));
            image[t][i] = acc;
        }
    std::vector<ModMatrix> parts;
    std::size_t found = 0;
    for (std::uint64_t lambda = 0; lambda < f.p && found < s; ++lambda) {
        // columns t of A: (m − λ)·space[t]
        ModMatrix a(r, ModRow(s, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t t = 0; t < s; ++t) a[i][t] = f.sub(image[t][i], f.mul(lambda, space[t][i]));
        const ModMatrix kernel = mod_nullspace(std::move(a), s, f);
        if (kernel.empty()) continue;
        ModMatrix part;
        for (const auto& c : kernel) {
            ModRow v(r, 0);
            for (std::size_t t = 0; t < s; ++t)
                if (c[t] != 0)
                    for (std::size_t i = 0; i < r; ++i) v[i] = f.add(v[i], f.mul(c[t], space[t][i]));
            part.push_back(std::move(v));
        }
        found += part.size();
        parts.push_back(std::move(part));
    }
    if (found != s) throw CharacterError("class matrix is not diagonalizable over F_" + std::to_string(f.p));
    return parts;
}

}  // namespace

CharacterTable dixon_character_table(const FiniteGroup& g) {
    CharacterTable table;
    table.classes = conjugacy_classes(g);
    const std::size_t r = table.classes.size();
    const std::size_t n = g.order();
    table.class_of.assign(n, 0);
    for (std::size_t c = 0; c < r; ++c)
        for (auto x : table.classes[c]) table.class_of[x] = c;

    const std::uint64_t e = g.exponent();
    const std::uint64_t p = find_lifting_prime(e, n);
    table.exponent = e;
    table.prime = p;
    const PrimeField f{p};

    // a[j][k][l] = #{x ∈ C_j : x⁻¹·g_l ∈ C_k}; M_j has entries (k, l).
    std::vector<ModMatrix> class_matrix(r, ModMatrix(r, ModRow(r, 0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t l = 0; l < r; ++l) {
            const std::size_t gl = table.classes[l].front();
            for (auto x : table.classes[j]) {
                const std::size_t k = table.class_of[g.mul(g.inverse(x), gl)];
                ++class_matrix[j][k][l];
            }
        }
    for (auto& m : class_matrix)
        for (auto& row : m)
            for (auto& v : row) v %= p;

    // Joint eigenspaces of all class matrices.
    ModMatrix identity(r, ModRow(r, 0));
    for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
    std::vector<ModMatrix> spaces{identity};
    for (std::size_t j = 1; j < r; ++j) {
        if (std::all_of(spaces.begin(), spaces.end(), [](const ModMatrix& s) { return s.size() == 1; })) break;
        std::vector<ModMatrix> next;
        for (const auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(s);
                continue;
            }
            for (auto& part : split_space(s, class_matrix[j], f)) next.push_back(std::move(part));
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r)
        throw CharacterError("class algebra did not split over F_" + std::to_string(p) + " for " + g.name());

    std::vector<std::size_t> inverse_class(r);
    for (std::size_t c = 0; c < r; ++c) inverse_class[c] = table.class_of[g.inverse(table.classes[c].front())];

    const std::uint64_t z = f.pow(f.primitive_root(), (p - 1) / e);
    const std::uint64_t e_inv = f.inv(e % p);

    for (const auto& s : spaces) {
        ModRow w = s.front();
        if (w[0] == 0) throw CharacterError("central character vanishes on the identity class");
        const std::uint64_t w0 = f.inv(w[0]);
        for (auto& x : w) x = f.mul(x, w0);

        // χ(1)² = |G| / Σ_l w_l·w_{l*}/|C_l|
        std::uint64_t norm = 0;
        for (std::size_t l = 0; l < r; ++l)
            norm = f.add(norm, f.mul(f.mul(w[l], w[inverse_class[l]]), f.inv(table.classes[l].size() % p)));
        const std::uint64_t deg_sq = f.mul(n % p, f.inv(norm));
        std::uint64_t degree = 0;
        for (std::uint64_t d = 1; 2 * d < p; ++d)
            if (f.mul(d, d) == deg_sq) {
                degree = d;
                break;
            }
        if (degree == 0) throw CharacterError("no degree lifts the modular character of " + g.name());

        ModRow theta(r);
        for (std::size_t l = 0; l < r; ++l) theta[l] = f.mul(f.mul(degree, w[l]), f.inv(table.classes[l].size() % p));

        std::vector<Scalar> values(r);
        for (std::size_t l = 0; l < r; ++l) {
            const std::size_t rep = table.classes[l].front();
            // multiplicity of ζ_e^k among the eigenvalues of ρ(rep)
            std::vector<Rational> counts(e);
            std::uint64_t total = 0;
            for (std::uint64_t k = 0; k < e; ++k) {
                std::uint64_t acc = 0;
                for (std::uint64_t t = 0; t < e; ++t) {
                    const std::uint64_t cls = table.class_of[g.power(rep, static_cast<std::int64_t>(t))];
                    const std::uint64_t root = f.pow(z, (e - (k * t) % e) % e);
                    acc = f.add(acc, f.mul(theta[cls], root));
                }
                const std::uint64_t m = f.mul(acc, e_inv);
                if (m > degree) throw CharacterError("eigenvalue multiplicity out of range for " + g.name());
                counts[k] = static_cast<long>(m);
                total += m;
            }
            if (total != degree) throw CharacterError("eigenvalue multiplicities do not sum to the degree");
            values[l] = Cyclotomic::from_polynomial(static_cast<std::uint32_t>(e), counts);
        }
        table.values.push_back(std::move(values));
    }
    return table;
}

}  // namespace hopfdepth
