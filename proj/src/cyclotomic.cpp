#include "hopfdepth/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hopfdepth/errors.hpp"
#include "hopfdepth/linalg.hpp"

namespace hopfdepth {
namespace {

// Embedding Q(ζ_m) ⊆ Q(ζ_n) in reduced echelon form: a vector x of Q(ζ_n)
// lies in the image iff x equals (x at pivots)·rows; then (x at pivots)·transform
// are its Q(ζ_m) coordinates.
struct Projection {
    std::vector<std::size_t> pivots;
    Matrix<Rational> rows;
    Matrix<Rational> transform;
};

struct FieldData {
    std::uint32_t n = 1;
    std::uint32_t phi = 1;
    // powers[k] = ζ_n^k in the power basis, 0 <= k < n
    std::vector<std::vector<Rational>> powers;
    std::map<std::uint32_t, Projection> projections;
};

FieldData& field(std::uint32_t n);

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint32_t n) {
    // x^n - 1 divided by Φ_d for every proper divisor d
    std::vector<std::int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<std::int64_t> q(num.size() - dd, 0);
        for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
            const std::int64_t c = num[i];
            q[i - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
            if (i == dd) break;
        }
        num = std::move(q);
    }
    return num;
}

FieldData build_field(std::uint32_t n) {
    FieldData f;
    f.n = n;
    f.phi = euler_phi(n);
    const auto poly = cyclotomic_polynomial(n);
    f.powers.assign(n, std::vector<Rational>(f.phi));
    std::vector<Rational> cur(f.phi);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        f.powers[k] = cur;
        // multiply by ζ, then eliminate ζ^φ with the monic relation Φ_n(ζ) = 0
        Rational top = cur[f.phi - 1];
        for (std::uint32_t i = f.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::uint32_t i = 0; i < f.phi; ++i) cur[i] -= top * poly[i];
    }
    return f;
}

FieldData& field(std::uint32_t n) {
    thread_local std::map<std::uint32_t, std::unique_ptr<FieldData>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<FieldData>(build_field(n))).first;
    return *it->second;
}

const Projection& projection(FieldData& big, std::uint32_t m) {
    auto it = big.projections.find(m);
    if (it != big.projections.end()) return it->second;
    const std::uint32_t step = big.n / m;
    const std::uint32_t phi_m = euler_phi(m);
    Matrix<Rational> e(phi_m);
    for (std::uint32_t j = 0; j < phi_m; ++j) e[j] = big.powers[(j * step) % big.n];
    auto ech = row_echelon(std::move(e), big.phi, true);
    Projection p{std::move(ech.pivots), std::move(ech.rows), std::move(ech.transform)};
    return big.projections.emplace(m, std::move(p)).first->second;
}

std::vector<Rational> embed(std::uint32_t from, const std::vector<Rational>& c, std::uint32_t to) {
    if (from == to) return c;
    FieldData& big = field(to);
    const std::uint32_t step = to / from;
    std::vector<Rational> out(big.phi);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) axpy(out, c[j], big.powers[(j * step) % to]);
    return out;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
    std::uint32_t result = n;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw Error("cyclotomic polynomial of order 0");
    thread_local std::map<std::uint32_t, std::vector<std::int64_t>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic_polynomial(n)).first;
    return it->second;
}

Cyclotomic Cyclotomic::canonical(std::uint32_t n, std::vector<Rational> coeffs) {
    bool rational = true;
    for (std::size_t j = 1; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) {
            rational = false;
            break;
        }
    if (rational) return Cyclotomic(coeffs[0]);

    FieldData& big = field(n);
    for (std::uint32_t m = 3; m < n; ++m) {
        if (n % m != 0 || m % 4 == 2) continue;
        const Projection& p = projection(big, m);
        std::vector<Rational> at_pivots(p.pivots.size());
        for (std::size_t r = 0; r < p.pivots.size(); ++r) at_pivots[r] = coeffs[p.pivots[r]];
        std::vector<Rational> image(big.phi);
        for (std::size_t r = 0; r < at_pivots.size(); ++r) axpy(image, at_pivots[r], p.rows[r]);
        if (image != coeffs) continue;
        std::vector<Rational> small(p.pivots.size());
        for (std::size_t r = 0; r < at_pivots.size(); ++r) axpy(small, at_pivots[r], p.transform[r]);
        return Cyclotomic(m, std::move(small));
    }
    return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_polynomial(std::uint32_t n, std::span<const Rational> coeffs) {
    if (n == 0) throw Error("cyclotomic order must be positive");
    FieldData& f = field(n);
    std::vector<Rational> out(f.phi);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Rational c = coeffs[k];
        c.canonicalize();
        if (c != 0) axpy(out, c, f.powers[k % n]);
    }
    return canonical(n, std::move(out));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
    if (n == 0) throw Error("root of unity of order 0");
    std::int64_t r = k % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return canonical(n, field(n).powers[static_cast<std::size_t>(r)]);
}

const Rational& Cyclotomic::rational() const {
    if (order_ != 1) throw Error("cyclotomic value is not rational: " + to_string());
    return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coefficients_in(std::uint32_t n) const {
    if (n == 0 || n % order_ != 0)
        throw Error("coefficients_in: conductor " + std::to_string(order_) + " does not divide " +
                    std::to_string(n));
    return embed(order_, coeffs_, n);
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 && b.order_ == 1) return Cyclotomic(Rational(a.coeffs_[0] + b.coeffs_[0]));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint32_t n = lcm32(a.order_, b.order_);
    auto x = embed(a.order_, a.coeffs_, n);
    const auto y = embed(b.order_, b.coeffs_, n);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return Cyclotomic::canonical(n, std::move(x));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == 1 || b.order_ == 1) {
        const Cyclotomic& scalar = a.order_ == 1 ? a : b;
        const Cyclotomic& other = a.order_ == 1 ? b : a;
        const Rational& s = scalar.coeffs_[0];
        if (s == 0) return Cyclotomic();
        std::vector<Rational> c = other.coeffs_;
        for (auto& x : c) x *= s;
        return Cyclotomic(other.order_, std::move(c));
    }
    const std::uint32_t n = lcm32(a.order_, b.order_);
    const auto x = embed(a.order_, a.coeffs_, n);
    const auto y = embed(b.order_, b.coeffs_, n);
    FieldData& f = field(n);
    std::vector<Rational> out(f.phi);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            axpy(out, Rational(x[i] * y[j]), f.powers[(i + j) % n]);
        }
    }
    return Cyclotomic::canonical(n, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (order_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
    // Solve x·M = e_0 where row j of M is this·ζ^j.
    FieldData& f = field(order_);
    Matrix<Rational> m(f.phi, std::vector<Rational>(f.phi));
    for (std::uint32_t j = 0; j < f.phi; ++j)
        for (std::uint32_t i = 0; i < f.phi; ++i)
            if (coeffs_[i] != 0) axpy(m[j], coeffs_[i], f.powers[(i + j) % order_]);
    auto e = row_echelon(std::move(m), f.phi, true);
    return Cyclotomic(order_, std::move(e.transform[0]));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
        z += coeffs_[j].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        std::string term;
        if (j == 0) {
            term = c.get_str();
        } else {
            if (c == 1)
                term.clear();
            else if (c == -1)
                term = "-";
            else
                term = c.get_str() + "*";
            term += "z" + std::to_string(order_);
            if (j > 1) term += "^" + std::to_string(j);
        }
        if (!first && term.front() != '-') os << '+';
        os << term;
        first = false;
    }
    return os.str();
}

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() != b.is_rational()) return a.is_rational();
    if (a.is_rational()) return a.rational() > b.rational();
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

}  // namespace hopfdepth
