#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopfdepth/rational.hpp"

namespace hopfdepth {

/// Exact element of the cyclotomic field Q(ζ_n).
///
/// A value is stored as its coordinates in the power basis 1, ζ, …, ζ^{φ(n)-1}
/// modulo the n-th cyclotomic polynomial, where n is always the *minimal*
/// conductor of the value. Every constructor and every arithmetic result is
/// brought to this form, so two values are equal iff their (order,
/// coefficients) pairs are identical. Values of different orders combine by
/// embedding both into Q(ζ_lcm) first.
///
/// Instances are immutable values. Internal per-thread tables (cyclotomic
/// polynomials, embedding projections) are memoized; they hold no observable
/// state.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1) {}
    Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT(implicit)
    Cyclotomic(const Rational& value) : order_(1), coeffs_{value} { coeffs_[0].canonicalize(); }  // NOLINT(implicit)

    /// Build from power-basis coordinates over Q(ζ_n); `coeffs` may be any
    /// length and is read as a polynomial in ζ_n (reduced mod Φ_n).
    static Cyclotomic from_polynomial(std::uint32_t n, std::span<const Rational> coeffs);

    /// ζ_n^k, for any integer k.
    static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);

    std::uint32_t order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return order_ == 1 && coeffs_[0] == 0; }
    bool is_rational() const noexcept { return order_ == 1; }
    /// Precondition: is_rational().
    const Rational& rational() const;

    /// Coordinates of this value in the power basis of Q(ζ_n); requires
    /// order() | n.
    std::vector<Rational> coefficients_in(std::uint32_t n) const;

    Cyclotomic operator-() const;
    Cyclotomic inverse() const;  // throws DivisionByZero

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Image of ζ_n as exp(2πi/n). Debug embedding only.
    std::complex<double> to_complex() const;

    /// Human-readable form such as "-1-z3" or "1/2*z8+z8^3".
    std::string to_string() const;

private:
    Cyclotomic(std::uint32_t order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    /// Reduce a power-basis vector of Q(ζ_n) to its minimal conductor.
    static Cyclotomic canonical(std::uint32_t n, std::vector<Rational> coeffs);

    std::uint32_t order_;
    std::vector<Rational> coeffs_;
};

/// Total order used for deterministic sorting: rationals (descending by
/// value) before irrationals, irrationals by (order, coefficients).
bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t n);

/// Integer coefficients of Φ_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

}  // namespace hopfdepth
