#pragma once

#include <cstdint>

namespace hopfdepth {

bool is_prime(std::uint64_t n);

/// Element of F_p. The modulus travels with the value; mixing moduli throws.
class PrimeFieldElement {
public:
    PrimeFieldElement(std::uint64_t modulus, std::int64_t value);

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t value() const noexcept { return v_; }

    PrimeFieldElement operator-() const { return {p_, v_ == 0 ? 0 : p_ - v_, Raw{}}; }
    PrimeFieldElement inverse() const;  // throws DivisionByZero
    PrimeFieldElement pow(std::uint64_t e) const;

    friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

private:
    struct Raw {};
    PrimeFieldElement(std::uint64_t p, std::uint64_t v, Raw) : p_(p), v_(v) {}
    std::uint64_t p_;
    std::uint64_t v_;
};

/// Arithmetic helpers on raw residues for hot loops.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws DivisionByZero on 0
    std::uint64_t reduce(std::int64_t a) const;
    /// A generator of the multiplicative group.
    std::uint64_t primitive_root() const;
};

/// Smallest prime p with p ≡ 1 (mod exponent) and p > 2·⌈√group_order⌉.
std::uint64_t find_lifting_prime(std::uint64_t exponent, std::uint64_t group_order);

}  // namespace hopfdepth
