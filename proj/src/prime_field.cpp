#include "hopfdepth/prime_field.hpp"

#include <vector>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t modulus, std::int64_t value) : p_(modulus), v_(0) {
    if (!is_prime(modulus)) throw Error("prime field modulus is not prime: " + std::to_string(modulus));
    v_ = PrimeField{modulus}.reduce(value);
}

namespace {
std::uint64_t same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus() != b.modulus()) throw Error("prime field modulus mismatch");
    return a.modulus();
}
}  // namespace

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    const auto p = same_modulus(a, b);
    return {p, PrimeField{p}.add(a.v_, b.v_), PrimeFieldElement::Raw{}};
}

PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    const auto p = same_modulus(a, b);
    return {p, PrimeField{p}.sub(a.v_, b.v_), PrimeFieldElement::Raw{}};
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    const auto p = same_modulus(a, b);
    return {p, PrimeField{p}.mul(a.v_, b.v_), PrimeFieldElement::Raw{}};
}

PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a * b.inverse();
}

PrimeFieldElement PrimeFieldElement::inverse() const { return {p_, PrimeField{p_}.inv(v_), Raw{}}; }

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const { return {p_, PrimeField{p_}.pow(v_, e), Raw{}}; }

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p == 0) throw DivisionByZero();
    return pow(a, p - 2);
}

std::uint64_t PrimeField::reduce(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = a % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::primitive_root() const {
    if (p == 2) return 1;
    std::vector<std::uint64_t> factors;
    std::uint64_t n = p - 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        factors.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) factors.push_back(n);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : factors)
            if (pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root mod " + std::to_string(p));
}

std::uint64_t find_lifting_prime(std::uint64_t exponent, std::uint64_t group_order) {
    if (exponent == 0) throw Error("exponent must be positive");
    std::uint64_t root = 0;
    while (root * root < group_order) ++root;
    const std::uint64_t bound = 2 * root;
    // first p ≡ 1 (mod e) strictly above the bound
    std::uint64_t p = (bound / exponent) * exponent + 1;
    if (p <= bound) p += exponent;
    while (!is_prime(p)) p += exponent;
    return p;
}

}  // namespace hopfdepth
