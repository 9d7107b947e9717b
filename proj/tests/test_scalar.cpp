#include <cmath>
#include <random>

#include "doctest.h"
#include "hopfdepth/cyclotomic.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/prime_field.hpp"

using namespace hopfdepth;

namespace doctest {
template <>
struct StringMaker<Cyclotomic> {
    static String convert(const Cyclotomic& c) { return c.to_string().c_str(); }
};
}  // namespace doctest

namespace {

Cyclotomic z(std::uint32_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_cyclotomic(std::mt19937& rng) {
    static constexpr std::uint32_t orders[] = {1, 3, 4, 5, 8, 12};
    const std::uint32_t n = orders[rng() % std::size(orders)];
    std::vector<Rational> c(n);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 7) - 3, static_cast<unsigned long>(rng() % 3 + 1));
    return Cyclotomic::from_polynomial(n, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic addition") {
    CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
    const Cyclotomic x = z(8, 3) + Cyclotomic(Rational(1, 2));
    CHECK(x + Cyclotomic() == x);
    CHECK(z(5) + z(5, 2) + z(5, 3) + z(5, 4) == Cyclotomic(-1));
}

TEST_CASE("cyclotomic multiplication") {
    CHECK(z(4) * z(4) == Cyclotomic(-1));
    CHECK(z(5) * z(5, 4) == Cyclotomic(1));
    CHECK(Cyclotomic(Rational(2, 3)) * Cyclotomic(Rational(3, 2)) == Cyclotomic(1));
}

TEST_CASE("cyclotomic inverse") {
    CHECK(z(5).inverse() == z(5, 4));
    CHECK(Cyclotomic(-1).inverse() == Cyclotomic(-1));
    CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);

    // Oracle: solve (1+x)(a+bx) ≡ 1 mod x²+x+1 by Cramer's rule.
    // (1+x)(a+bx) = (a-b) + a·x, so [[1,-1],[1,0]]·(a,b) = (1,0).
    const Rational det = Rational(1) * 0 - Rational(-1) * 1;
    const Rational a = (Rational(1) * 0 - Rational(-1) * 0) / det;
    const Rational b = (Rational(1) * 0 - Rational(1) * 1) / det;
    const std::vector<Rational> expected{a, b};
    const Cyclotomic inv = (Cyclotomic(1) + z(3)).inverse();
    CHECK(inv == Cyclotomic::from_polynomial(3, expected));
    CHECK(inv == -z(3));
    CHECK(inv * (Cyclotomic(1) + z(3)) == Cyclotomic(1));
}

TEST_CASE("root of unity reduces to the minimal conductor") {
    CHECK(z(1, 0) == Cyclotomic(1));
    CHECK(z(2, 1) == Cyclotomic(-1));
    // ζ6 = -ζ3² : x ↦ x² embeds Q(ζ3) into Q(ζ6) = Q[x]/(x²-x+1); ζ3² ↦ x⁴ = -x.
    const Cyclotomic zeta6 = z(6, 1);
    CHECK(zeta6.order() == 3);
    CHECK(zeta6 == -z(3, 2));
    CHECK(z(12, 4) == z(3, 1));
    CHECK(z(12, 3) == z(4, 1));
    CHECK(z(10, 5) == Cyclotomic(-1));
    CHECK(z(7, -1) == z(7, 6));
}

TEST_CASE("mixed orders embed into the lcm") {
    const Cyclotomic s = z(3) + z(4);
    CHECK(s.order() == 12);
    CHECK(s - z(4) == z(3));
    // sqrt(-3) = ζ3 - ζ3², its square is -3
    const Cyclotomic r = z(3) - z(3, 2);
    CHECK(r * r == Cyclotomic(-3));
    // i·i = -1 back in Q
    CHECK((z(12, 3) * z(4)).is_rational());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(20241014);
    for (int trial = 0; trial < 150; ++trial) {
        const Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng), c = random_cyclotomic(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Cyclotomic());
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        // debug complex embedding agrees with direct evaluation
        CHECK(close((a * b + c).to_complex(), a.to_complex() * b.to_complex() + c.to_complex()));
        if (!b.is_zero()) CHECK(close((a / b).to_complex(), a.to_complex() / b.to_complex()));
    }
}

TEST_CASE("embedding round trip is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Cyclotomic a = random_cyclotomic(rng);
        for (std::uint32_t m : {1u, 2u, 3u, 5u}) {
            const std::uint32_t big = a.order() * m;
            const auto coords = a.coefficients_in(big);
            CHECK(coords.size() == euler_phi(big));
            CHECK(Cyclotomic::from_polynomial(big, coords) == a);
        }
    }
}

TEST_CASE("canonical order puts larger rationals first") {
    CHECK(canonical_less(Cyclotomic(1), Cyclotomic(-1)));
    CHECK(canonical_less(Cyclotomic(-5), z(3)));
    CHECK_FALSE(canonical_less(z(3), z(3)));
}

TEST_CASE("to_string") {
    CHECK(Cyclotomic().to_string() == "0");
    CHECK(z(3, 2).to_string() == "-1-z3");
    CHECK((Cyclotomic(Rational(1, 2)) * z(8, 3)).to_string() == "1/2*z8^3");
}

TEST_CASE("prime field") {
    const PrimeFieldElement a(7, 3), b(7, 5);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(PrimeFieldElement(7, -1).value() == 6);
    CHECK_THROWS_AS(PrimeFieldElement(7, 0).inverse(), DivisionByZero);
    CHECK_THROWS(PrimeFieldElement(8, 1));
    CHECK_THROWS(a + PrimeFieldElement(11, 1));
    const PrimeField f{13};
    const auto g = f.primitive_root();
    CHECK(f.pow(g, 6) != 1);
    CHECK(f.pow(g, 4) != 1);
    CHECK(f.pow(g, 12) == 1);
}

TEST_CASE("lifting prime") {
    // Oracle: scan upward for the first prime above the bound with p ≡ 1 mod e.
    auto brute = [](std::uint64_t e, std::uint64_t order) {
        const auto bound = 2 * static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
        for (std::uint64_t p = bound + 1;; ++p)
            if (p % e == 1 % e && is_prime(p)) return p;
    };
    CHECK(find_lifting_prime(6, 6) == 7);
    CHECK(find_lifting_prime(1, 1) == 3);
    CHECK(find_lifting_prime(4, 8) == 13);
    for (std::uint64_t e : {1, 2, 3, 4, 6, 12})
        for (std::uint64_t n : {1, 2, 6, 8, 12, 24, 100})
            if (n % e == 0 || e == 1) CHECK(find_lifting_prime(e, n) == brute(e, n));
}
