#include "doctest.h"

#include "qsch/cyclotomic.hpp"

#include <mpfr.h>

#include <random>

using namespace qsch;

namespace {

CycloNum random_element(int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    std::vector<Rational> c(euler_phi(m));
    for (auto& v : c) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
    }
    return CycloNum(m, c);
}

int sign_at_200_bits(const CycloNum& x) {
    mpfr_t acc, term, ang;
    mpfr_inits2(200, acc, term, ang, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    const auto& c = x.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        mpfr_const_pi(ang, MPFR_RNDN);
        mpfr_mul_ui(ang, ang, 2 * k, MPFR_RNDN);
        mpfr_div_ui(ang, ang, x.order(), MPFR_RNDN);
        mpfr_cos(term, ang, MPFR_RNDN);
        mpfr_t q;
        mpfr_init2(q, 200);
        mpfr_set_q(q, c[k].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term, term, q, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
        mpfr_clear(q);
    }
    int s = mpfr_sgn(acc);
    mpfr_clears(acc, term, ang, static_cast<mpfr_ptr>(nullptr));
    return s;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(20) == 8);
    CHECK(euler_phi(105) == 48);
}

TEST_CASE("cyclo_root") {
    CHECK(cyclo_root(4, 0).is_one());
    CHECK(cyclo_root(4, 2) == CycloNum(4, Rational(-1)));
    CHECK(pow(cyclo_root(8, 1), 8).is_one());
    CHECK(pow(cyclo_root(8, 1), 4) == CycloNum(8, Rational(-1)));
    for (int m = 1; m <= 30; ++m)
        for (long k = -m; k <= 2 * m; ++k)
            CHECK((cyclo_root(m, k) * cyclo_root(m, -k)).is_one());
    for (int n = 1; n <= 12; ++n)
        CHECK(pow(cyclo_root(2 * n, 1), n) == CycloNum(2 * n, Rational(-1)));
}

TEST_CASE("conjugation") {
    CHECK(conj(CycloNum(8, Rational(1))).is_one());
    CHECK(conj(cyclo_root(8, 1)) == cyclo_root(8, 7));
    CycloNum r = cyclo_root(8, 1) + cyclo_root(8, -1);
    CHECK(conj(r) == r);
    std::mt19937 rng(11);
    for (int m : {3, 5, 8, 12, 16, 20}) {
        for (int i = 0; i < 10; ++i) {
            CycloNum x = random_element(m, rng);
            CHECK(conj(conj(x)) == x);
            CHECK(is_real(x * conj(x)));
        }
    }
}

TEST_CASE("field operations") {
    CycloNum z = cyclo_root(8, 1);
    CHECK(CycloNum(8, Rational(1)) / z == cyclo_root(8, 7));
    CHECK(((z - z) * (z + CycloNum(8, Rational(3)))).is_zero());
    CycloNum one(8, Rational(1));
    CHECK((one + z) * (one - z) == one - z * z);

    std::mt19937 rng(7);
    for (int m : {1, 2, 3, 4, 6, 8, 12, 16, 20, 24}) {
        for (int i = 0; i < 8; ++i) {
            CycloNum a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!b.is_zero()) CHECK((a / b) * b == a);
            CHECK(pow(a, 3) == a * a * a);
        }
    }
    CHECK_THROWS_AS(CycloNum(8).inverse(), std::domain_error);
}

TEST_CASE("lift and mixed orders") {
    CycloNum i4 = cyclo_root(4, 1);
    CHECK(i4.lift(8) == cyclo_root(8, 2));
    CHECK(i4.lift(12) == cyclo_root(12, 3));
    CycloNum half(1, Rational(1, 2));
    CHECK((half + cyclo_root(8, 1)).order() == 8);
    CHECK((cyclo_root(8, 1) * half).coeffs()[1] == Rational(1, 2));
}

TEST_CASE("as_rational") {
    CycloNum x = CycloNum(4, Rational(1)) + pow(cyclo_root(4, 1), 2);
    REQUIRE(as_rational(x).has_value());
    CHECK(*as_rational(x) == 0);
    CHECK_FALSE(as_rational(cyclo_root(8, 1)).has_value());
    CycloNum s(8);
    for (int k = 0; k < 8; ++k) s += cyclo_root(8, k);
    CHECK(s.is_zero());
}

TEST_CASE("root_exponent") {
    for (int m : {1, 4, 6, 8, 12})
        for (int k = 0; k < m; ++k) CHECK(root_exponent(cyclo_root(m, k)) == k);
    CHECK_FALSE(root_exponent(CycloNum(8, Rational(2))).has_value());
}

TEST_CASE("certified_sign") {
    CHECK(certified_sign(CycloNum(8)) == Sign::zero);
    CHECK(certified_sign(cyclo_root(8, 1) + cyclo_root(8, -1)) == Sign::positive);
    CHECK(certified_sign(cyclo_root(8, 3) + cyclo_root(8, -3)) == Sign::negative);
    CHECK_THROWS_AS(certified_sign(cyclo_root(8, 1)), std::invalid_argument);

    // (z + 1/z)^2 - 2 vanishes only after reduction mod Phi_8.
    CycloNum r2 = cyclo_root(8, 1) + cyclo_root(8, -1);
    CHECK(certified_sign(r2 * r2 - CycloNum(8, Rational(2))) == Sign::zero);
    CHECK(certified_sign(r2 - CycloNum(8, Rational(141421356, 100000000))) == Sign::positive);
    CHECK(certified_sign(r2 - CycloNum(8, Rational(141421357, 100000000))) == Sign::negative);

    std::mt19937 rng(3);
    for (int m : {5, 8, 12, 16, 20}) {
        for (int i = 0; i < 20; ++i) {
            CycloNum a = random_element(m, rng);
            CycloNum x = a + conj(a);
            int ref = sign_at_200_bits(x);
            CHECK(static_cast<int>(certified_sign(x)) == ref);
        }
    }
}

TEST_CASE("CycloPoly division") {
    // (1 - t^3)/(1 - t) = 1 + t + t^2
    CycloPoly num = CycloPoly::from_integers(8, {1, 0, 0, -1});
    CycloPoly den = CycloPoly::from_integers(8, {1, -1});
    auto [q, r] = num.divmod(den);
    CHECK(r.is_zero());
    CHECK(q == CycloPoly::from_integers(8, {1, 1, 1}));
    CHECK(q.evaluate(CycloNum(8, Rational(-1))).is_one());

    CycloPoly p(8, {cyclo_root(8, 1), CycloNum(8, Rational(2)), cyclo_root(8, 3)});
    auto [q2, r2] = (p * den + CycloPoly::constant(cyclo_root(8, 5))).divmod(den);
    CHECK(q2 == p);
    CHECK(r2 == CycloPoly::constant(cyclo_root(8, 5)));
    CHECK(p.evaluate(cyclo_root(8, 2)) ==
          cyclo_root(8, 1) + CycloNum(8, Rational(2)) * cyclo_root(8, 2) + cyclo_root(8, 7));
}
