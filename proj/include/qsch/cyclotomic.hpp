#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace qsch {

using Rational = mpq_class;
using Integer = mpz_class;

// Element of Q(zeta_m) stored in the power basis 1, z, ..., z^{phi(m)-1}
// modulo the m-th cyclotomic polynomial. Order 1 is the rational field and
// is promoted silently when combined with any other order.
class CycloNum {
public:
    CycloNum() : CycloNum(1) {}
    explicit CycloNum(int order);
    CycloNum(int order, const Rational& value);
    CycloNum(int order, std::vector<Rational> coeffs);

    static CycloNum root(int order, long k);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator/=(const CycloNum& o);
    CycloNum& operator*=(const Rational& r);

    CycloNum operator-() const;

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }

    friend bool operator==(const CycloNum& a, const CycloNum& b);

    CycloNum inverse() const;
    // Re-express in Q(zeta_target); target must be a multiple of order().
    CycloNum lift(int target) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> c_;
};

CycloNum cyclo_root(int m, long k);
CycloNum conj(const CycloNum& x);
CycloNum pow(const CycloNum& x, long e);
std::optional<Rational> as_rational(const CycloNum& x);
bool is_real(const CycloNum& x);

// k in [0, m) with x == zeta_m^k, if x is a root of unity of that form.
std::optional<long> root_exponent(const CycloNum& x);

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Exact sign of a conj-fixed element; throws std::invalid_argument otherwise.
Sign certified_sign(const CycloNum& x);
const char* to_string(Sign s);

// Phi_m as integer coefficients, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);
int euler_phi(int m);

// Univariate polynomial in t over Q(zeta_m).
class CycloPoly {
public:
    CycloPoly() : CycloPoly(1) {}
    explicit CycloPoly(int order) : order_(order) {}
    CycloPoly(int order, std::vector<CycloNum> coeffs);

    static CycloPoly constant(const CycloNum& c);
    // Integer-coefficient polynomial, constant term first.
    static CycloPoly from_integers(int order, const std::vector<long>& coeffs);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<CycloNum>& coeffs() const noexcept { return c_; }
    CycloNum coeff(int k) const;

    CycloPoly& operator+=(const CycloPoly& o);
    CycloPoly& operator-=(const CycloPoly& o);
    CycloPoly& operator*=(const CycloNum& s);
    friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
    friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator*(CycloPoly a, const CycloNum& s) { return a *= s; }
    friend bool operator==(const CycloPoly& a, const CycloPoly& b);

    CycloNum evaluate(const CycloNum& t) const;

    struct DivResult;
    DivResult divmod(const CycloPoly& divisor) const;

private:
    void trim();

    int order_;
    std::vector<CycloNum> c_;
};

struct CycloPoly::DivResult {
    CycloPoly quotient;
    CycloPoly remainder;
};

}  // namespace qsch
