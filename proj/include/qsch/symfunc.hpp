#pragma once

#include "qsch/cyclotomic.hpp"
#include "qsch/partitions.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsch {

using PointVec = std::vector<CycloNum>;

// Multivariate polynomial with rational coefficients; no zero terms stored.
class SparsePoly {
public:
    using Monomial = std::vector<int>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}
    static SparsePoly constant(int nvars, const Rational& c);
    static SparsePoly variable(int nvars, int i);
    static SparsePoly monomial(const Monomial& exps, const Rational& c = 1);

    int nvars() const noexcept { return nvars_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    int total_degree() const;
    // Degree with variable i carrying weight w[i].
    int weighted_degree(const std::vector<int>& w) const;
    bool is_homogeneous() const;
    bool is_symmetric() const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Rational& c);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly operator-() const;
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

    CycloNum evaluate(const PointVec& pt) const;
    // Replace variable i by subs[i]; all subs share one variable count.
    SparsePoly substitute(const std::vector<SparsePoly>& subs) const;

    std::string to_string(const std::string& var = "x") const;

private:
    int nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

inline CycloNum zero_like(const CycloNum& x) { return CycloNum(x.order()); }
inline SparsePoly zero_like(const SparsePoly& x) { return SparsePoly(x.nvars()); }

// Values E_0 = 1, E_1, ..., E_n of the elementary symmetric functions in some
// ring R; every Q-tilde and P-tilde polynomial is a polynomial in these.
template <class R>
class ElementaryValues {
public:
    explicit ElementaryValues(std::vector<R> e) : e_(std::move(e)), zero_(zero_like(e_.at(0))) {}

    int rank() const noexcept { return static_cast<int>(e_.size()) - 1; }
    const R& E(int k) const { return (k < 0 || k > rank()) ? zero_ : e_[k]; }

    R qtilde_pair(int i, int j) const {
        if (i < j) throw std::invalid_argument("qtilde_pair requires i >= j");
        R s = E(i) * E(j);
        R tail = zero_;
        for (int k = 1; k <= j; ++k) {
            R prod = E(i + k) * E(j - k);
            if (k % 2) tail -= prod;
            else tail += prod;
        }
        tail *= Rational(2);
        return s + tail;
    }

    R qtilde(const Partition& lambda) const {
        std::vector<int> p = lambda.parts();
        if (p.size() % 2) p.push_back(0);
        const int m = static_cast<int>(p.size());
        std::vector<std::vector<R>> a(m, std::vector<R>(m, zero_));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) a[i][j] = qtilde_pair(p[i], p[j]);
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        return pfaffian(a, idx);
    }

    R ptilde(const Partition& lambda) const {
        Rational scale(1);
        mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), lambda.length());
        return qtilde(lambda) * scale;
    }

private:
    // Expansion along the first remaining index; a holds the i < j entries.
    R pfaffian(const std::vector<std::vector<R>>& a, const std::vector<int>& idx) const {
        if (idx.empty()) {
            R one = zero_;
            one += e_[0];
            return one;
        }
        R acc = zero_;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t j = 1; j < idx.size(); ++j) {
            rest.clear();
            for (size_t k = 1; k < idx.size(); ++k)
                if (k != j) rest.push_back(idx[k]);
            R term = a[idx[0]][idx[j]] * pfaffian(a, rest);
            if (j % 2) acc += term;
            else acc -= term;
        }
        return acc;
    }

    std::vector<R> e_;
    R zero_;
};

CycloNum elem(int k, const PointVec& pt);
CycloNum complete(int k, const PointVec& pt);
// E_0..E_n of pt.
std::vector<CycloNum> elementary_values(const PointVec& pt);
std::vector<CycloNum> complete_values(int up_to, const PointVec& pt);
// ElementaryValues for pt, ready for qtilde/ptilde.
ElementaryValues<CycloNum> at_point(const PointVec& pt);

// det[H_{lambda_i + j - i}]
CycloNum schur(const Partition& lambda, const PointVec& pt);
// det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}); requires distinct coordinates.
CycloNum schur_bialternant(const Partition& lambda, const PointVec& pt);

CycloNum qtilde_pair(int i, int j, const PointVec& pt);
CycloNum qtilde(const Partition& lambda, const PointVec& pt);
CycloNum ptilde(const Partition& lambda, const PointVec& pt);

SparsePoly elem_poly(int k, int nvars);
SparsePoly complete_poly(int k, int nvars);
SparsePoly power_sum_poly(int k, int nvars);
ElementaryValues<SparsePoly> symbolic(int nvars);
SparsePoly qtilde_poly(const Partition& lambda, int nvars);
SparsePoly ptilde_poly(const Partition& lambda, int nvars);

// Hall-Littlewood P_lambda(pt; t = -1), l(lambda) <= |pt|.
CycloNum hall_littlewood(const Partition& lambda, const PointVec& pt);

// P_lambda(x_1..x_n; -1) written as a polynomial in E_1..E_n: key is the
// partition nu (parts <= n) of the product E_{nu_1} E_{nu_2} ...
std::map<Partition, Rational> hall_littlewood_e_expansion(const Partition& lambda, int n);
// omega(P_lambda)(pt), omega the ring involution E_k <-> H_k of
// symmetric polynomials in |pt| variables.
CycloNum hall_littlewood_omega(const Partition& lambda, const PointVec& pt);

// Exact determinant by Gaussian elimination over the field.
CycloNum determinant(std::vector<std::vector<CycloNum>> a);

}  // namespace qsch
