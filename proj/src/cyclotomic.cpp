#include "qsch/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace qsch {

namespace {

struct FieldData {
    int m = 1;
    int phi = 1;
    std::vector<long> poly;                 // Phi_m, monic, length phi + 1
    std::vector<std::vector<long>> powers;  // powers[k] = x^k mod Phi_m, k < m
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    std::vector<long> q(nn - dn + 1, 0);
    for (int k = nn - dn; k >= 0; --k) {
        long lead = num[k + dn];
        q[k] = lead;
        for (int i = 0; i <= dn; ++i) num[k + i] -= lead * den[i];
    }
    for (int i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::unique_ptr<FieldData> build_field(int m);

std::shared_mutex g_field_mutex;
std::map<int, std::unique_ptr<FieldData>> g_fields;

const FieldData& field(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    {
        std::shared_lock lock(g_field_mutex);
        auto it = g_fields.find(m);
        if (it != g_fields.end()) return *it->second;
    }
    auto data = build_field(m);
    std::unique_lock lock(g_field_mutex);
    auto [it, inserted] = g_fields.emplace(m, std::move(data));
    return *it->second;
}

std::unique_ptr<FieldData> build_field(int m) {
    auto f = std::make_unique<FieldData>();
    f->m = m;
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div_exact(num, field(d).poly);
    f->poly = num;
    f->phi = static_cast<int>(num.size()) - 1;
    const int phi = f->phi;
    f->powers.assign(m, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        f->powers[k] = cur;
        // multiply by x and reduce with x^phi = -sum poly[i] x^i
        long top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (phi == 1) cur[0] = 0;
        for (int i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
    }
    return f;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) { return field(m).poly; }

int euler_phi(int m) { return field(m).phi; }

CycloNum::CycloNum(int order) : order_(order), c_(field(order).phi) {}

CycloNum::CycloNum(int order, const Rational& value) : CycloNum(order) {
    c_[0] = value;
    c_[0].canonicalize();
}

CycloNum::CycloNum(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field(order).phi)
        throw std::invalid_argument("coefficient vector length differs from deg Phi_m");
    for (auto& c : c_) c.canonicalize();
}

CycloNum CycloNum::root(int order, long k) {
    const auto& f = field(order);
    CycloNum r(order);
    const auto& p = f.powers[mod(k, order)];
    for (int i = 0; i < f.phi; ++i)
        if (p[i] != 0) r.c_[i] = p[i];
    return r;
}

bool CycloNum::is_zero() const {
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

CycloNum CycloNum::lift(int target) const {
    if (target == order_) return *this;
    if (target % order_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
    const long step = target / order_;
    CycloNum r(target);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        const auto& p = field(target).powers[mod(static_cast<long>(i) * step, target)];
        for (int j = 0; j < r.degree(); ++j)
            if (p[j] != 0) r.c_[j] += c_[i] * p[j];
    }
    return r;
}

namespace {

int common_order(const CycloNum& a, const CycloNum& b) {
    if (a.order() == b.order()) return a.order();
    if (a.order() == 1) return b.order();
    if (b.order() == 1) return a.order();
    throw std::invalid_argument("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
}

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    int m = common_order(*this, o);
    if (order_ != m) *this = lift(m);
    if (o.order_ != m) return *this += o.lift(m);
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    int m = common_order(*this, o);
    if (order_ != m) *this = lift(m);
    if (o.order_ != m) return *this -= o.lift(m);
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
    if (sgn(r) == 0) {
        for (auto& c : c_) c = 0;
        return *this;
    }
    for (auto& c : c_)
        if (sgn(c) != 0) c *= r;
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.order_ == 1) return b * a.c_[0];
    if (b.order_ == 1) return a * b.c_[0];
    const int m = common_order(a, b);
    const auto& f = field(m);
    const int phi = f.phi;
    std::vector<Rational> conv(2 * phi - 1);
    mpq_class tmp;
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            conv[i + j] += tmp;
        }
    }
    CycloNum r(m);
    for (int i = 0; i < phi; ++i) r.c_[i] = std::move(conv[i]);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (sgn(conv[k]) == 0) continue;
        const auto& p = f.powers[k % m];
        for (int i = 0; i < phi; ++i) {
            if (p[i] == 0) continue;
            if (p[i] == 1)
                r.c_[i] += conv[k];
            else if (p[i] == -1)
                r.c_[i] -= conv[k];
            else
                r.c_[i] += conv[k] * p[i];
        }
    }
    return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    const int phi = degree();
    if (phi == 1) return CycloNum(order_, Rational(1) / c_[0]);
    // Solve M y = e_0 where column j of M holds this * z^j.
    std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        CycloNum col = *this * root(order_, j);
        for (int i = 0; i < phi; ++i) a[i][j] = col.c_[i];
    }
    a[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (piv < phi && sgn(a[piv][col]) == 0) ++piv;
        if (piv == phi) throw std::logic_error("singular multiplication matrix");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (int j = col; j <= phi; ++j) a[col][j] *= inv;
        for (int i = 0; i < phi; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j <= phi; ++j)
                if (sgn(a[col][j]) != 0) a[i][j] -= f * a[col][j];
        }
    }
    CycloNum r(order_);
    for (int i = 0; i < phi; ++i) r.c_[i] = a[i][phi];
    return r;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
    if (o.order_ == 1) {
        if (sgn(o.c_[0]) == 0) throw std::domain_error("division by zero in cyclotomic field");
        return *this *= Rational(1 / o.c_[0]);
    }
    return *this = *this * o.inverse();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_) {
        int m = common_order(a, b);
        return a.lift(m) == b.lift(m);
    }
    return a.c_ == b.c_;
}

std::complex<double> CycloNum::to_complex() const {
    std::complex<double> s = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
        else if (sgn(c_[i]) < 0) os << "-";
        Rational a = abs(c_[i]);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << (a != 1 ? "*" : "") << "z" << order_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloNum cyclo_root(int m, long k) { return CycloNum::root(m, k); }

CycloNum conj(const CycloNum& x) {
    CycloNum r(x.order());
    const auto& c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        r += CycloNum::root(x.order(), -static_cast<long>(i)) * c[i];
    }
    return r;
}

CycloNum pow(const CycloNum& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    CycloNum result(x.order(), Rational(1));
    CycloNum base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::optional<Rational> as_rational(const CycloNum& x) {
    const auto& c = x.coeffs();
    for (size_t i = 1; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return std::nullopt;
    return c[0];
}

bool is_real(const CycloNum& x) { return conj(x) == x; }

std::optional<long> root_exponent(const CycloNum& x) {
    const auto& f = field(x.order());
    const auto& c = x.coeffs();
    for (int k = 0; k < f.m; ++k) {
        const auto& p = f.powers[k];
        bool eq = true;
        for (int i = 0; i < f.phi && eq; ++i)
            eq = (c[i] == p[i]);
        if (eq) return k;
    }
    return std::nullopt;
}

const char* to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
    }
    return "?";
}

namespace {

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    MpfrValue(const MpfrValue& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpfrValue& operator=(const MpfrValue&) = delete;
    ~MpfrValue() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

std::mutex g_cos_mutex;
std::map<std::pair<int, long>, std::vector<MpfrValue>> g_cos_tables;

const std::vector<MpfrValue>& cos_table(int m, long prec) {
    std::lock_guard lock(g_cos_mutex);
    auto key = std::make_pair(m, prec);
    auto it = g_cos_tables.find(key);
    if (it != g_cos_tables.end()) return it->second;
    std::vector<MpfrValue> table;
    table.reserve(m);
    MpfrValue pi(prec + 32), ang(prec + 32);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < m; ++k) {
        mpfr_mul_ui(ang.get(), pi.get(), 2UL * k, MPFR_RNDN);
        mpfr_div_ui(ang.get(), ang.get(), m, MPFR_RNDN);
        table.emplace_back(prec);
        mpfr_cos(table.back().get(), ang.get(), MPFR_RNDN);
    }
    return g_cos_tables.emplace(key, std::move(table)).first->second;
}

}  // namespace

Sign certified_sign(const CycloNum& x) {
    if (!is_real(x)) throw std::invalid_argument("certified_sign requires a real (conj-fixed) element");
    if (x.is_zero()) return Sign::zero;
    const auto& c = x.coeffs();
    const int m = x.order();
    Rational abs_sum = 0;
    for (const auto& v : c) abs_sum += abs(v);
    for (long prec = 64; prec <= (1L << 16); prec *= 2) {
        const auto& table = cos_table(m, prec);
        MpfrValue acc(prec), term(prec), coef(prec), bound(prec);
        mpfr_set_zero(acc.get(), 1);
        for (size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            mpfr_set_q(coef.get(), c[i].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term.get(), coef.get(), table[i].get(), MPFR_RNDN);
            mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        }
        // |error| <= (sum |c_i|) * (4 phi + 64) * 2^-prec
        mpfr_set_q(bound.get(), abs_sum.get_mpq_t(), MPFR_RNDU);
        mpfr_mul_ui(bound.get(), bound.get(), 4UL * c.size() + 64UL, MPFR_RNDU);
        mpfr_mul_2si(bound.get(), bound.get(), -prec, MPFR_RNDU);
        if (mpfr_cmpabs(acc.get(), bound.get()) > 0)
            return mpfr_sgn(acc.get()) > 0 ? Sign::positive : Sign::negative;
    }
    throw std::runtime_error("certified_sign: precision limit reached for nonzero element");
}

// ---------------------------------------------------------------- CycloPoly

CycloPoly::CycloPoly(int order, std::vector<CycloNum> coeffs) : order_(order), c_(std::move(coeffs)) {
    for (auto& c : c_)
        if (c.order() != order_) c = c.lift(order_);
    trim();
}

CycloPoly CycloPoly::constant(const CycloNum& c) { return CycloPoly(c.order(), {c}); }

CycloPoly CycloPoly::from_integers(int order, const std::vector<long>& coeffs) {
    std::vector<CycloNum> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(order, Rational(v));
    return CycloPoly(order, std::move(c));
}

CycloNum CycloPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return CycloNum(order_);
    return c_[k];
}

void CycloPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloNum(order_));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloNum(order_));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator*=(const CycloNum& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    if (a.is_zero() || b.is_zero()) return CycloPoly(a.order_);
    std::vector<CycloNum> r(a.c_.size() + b.c_.size() - 1, CycloNum(a.order_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloPoly(a.order_, std::move(r));
}

bool operator==(const CycloPoly& a, const CycloPoly& b) { return a.c_ == b.c_; }

CycloNum CycloPoly::evaluate(const CycloNum& t) const {
    CycloNum acc(order_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

CycloPoly::DivResult CycloPoly::divmod(const CycloPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const int dd = divisor.degree();
    if (degree() < dd) return {CycloPoly(order_), *this};
    std::vector<CycloNum> rem = c_;
    std::vector<CycloNum> quo(degree() - dd + 1, CycloNum(order_));
    const CycloNum lead_inv = divisor.c_.back().inverse();
    for (int k = degree() - dd; k >= 0; --k) {
        CycloNum q = rem[k + dd] * lead_inv;
        if (q.is_zero()) continue;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.c_[i];
        quo[k] = std::move(q);
    }
    rem.resize(dd);
    return {CycloPoly(order_, std::move(quo)), CycloPoly(order_, std::move(rem))};
}

}  // namespace qsch
