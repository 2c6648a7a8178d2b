#include "qsch/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qsch {

// ---------------------------------------------------------------- SparsePoly

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
    SparsePoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int i) {
    Monomial m(nvars, 0);
    m.at(i) = 1;
    return monomial(m);
}

SparsePoly SparsePoly::monomial(const Monomial& exps, const Rational& c) {
    SparsePoly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

Rational SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int SparsePoly::weighted_degree(const std::vector<int>& w) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
        d = std::max(d, s);
    }
    return d;
}

bool SparsePoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        if (d >= 0 && s != d) return false;
        d = s;
    }
    return true;
}

bool SparsePoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [m, c] : terms_) {
            Monomial s = m;
            std::swap(s[i], s[i + 1]);
            if (coeff(s) != c) return false;
        }
    }
    return true;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (nvars_ != o.nvars_ && !o.is_zero()) {
        if (!is_zero()) throw std::invalid_argument("SparsePoly arity mismatch");
        nvars_ = o.nvars_;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (nvars_ != o.nvars_ && !o.is_zero()) {
        if (!is_zero()) throw std::invalid_argument("SparsePoly arity mismatch");
        nvars_ = o.nvars_;
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return SparsePoly(std::max(a.nvars_, b.nvars_));
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("SparsePoly arity mismatch");
    SparsePoly r(a.nvars_);
    SparsePoly::Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

CycloNum SparsePoly::evaluate(const PointVec& pt) const {
    if (static_cast<int>(pt.size()) != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    int order = 1;
    for (const auto& x : pt) order = std::max(order, x.order());
    std::vector<std::vector<CycloNum>> powers(nvars_);
    CycloNum acc(order);
    for (const auto& [m, c] : terms_) {
        CycloNum term(order, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(CycloNum(order, Rational(1)));
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * pt[i]);
            term *= pw[m[i]];
        }
        acc += term;
    }
    return acc;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    const int target = subs.empty() ? 0 : subs[0].nvars();
    std::vector<std::vector<SparsePoly>> powers(nvars_);
    SparsePoly acc(target);
    for (const auto& [m, c] : terms_) {
        SparsePoly term = SparsePoly::constant(target, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(SparsePoly::constant(target, 1));
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * subs[i]);
            term *= pw[m[i]];
        }
        acc += term;
    }
    return acc;
}

std::string SparsePoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool has_var = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
        if (!has_var || a != 1) os << a.get_str();
        bool first_var = (!has_var || a != 1) ? false : true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- evaluations

namespace {

int point_order(const PointVec& pt) {
    int order = 1;
    for (const auto& x : pt) order = std::max(order, x.order());
    return order;
}

}  // namespace

std::vector<CycloNum> elementary_values(const PointVec& pt) {
    const int n = static_cast<int>(pt.size());
    const int order = point_order(pt);
    std::vector<CycloNum> e(n + 1, CycloNum(order));
    e[0] = CycloNum(order, Rational(1));
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k >= 1; --k) e[k] += pt[i] * e[k - 1];
    return e;
}

std::vector<CycloNum> complete_values(int up_to, const PointVec& pt) {
    auto e = elementary_values(pt);
    const int n = static_cast<int>(pt.size());
    const int order = point_order(pt);
    std::vector<CycloNum> h(std::max(up_to, 0) + 1, CycloNum(order));
    h[0] = CycloNum(order, Rational(1));
    for (int k = 1; k <= up_to; ++k)
        for (int i = 1; i <= std::min(k, n); ++i) {
            if (i % 2) h[k] += e[i] * h[k - i];
            else h[k] -= e[i] * h[k - i];
        }
    return h;
}

CycloNum elem(int k, const PointVec& pt) {
    if (k < 0 || k > static_cast<int>(pt.size())) return CycloNum(point_order(pt));
    return elementary_values(pt)[k];
}

CycloNum complete(int k, const PointVec& pt) {
    if (k < 0) return CycloNum(point_order(pt));
    return complete_values(k, pt)[k];
}

ElementaryValues<CycloNum> at_point(const PointVec& pt) { return ElementaryValues<CycloNum>(elementary_values(pt)); }

CycloNum determinant(std::vector<std::vector<CycloNum>> a) {
    const int n = static_cast<int>(a.size());
    int order = 1;
    for (const auto& row : a)
        for (const auto& x : row) order = std::max(order, x.order());
    CycloNum det(order, Rational(1));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return CycloNum(order);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        CycloNum inv = a[col][col].inverse();
        for (int i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            CycloNum f = a[i][col] * inv;
            for (int j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

CycloNum schur(const Partition& lambda, const PointVec& pt) {
    const int l = lambda.length();
    const int order = point_order(pt);
    if (l == 0) return CycloNum(order, Rational(1));
    auto h = complete_values(lambda.part(0) + l, pt);
    std::vector<std::vector<CycloNum>> a(l, std::vector<CycloNum>(l, CycloNum(order)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = lambda.part(i) + j - i;
            if (idx >= 0) a[i][j] = h[idx];
        }
    return determinant(std::move(a));
}

CycloNum schur_bialternant(const Partition& lambda, const PointVec& pt) {
    const int n = static_cast<int>(pt.size());
    const int order = point_order(pt);
    if (lambda.length() > n) return CycloNum(order);
    std::vector<std::vector<CycloNum>> num(n, std::vector<CycloNum>(n)), den(n, std::vector<CycloNum>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            num[i][j] = pow(pt[i], lambda.part(j) + n - 1 - j);
            den[i][j] = pow(pt[i], n - 1 - j);
        }
    CycloNum d = determinant(std::move(den));
    if (d.is_zero()) throw std::invalid_argument("schur_bialternant: repeated coordinates");
    return determinant(std::move(num)) / d;
}

CycloNum qtilde_pair(int i, int j, const PointVec& pt) { return at_point(pt).qtilde_pair(i, j); }
CycloNum qtilde(const Partition& lambda, const PointVec& pt) { return at_point(pt).qtilde(lambda); }
CycloNum ptilde(const Partition& lambda, const PointVec& pt) { return at_point(pt).ptilde(lambda); }

// ---------------------------------------------------------------- polynomials

SparsePoly elem_poly(int k, int nvars) {
    SparsePoly p(nvars);
    if (k < 0 || k > nvars) return p;
    SparsePoly::Monomial m(nvars, 0);
    std::fill(m.end() - k, m.end(), 1);
    do {
        p.add_term(m, 1);
    } while (std::next_permutation(m.begin(), m.end()));
    return p;
}

namespace {

void complete_rec(int var, int left, SparsePoly::Monomial& m, SparsePoly& out) {
    if (var + 1 == static_cast<int>(m.size())) {
        m[var] = left;
        out.add_term(m, 1);
        return;
    }
    for (int e = left; e >= 0; --e) {
        m[var] = e;
        complete_rec(var + 1, left - e, m, out);
    }
}

}  // namespace

SparsePoly complete_poly(int k, int nvars) {
    SparsePoly p(nvars);
    if (k < 0 || nvars == 0) {
        if (k == 0) p = SparsePoly::constant(nvars, 1);
        return p;
    }
    SparsePoly::Monomial m(nvars, 0);
    complete_rec(0, k, m, p);
    return p;
}

SparsePoly power_sum_poly(int k, int nvars) {
    SparsePoly p(nvars);
    for (int i = 0; i < nvars; ++i) {
        SparsePoly::Monomial m(nvars, 0);
        m[i] = k;
        p.add_term(m, 1);
    }
    return p;
}

ElementaryValues<SparsePoly> symbolic(int nvars) {
    std::vector<SparsePoly> e;
    for (int k = 0; k <= nvars; ++k) e.push_back(elem_poly(k, nvars));
    return ElementaryValues<SparsePoly>(std::move(e));
}

SparsePoly qtilde_poly(const Partition& lambda, int nvars) { return symbolic(nvars).qtilde(lambda); }
SparsePoly ptilde_poly(const Partition& lambda, int nvars) { return symbolic(nvars).ptilde(lambda); }

}  // namespace qsch
