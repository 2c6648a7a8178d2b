#include "qsch/symfunc.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>

namespace qsch {

namespace {

// v_lambda(t) with lambda padded by zeros to n parts: the product over
// part sizes i >= 0 of prod_{k=1}^{m_i} (1 + t + ... + t^{k-1}).
std::vector<long> v_lambda(const Partition& lambda, int n) {
    std::vector<long> v{1};
    auto times_block = [&v](int k) {
        std::vector<long> r(v.size() + k - 1, 0);
        for (size_t i = 0; i < v.size(); ++i)
            for (int j = 0; j < k; ++j) r[i + j] += v[i];
        v = std::move(r);
    };
    std::vector<int> mult(lambda.part(0) + 1, 0);
    mult[0] = n - lambda.length();
    for (int p : lambda.parts()) ++mult[p];
    for (int m : mult)
        for (int k = 2; k <= m; ++k) times_block(k);
    return v;
}

// Polynomials in t with coefficients in the group ring Z[C_m]; the
// coordinates are zeta_m^{a_i}, so every factor (x_i - t x_j) is a pair of
// rotations. Division by the monic v_lambda stays in the group ring; the
// remainder only has to vanish after reduction mod Phi_m.
class GroupRingPoly {
public:
    GroupRingPoly(int m, int max_deg) : m_(m), c_((max_deg + 1) * m, 0) {}

    int64_t* coeff(int d) { return c_.data() + static_cast<size_t>(d) * m_; }
    const int64_t* coeff(int d) const { return c_.data() + static_cast<size_t>(d) * m_; }
    int max_deg() const { return static_cast<int>(c_.size() / m_) - 1; }
    int order() const { return m_; }

    CycloNum to_cyclo(int d) const {
        CycloNum r(m_);
        const int64_t* p = coeff(d);
        for (int k = 0; k < m_; ++k)
            if (p[k]) r += CycloNum::root(m_, k) * Rational(static_cast<long>(p[k]));
        return r;
    }

private:
    int m_;
    std::vector<int64_t> c_;
};

class FastSymmetrizer {
public:
    FastSymmetrizer(const Partition& lambda, const std::vector<long>& roots, int m)
        : lambda_(lambda), roots_(roots), m_(m), n_(static_cast<int>(roots.size())),
          deg_(n_ * (n_ - 1) / 2), acc_(m, deg_), used_(n_, false), chosen_(n_, 0) {}

    GroupRingPoly run() {
        GroupRingPoly start(m_, deg_);
        start.coeff(0)[0] = 1;
        dfs(0, start, 0, 0);
        return acc_;
    }

private:
    // cur has degree at most d_used in t
    void dfs(int depth, const GroupRingPoly& cur, int d_used, int inversions) {
        if (depth == n_) {
            const int64_t s = (inversions % 2) ? -1 : 1;
            for (int d = 0; d <= d_used; ++d) {
                int64_t* dst = acc_.coeff(d);
                const int64_t* src = cur.coeff(d);
                for (int k = 0; k < m_; ++k) dst[k] += s * src[k];
            }
            return;
        }
        for (int a = 0; a < n_; ++a) {
            if (used_[a]) continue;
            int inv = 0;
            for (int i = 0; i < depth; ++i)
                if (chosen_[i] > a) ++inv;
            GroupRingPoly next(m_, deg_);
            // x_a^{lambda_depth}
            const long shift = mod(roots_[a] * lambda_.part(depth));
            for (int d = 0; d <= d_used; ++d) rotate_into(cur.coeff(d), shift, next.coeff(d), 1);
            int deg = d_used;
            // prod_{i < depth} (x_{w(i)} - t x_a)
            for (int i = 0; i < depth; ++i) {
                GroupRingPoly tmp(m_, deg_);
                const long p = roots_[chosen_[i]], q = roots_[a];
                for (int d = 0; d <= deg; ++d) {
                    rotate_into(next.coeff(d), p, tmp.coeff(d), 1);
                    rotate_into(next.coeff(d), q, tmp.coeff(d + 1), -1);
                }
                next = std::move(tmp);
                ++deg;
            }
            used_[a] = true;
            chosen_[depth] = a;
            dfs(depth + 1, next, deg, inversions + inv);
            used_[a] = false;
        }
    }

    long mod(long x) const {
        long r = x % m_;
        return r < 0 ? r + m_ : r;
    }

    void rotate_into(const int64_t* src, long shift, int64_t* dst, int64_t sign) const {
        shift = mod(shift);
        for (int k = 0; k < m_; ++k) {
            if (!src[k]) continue;
            long t = k + shift;
            if (t >= m_) t -= m_;
            dst[t] += sign * src[k];
        }
    }

    const Partition& lambda_;
    const std::vector<long>& roots_;
    int m_, n_, deg_;
    GroupRingPoly acc_;
    std::vector<bool> used_;
    std::vector<int> chosen_;
};

CycloNum vandermonde_of(const PointVec& pt, int order) {
    CycloNum v(order, Rational(1));
    for (size_t i = 0; i < pt.size(); ++i)
        for (size_t j = i + 1; j < pt.size(); ++j) v *= pt[i] - pt[j];
    if (v.is_zero()) throw std::invalid_argument("hall_littlewood: repeated coordinates");
    return v;
}

CycloNum hl_fast(const Partition& lambda, const PointVec& pt, const std::vector<long>& roots, int order) {
    const int n = static_cast<int>(pt.size());
    GroupRingPoly num = FastSymmetrizer(lambda, roots, order).run();
    std::vector<long> v = v_lambda(lambda, n);
    const int dv = static_cast<int>(v.size()) - 1;
    const int dn = num.max_deg();
    // exact long division by the monic v; quotient evaluated at t = -1
    GroupRingPoly rem = num;
    std::vector<int64_t> at_minus_one(order, 0);
    for (int k = dn - dv; k >= 0; --k) {
        const int64_t* lead = rem.coeff(k + dv);
        std::vector<int64_t> q(lead, lead + order);
        for (int i = 0; i <= dv; ++i) {
            if (!v[i]) continue;
            int64_t* r = rem.coeff(k + i);
            for (int s = 0; s < order; ++s) r[s] -= v[i] * q[s];
        }
        const int64_t sign = (k % 2) ? -1 : 1;
        for (int s = 0; s < order; ++s) at_minus_one[s] += sign * q[s];
    }
    for (int d = 0; d < dv && d <= dn; ++d)
        if (!rem.to_cyclo(d).is_zero())
            throw std::logic_error("hall_littlewood: symmetrization not divisible by v_lambda(t)");
    CycloNum value(order);
    for (int s = 0; s < order; ++s)
        if (at_minus_one[s]) value += CycloNum::root(order, s) * Rational(static_cast<long>(at_minus_one[s]));
    return value / vandermonde_of(pt, order);
}

CycloNum hl_general(const Partition& lambda, const PointVec& pt, int order) {
    const int n = static_cast<int>(pt.size());
    CycloPoly acc(order);
    std::vector<bool> used(n, false);
    std::vector<int> chosen(n, 0);
    auto dfs = [&](auto&& self, int depth, const CycloPoly& cur, int inversions) -> void {
        if (depth == n) {
            if (inversions % 2) acc -= cur;
            else acc += cur;
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (used[a]) continue;
            int inv = 0;
            for (int i = 0; i < depth; ++i)
                if (chosen[i] > a) ++inv;
            CycloPoly next = cur * pow(pt[a], lambda.part(depth));
            for (int i = 0; i < depth; ++i)
                next = next * CycloPoly(order, {pt[chosen[i]], -pt[a]});
            used[a] = true;
            chosen[depth] = a;
            self(self, depth + 1, next, inversions + inv);
            used[a] = false;
        }
    };
    dfs(dfs, 0, CycloPoly::constant(CycloNum(order, Rational(1))), 0);
    auto [quo, rem] = acc.divmod(CycloPoly::from_integers(order, v_lambda(lambda, n)));
    if (!rem.is_zero()) throw std::logic_error("hall_littlewood: symmetrization not divisible by v_lambda(t)");
    return quo.evaluate(CycloNum(order, Rational(-1))) / vandermonde_of(pt, order);
}

}  // namespace

CycloNum hall_littlewood(const Partition& lambda, const PointVec& pt) {
    const int n = static_cast<int>(pt.size());
    int order = 1;
    for (const auto& x : pt) order = std::max(order, x.order());
    if (lambda.length() > n) return CycloNum(order);
    if (n == 0) return CycloNum(order, Rational(1));
    std::vector<long> roots;
    for (const auto& x : pt) {
        auto r = root_exponent(x.lift(order));
        if (!r) break;
        roots.push_back(*r);
    }
    if (static_cast<int>(roots.size()) == n) return hl_fast(lambda, pt, roots, order);
    return hl_general(lambda, pt, order);
}

namespace {

std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, int unknowns) {
    const int rows = static_cast<int>(a.size());
    int r = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < unknowns && r < rows; ++col) {
        int piv = r;
        while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        Rational inv = 1 / a[r][col];
        for (int j = col; j < unknowns; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j < unknowns; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (r < unknowns) return {};
    for (int i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) throw std::logic_error("e-expansion: inconsistent interpolation system");
    std::vector<Rational> x(unknowns);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace

std::map<Partition, Rational> hall_littlewood_e_expansion(const Partition& lambda, int n) {
    static std::mutex mu;
    static std::map<std::pair<Partition, int>, std::map<Partition, Rational>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({lambda, n});
        if (it != cache.end()) return it->second;
    }
    std::map<Partition, Rational> out;
    if (lambda.length() <= n) {
        const auto basis = partitions_of(lambda.weight(), n);
        const int u = static_cast<int>(basis.size());
        std::mt19937 rng(static_cast<unsigned>(1000 * n + lambda.weight()));
        std::uniform_int_distribution<int> dist(-40, 40);
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        std::vector<Rational> x;
        while (x.empty()) {
            for (int extra = 0; extra < u + 4; ++extra) {
                PointVec pt;
                std::vector<int> seen;
                while (static_cast<int>(pt.size()) < n) {
                    int v = dist(rng);
                    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
                    seen.push_back(v);
                    pt.emplace_back(1, Rational(v, 3));
                }
                auto e = elementary_values(pt);
                std::vector<Rational> row(u);
                for (int j = 0; j < u; ++j) {
                    Rational prod = 1;
                    for (int p : basis[j].parts()) prod *= *as_rational(e[p]);
                    row[j] = prod;
                }
                a.push_back(std::move(row));
                b.push_back(*as_rational(hall_littlewood(lambda, pt)));
            }
            x = solve_exact(a, b, u);
        }
        for (int j = 0; j < u; ++j)
            if (sgn(x[j]) != 0) out.emplace(basis[j], x[j]);
    }
    std::lock_guard lock(mu);
    cache.emplace(std::make_pair(lambda, n), out);
    return out;
}

CycloNum hall_littlewood_omega(const Partition& lambda, const PointVec& pt) {
    const int n = static_cast<int>(pt.size());
    int order = 1;
    for (const auto& x : pt) order = std::max(order, x.order());
    auto h = complete_values(n, pt);
    CycloNum acc(order);
    for (const auto& [nu, c] : hall_littlewood_e_expansion(lambda, n)) {
        CycloNum term(order, c);
        for (int p : nu.parts()) term *= h[p];
        acc += term;
    }
    return acc;
}

}  // namespace qsch
