#include "qsch/tuples.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsch {

int canonical_exponent(int n, long e) {
    const long m = 4L * n;
    long r = (e + (n - 1)) % m;
    if (r < 0) r += m;
    return static_cast<int>(r - (n - 1));
}

RootTuple::RootTuple(int n, std::vector<int> doubled_exps) : n_(n), e_(std::move(doubled_exps)) {
    if (n < 1) throw std::invalid_argument("RootTuple: rank must be positive");
    if (static_cast<int>(e_.size()) != n) throw std::invalid_argument("RootTuple: expected n exponents");
    for (auto& e : e_) {
        if (((e - (n + 1)) % 2) != 0)
            throw std::invalid_argument("RootTuple: exponent is not a 2n-th root of (-1)^{n+1}");
        e = canonical_exponent(n, e);
    }
    std::sort(e_.begin(), e_.end());
    if (std::adjacent_find(e_.begin(), e_.end()) != e_.end())
        throw std::invalid_argument("RootTuple: repeated root");
}

std::vector<CycloNum> RootTuple::points(long power) const {
    std::vector<CycloNum> out;
    out.reserve(e_.size());
    for (int e : e_) out.push_back(cyclo_root(field_order(), power * e));
    return out;
}

std::vector<CycloNum> RootTuple::scaled_points(const Rational& t) const {
    auto out = points();
    for (auto& x : out) x *= t;
    return out;
}

bool RootTuple::exclusive() const {
    std::set<int> s(e_.begin(), e_.end());
    for (int e : e_)
        if (s.count(canonical_exponent(n_, e + 2L * n_))) return false;
    return true;
}

bool RootTuple::self_symmetric() const {
    std::set<int> s(e_.begin(), e_.end());
    for (int e : e_)
        if (!s.count(canonical_exponent(n_, -e))) return false;
    return true;
}

std::string RootTuple::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]) + "/2";
    }
    return s + ")";
}

namespace {

struct TupleFamilies {
    std::vector<RootTuple> T, I, Is;
};

const TupleFamilies& families(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TupleFamilies>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        if (n < 1) throw std::invalid_argument("tuple rank must be positive");
        auto f = std::make_unique<TupleFamilies>();
        std::vector<int> roots;
        for (int e = -(n - 1); e <= 3 * n - 1; e += 2) roots.push_back(e);
        const int r = static_cast<int>(roots.size());
        // n-subsets of the 2n roots in lexicographic order
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> e(n);
            for (int k = 0; k < n; ++k) e[k] = roots[idx[k]];
            f->T.emplace_back(n, std::move(e));
            int k = n - 1;
            while (k >= 0 && idx[k] == r - n + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        }
        for (const auto& t : f->T)
            if (t.exclusive()) {
                f->I.push_back(t);
                if (t.self_symmetric()) f->Is.push_back(t);
            }
        slot = std::move(f);
    }
    return *slot;
}

RootTuple shifted(const RootTuple& J, long shift) {
    std::vector<int> e = J.exps();
    for (auto& x : e) x = canonical_exponent(J.rank(), x + shift);
    return RootTuple(J.rank(), std::move(e));
}

long count_orbits(const std::vector<RootTuple>& set, long shift, int steps) {
    std::set<RootTuple> seen;
    long orbits = 0;
    for (const auto& t : set) {
        if (seen.count(t)) continue;
        ++orbits;
        RootTuple cur = t;
        for (int s = 0; s < steps; ++s) {
            seen.insert(cur);
            cur = shifted(cur, shift);
        }
    }
    return orbits;
}

}  // namespace

const std::vector<RootTuple>& enumerate_T(int n) { return families(n).T; }
const std::vector<RootTuple>& enumerate_I(int n) { return families(n).I; }
const std::vector<RootTuple>& enumerate_Is(int n) { return families(n).Is; }

RootTuple base_tuple(int n) {
    std::vector<int> e;
    for (int k = 0; k < n; ++k) e.push_back(-(n - 1) + 2 * k);
    return RootTuple(n, std::move(e));
}

RootTuple hat(const RootTuple& J) {
    const int n = J.rank();
    std::vector<int> e;
    for (int x = -(n - 1); x <= 3 * n - 1; x += 2)
        if (!std::binary_search(J.exps().begin(), J.exps().end(), x)) e.push_back(x);
    return RootTuple(n, std::move(e));
}

RootTuple dual(const RootTuple& J) {
    if (!J.exclusive()) throw std::invalid_argument("dual: tuple " + J.to_string() + " is not exclusive");
    const int n = J.rank();
    // {zeta^{n - j*}} is the complement of {zeta^j}; in doubled exponents j* = 2n - e over hat(J).
    RootTuple h = hat(J);
    std::vector<int> e;
    for (int x : h.exps()) e.push_back(2 * n - x);
    return RootTuple(n, std::move(e));
}

CycloNum vandermonde(const RootTuple& J) {
    auto x = J.points();
    CycloNum v(J.field_order(), Rational(1));
    for (size_t k = 0; k < x.size(); ++k)
        for (size_t l = k + 1; l < x.size(); ++l) v *= x[k] - x[l];
    return v;
}

CycloNum vandermonde_sq(const RootTuple& J) {
    CycloNum v = vandermonde(J);
    return v * conj(v);
}

OrbitCounts orbit_counts(int n) {
    OrbitCounts c;
    Integer sum = 0;
    for (int d = 1; d <= n; d += 2) {
        if (n % d) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n / d);
        sum += euler_phi(d) * p;
    }
    if (sum % (2 * n) != 0) throw std::logic_error("orbit formula is not integral");
    c.big_formula = sum / (2 * n);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n / 2);
    c.small_formula = Rational(two_pow, 2);
    c.small_formula.canonicalize();

    const auto& I = enumerate_I(n);
    const auto& Is = enumerate_Is(n);
    c.exclusive_count = static_cast<long>(I.size());
    c.self_symmetric_count = static_cast<long>(Is.size());
    // U_{2n} is generated by zeta (doubled shift 2); Z_2 acts by -1 = zeta^n.
    c.big_enumerated = count_orbits(I, 2, 2 * n);
    c.small_enumerated = count_orbits(Is, 2L * n, 2);
    return c;
}

}  // namespace qsch
