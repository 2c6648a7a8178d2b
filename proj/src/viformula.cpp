#include "qsch/viformula.hpp"

#include "qsch/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qsch {

std::string RingTag::to_string() const { return (kind == RingKind::og ? "OG(" : "LG(") + std::to_string(n) + ")"; }

RingTag RingTag::parse(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    if (name == "og" || name == "OG") return {RingKind::og, n};
    if (name == "lg" || name == "LG") return {RingKind::lg, n};
    throw std::invalid_argument("unknown ring '" + name + "' (expected og or lg)");
}

VIEngine::VIEngine(RingTag tag, int jobs) : tag_(tag) {
    if (tag.n < 1) throw std::invalid_argument("rank must be at least 1");
    const int n = tag.n, r = tag.tuple_rank();
    const bool og = tag.kind == RingKind::og;
    basis_ = enumerate_D(n);
    tuples_ = enumerate_I(r);
    const std::size_t nb = basis_.size(), nt = tuples_.size();

    a_.assign(nb, std::vector<CycloNum>(nt));
    const int parities = og ? 1 : 2;
    w_.assign(parities, std::vector<std::vector<CycloNum>>(nb, std::vector<CycloNum>(nt)));

    parallel_for(
        nt,
        [&](std::size_t j) {
            const RootTuple& J = tuples_[j];
            auto ev = at_point(J.points());
            for (std::size_t b = 0; b < nb; ++b) {
                const Partition& lam = basis_[b].as_partition();
                a_[b][j] = og ? ev.ptilde(lam) : ev.qtilde(lam);
            }
            PointVec star = dual(J).points();
            CycloNum vsq = vandermonde_sq(J);
            for (int par = 0; par < parities; ++par)
                for (std::size_t b = 0; b < nb; ++b) {
                    const StrictPartition& nu = basis_[b];
                    const bool odd = par == 1;
                    const int top = og ? bound_a(nu, n) : bound_b(nu, odd, n);
                    CycloNum s(J.field_order());
                    for (int m = 0; m <= top; ++m)
                        s += hall_littlewood(og ? pad_og(nu, m, n) : pad_lg(nu, m, odd, n), star);
                    w_[par][b][j] = s * vsq;
                }
        },
        jobs);
}

int VIEngine::index_of(const StrictPartition& p) const {
    StrictPartition key(p.parts(), tag_.n);
    auto it = std::lower_bound(basis_.begin(), basis_.end(), key);
    return static_cast<int>(it - basis_.begin());
}

Rational VIEngine::prefactor(const StrictPartition& nu, int d) const {
    const int n = tag_.n;
    if (tag_.kind == RingKind::og) {
        Integer num, den;
        mpz_ui_pow_ui(num.get_mpz_t(), 2, nu.length() + 2 * d);
        mpz_ui_pow_ui(den.get_mpz_t(), 2 * n, n);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Integer den, g;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, d);
    mpz_ui_pow_ui(g.get_mpz_t(), 2 * n + 2, n + 1);
    Rational r(Integer(1), den * g);
    r.canonicalize();
    return r;
}

Rational VIEngine::combine(const std::vector<CycloNum>& b, int nu_index, int d) const {
    const auto& w = w_[tag_.kind == RingKind::og ? 0 : (d % 2)][nu_index];
    CycloNum s(tuples_.front().field_order());
    for (std::size_t j = 0; j < b.size(); ++j) s += b[j] * w[j];
    auto r = as_rational(s);
    if (!r) throw FormulaError("non-rational result");
    return *r * prefactor(basis_[nu_index], d);
}

namespace {

Integer checked_integer(const Rational& v) {
    if (v.get_den() != 1) throw FormulaError("non-integer result " + v.get_str());
    if (sgn(v) < 0) throw FormulaError("negative result " + v.get_str());
    return v.get_num();
}

}  // namespace

Rational VIEngine::gw_rational(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                               int d) const {
    if (d < 0) return 0;
    if (lambda.weight() + mu.weight() != nu.weight() + tag_.q_degree() * d) return 0;
    const int il = index_of(lambda), im = index_of(mu), in = index_of(nu);
    std::vector<CycloNum> b(tuples_.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = a_[il][j] * a_[im][j];
    return combine(b, in, d);
}

Integer VIEngine::gw(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                     int d) const {
    return checked_integer(gw_rational(lambda, mu, nu, d));
}

std::map<Term, Integer> VIEngine::product(const StrictPartition& lambda, const StrictPartition& mu) const {
    const int il = index_of(lambda), im = index_of(mu);
    std::vector<CycloNum> b(tuples_.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = a_[il][j] * a_[im][j];
    const int total = lambda.weight() + mu.weight(), qd = tag_.q_degree();
    std::map<Term, Integer> out;
    for (std::size_t v = 0; v < basis_.size(); ++v) {
        int diff = total - basis_[v].weight();
        if (diff < 0 || diff % qd) continue;
        Integer c = checked_integer(combine(b, static_cast<int>(v), diff / qd));
        if (c != 0) out.emplace(Term{basis_[v], diff / qd}, c);
    }
    return out;
}

std::map<Term, Rational> VIEngine::expand(const SparsePoly& p) const {
    if (tag_.kind != RingKind::og) throw std::invalid_argument("expansion is implemented for OG only");
    if (p.nvars() != tag_.n) throw std::invalid_argument("polynomial must have n variables");
    std::map<Term, Rational> out;
    if (p.is_zero()) return out;
    if (!p.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
    if (!p.is_symmetric()) throw std::invalid_argument("polynomial is not symmetric");
    std::vector<CycloNum> b(tuples_.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = p.evaluate(tuples_[j].points());
    const int deg = p.total_degree(), qd = tag_.q_degree();
    for (std::size_t v = 0; v < basis_.size(); ++v) {
        int diff = deg - basis_[v].weight();
        if (diff < 0 || diff % qd) continue;
        Rational c = combine(b, static_cast<int>(v), diff / qd);
        if (c != 0) out.emplace(Term{basis_[v], diff / qd}, c);
    }
    return out;
}

const VIEngine& engine(RingTag tag) {
    static std::mutex mu;
    static std::map<RingTag, std::unique_ptr<VIEngine>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[tag];
    if (!slot) slot = std::make_unique<VIEngine>(tag);
    return *slot;
}

Integer gw_og(int n, const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int k) {
    return engine({RingKind::og, n}).gw(lambda, mu, nu, k);
}

Integer gw_lg(int n, const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int d) {
    return engine({RingKind::lg, n}).gw(lambda, mu, nu, d);
}

std::map<Term, Rational> expand_in_basis_og(const SparsePoly& p, int n) {
    return engine({RingKind::og, n}).expand(p);
}

std::string to_string(const ZqElement& z) {
    if (z.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : z) {
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

ZqElement pairing(RingTag tag, const StrictPartition& mu, const StrictPartition& nu) {
    const int qd = tag.q_degree();
    int diff = mu.weight() - nu.weight();
    ZqElement z;
    if (diff < 0 || diff % qd) return z;
    const int n = tag.n;
    Integer c = engine(tag).gw(mu, complement(StrictPartition(nu.parts(), n), n), rho(n), diff / qd);
    if (c != 0) z[diff / qd] = c;
    return z;
}

Rational power_of_two(int e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e < 0 ? -e : e);
    Rational r = e < 0 ? Rational(Integer(1), p) : Rational(p);
    r.canonicalize();
    return r;
}

}  // namespace

ZqElement pairing_og(const StrictPartition& mu, const StrictPartition& nu, int n) {
    return pairing({RingKind::og, n}, mu, nu);
}

ZqElement pairing_lg(const StrictPartition& mu, const StrictPartition& nu, int n) {
    return pairing({RingKind::lg, n}, mu, nu);
}

Comparison compare_og_lg(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int k,
                         int n) {
    if (n < 2) throw std::invalid_argument("comparison needs n >= 2");
    const StrictPartition l(lambda.parts(), n - 1), m(mu.parts(), n - 1), v(nu.parts(), n - 1);
    const VIEngine& og = engine({RingKind::og, n});
    const VIEngine& lg = engine({RingKind::lg, n - 1});
    const int ll = l.length() + m.length();
    Comparison c;

    StrictPartition v_og(v.parts(), n);
    c.even.applicable = l.weight() + m.weight() == v.weight() + 2 * n * k;
    c.even.og_value = og.gw(StrictPartition(l.parts(), n), StrictPartition(m.parts(), n), v_og, k);
    c.even.lg_scaled = power_of_two(4 * k + v.length() - ll) * Rational(lg.gw(l, m, v, 2 * k));

    std::vector<int> tilde{n};
    tilde.insert(tilde.end(), v.parts().begin(), v.parts().end());
    StrictPartition v_tilde(tilde, n);
    c.odd.applicable = l.weight() + m.weight() == v_tilde.weight() + 2 * n * k;
    c.odd.og_value = og.gw(StrictPartition(l.parts(), n), StrictPartition(m.parts(), n), v_tilde, k);
    c.odd.lg_scaled = power_of_two(4 * k + 1 + v_tilde.length() - ll) * Rational(lg.gw(l, m, v, 2 * k + 1));
    return c;
}

}  // namespace qsch
