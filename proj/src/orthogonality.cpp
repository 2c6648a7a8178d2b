#include "qsch/orthogonality.hpp"

#include "qsch/parallel.hpp"
#include "qsch/symfunc.hpp"
#include "qsch/tuples.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qsch {

void IdentityCheck::record(bool good, const std::string& where) {
    ++checked;
    if (good) return;
    if (failed++ == 0) first_failure = where;
}

namespace {

// Point values shared by the checks at one rank.
struct Tables {
    int n = 0;
    std::vector<RootTuple> I;
    std::vector<Partition> box;                     // R(n)
    std::vector<StrictPartition> strict;            // D(n)
    std::vector<std::vector<CycloNum>> hl_star;     // [J][lambda in R(n)] P_lambda(zeta^{J*})
    std::vector<std::vector<CycloNum>> omega_conj;  // [J][lambda in R(n)] conj(omega P_lambda (zeta^J))
    std::vector<std::vector<CycloNum>> omega_star;  // [J][lambda in R(n)] conj(omega P_lambda (zeta^{J*}))
    std::vector<std::vector<CycloNum>> qt_box;      // [I][lambda in R(n)] Qt_lambda(zeta^I)
    std::vector<std::vector<CycloNum>> pt;          // [I][lambda in D(n)] Pt_lambda(zeta^I)
    std::vector<std::vector<CycloNum>> pt_hat;      // [I][lambda in D(n)] Pt_{lambda-hat}(zeta^I)
    std::vector<CycloNum> vsq, s_rho;
    Rational scale;                                 // (2n)^n
};

const Tables& tables(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Tables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (slot) return *slot;
    auto t = std::make_unique<Tables>();
    t->n = n;
    t->I = enumerate_I(n);
    t->box = enumerate_R(n, n);
    t->strict = enumerate_D(n);
    const std::size_t m = t->I.size();
    t->hl_star.resize(m);
    t->omega_conj.resize(m);
    t->omega_star.resize(m);
    t->qt_box.resize(m);
    t->pt.resize(m);
    t->pt_hat.resize(m);
    t->vsq.resize(m);
    t->s_rho.resize(m);
    parallel_for(m, [&](std::size_t i) {
        PointVec pt = t->I[i].points();
        PointVec star = dual(t->I[i]).points();
        auto ev = at_point(pt);
        for (const auto& lam : t->box) {
            t->hl_star[i].push_back(hall_littlewood(lam, star));
            t->omega_conj[i].push_back(conj(hall_littlewood_omega(lam, pt)));
            t->omega_star[i].push_back(conj(hall_littlewood_omega(lam, star)));
            t->qt_box[i].push_back(ev.qtilde(lam));
        }
        for (const auto& lam : t->strict) {
            t->pt[i].push_back(ev.ptilde(lam.as_partition()));
            t->pt_hat[i].push_back(ev.ptilde(complement(lam, n).as_partition()));
        }
        t->vsq[i] = vandermonde_sq(t->I[i]);
        t->s_rho[i] = schur(rho(n).as_partition(), pt);
    });
    Integer s;
    mpz_ui_pow_ui(s.get_mpz_t(), 2 * n, n);
    t->scale = Rational(s);
    slot = std::move(t);
    return *slot;
}

std::string pair_label(const RootTuple& I, const RootTuple& J) { return "I=" + I.to_string() + " J=" + J.to_string(); }

std::string pair_label(const StrictPartition& a, const StrictPartition& b) {
    return "lambda=(" + a.to_string() + ") mu=(" + b.to_string() + ")";
}

IdentityCheck row_check(int n, const std::string& name,
                        const std::vector<std::vector<CycloNum>> Tables::*left) {
    const Tables& t = tables(n);
    IdentityCheck c{name};
    const std::size_t m = t.I.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            CycloNum s(4 * n);
            for (std::size_t l = 0; l < t.box.size(); ++l) s += (t.*left)[j][l] * t.qt_box[i][l];
            CycloNum expect = i == j ? t.vsq[i].inverse() * t.scale : CycloNum(4 * n);
            c.record(s == expect, pair_label(t.I[i], t.I[j]));
        }
    return c;
}

// Index of a strict partition inside R(n).
std::size_t box_index(const Tables& t, const StrictPartition& lam) {
    for (std::size_t l = 0; l < t.box.size(); ++l)
        if (t.box[l] == lam.as_partition()) return l;
    throw std::logic_error("strict partition outside the box");
}

IdentityCheck column_check(int n, const std::string& name,
                           const std::vector<std::vector<CycloNum>> Tables::*left) {
    const Tables& t = tables(n);
    IdentityCheck c{name};
    for (const auto& lam : t.strict)
        for (const auto& mu : t.strict) {
            const std::size_t a = box_index(t, lam), b = box_index(t, mu);
            CycloNum s(4 * n);
            for (std::size_t i = 0; i < t.I.size(); ++i) s += (t.*left)[i][a] * t.qt_box[i][b] * t.vsq[i];
            s = s * (1 / t.scale);
            c.record(s == CycloNum(4 * n, Rational(lam == mu ? 1 : 0)), pair_label(lam, mu));
        }
    return c;
}

}  // namespace

IdentityCheck check_root_product(int n) {
    const Tables& t = tables(n);
    IdentityCheck c{"root product"};
    for (const auto& I : t.I)
        for (const auto& J : t.I) {
            RootTuple Jh = hat(J);
            CycloNum p(4 * n, Rational(1));
            for (int e : I.exps())
                for (int f : Jh.exps()) p *= CycloNum(4 * n, Rational(1)) - cyclo_root(4 * n, e - f);
            CycloNum expect = I == J ? vandermonde_sq(I).inverse() * t.scale : CycloNum(4 * n);
            c.record(p == expect, pair_label(I, J));
        }
    return c;
}

IdentityCheck check_elementary_complete(int n) {
    IdentityCheck c{"E/H exchange"};
    for (const auto& I : enumerate_I(n)) {
        PointVec neg = I.points(-1), star = dual(I).points();
        for (int k = 0; k <= n; ++k) c.record(elem(k, neg) == complete(k, star), I.to_string() + " k=" + std::to_string(k));
    }
    return c;
}

IdentityCheck check_kernel_polynomial(int n) {
    const Tables& t = tables(n);
    IdentityCheck c{"kernel polynomial"};
    // n + 1 distinct values per variable pin down a polynomial of degree <= n in each
    std::vector<Rational> grid;
    for (int v = 0; v <= n; ++v) grid.emplace_back(v - 1, v + 2);
    for (auto& g : grid) g.canonicalize();
    long points = 1;
    for (int k = 0; k < n; ++k) points *= n + 1;
    for (std::size_t j = 0; j < t.I.size(); ++j) {
        RootTuple Jh = hat(t.I[j]);
        long bad = 0;
        for (long code = 0; code < points; ++code) {
            PointVec z;
            for (long rest = code, k = 0; k < n; ++k, rest /= n + 1) z.emplace_back(4 * n, grid[rest % (n + 1)]);
            auto ev = at_point(z);
            CycloNum lhs(4 * n);
            for (std::size_t l = 0; l < t.box.size(); ++l) lhs += t.hl_star[j][l] * ev.qtilde(t.box[l]);
            CycloNum rhs(4 * n, Rational(1));
            for (const auto& zk : z)
                for (int f : Jh.exps()) rhs *= CycloNum(4 * n, Rational(1)) - zk * cyclo_root(4 * n, -f);
            if (lhs != rhs) ++bad;
        }
        c.record(bad == 0, "J=" + t.I[j].to_string());
    }
    return c;
}

IdentityCheck check_row_hall_littlewood(int n) { return row_check(n, "row orthogonality, Hall-Littlewood", &Tables::hl_star); }
IdentityCheck check_row_omega(int n) { return row_check(n, "row orthogonality, omega", &Tables::omega_conj); }

IdentityCheck check_row_ptilde(int n) {
    const Tables& t = tables(n);
    IdentityCheck c{"row orthogonality, P-tilde"};
    for (std::size_t i = 0; i < t.I.size(); ++i)
        for (std::size_t j = 0; j < t.I.size(); ++j) {
            CycloNum s(4 * n);
            for (std::size_t l = 0; l < t.strict.size(); ++l) s += t.pt[i][l] * t.pt_hat[j][l];
            c.record(s == (i == j ? t.s_rho[i] : CycloNum(4 * n)), pair_label(t.I[i], t.I[j]));
        }
    return c;
}

IdentityCheck check_column_ptilde(int n) {
    const Tables& t = tables(n);
    IdentityCheck c{"column orthogonality, P-tilde"};
    std::vector<CycloNum> inv;
    for (const auto& s : t.s_rho) inv.push_back(s.inverse());
    for (std::size_t a = 0; a < t.strict.size(); ++a)
        for (std::size_t b = 0; b < t.strict.size(); ++b) {
            CycloNum s(4 * n);
            for (std::size_t i = 0; i < t.I.size(); ++i) s += t.pt[i][a] * t.pt_hat[i][b] * inv[i];
            c.record(s == CycloNum(4 * n, Rational(a == b ? 1 : 0)), pair_label(t.strict[a], t.strict[b]));
        }
    return c;
}

IdentityCheck check_column_hall_littlewood(int n) {
    return column_check(n, "column orthogonality, Hall-Littlewood", &Tables::hl_star);
}

IdentityCheck check_column_omega(int n) { return column_check(n, "column orthogonality, omega", &Tables::omega_star); }

std::vector<IdentityCheck> orthogonality_suite(int n) {
    std::vector<IdentityCheck> out{check_root_product(n),        check_elementary_complete(n),
                                   check_row_hall_littlewood(n), check_row_omega(n),
                                   check_row_ptilde(n),          check_column_ptilde(n),
                                   check_column_hall_littlewood(n), check_column_omega(n)};
    if (n <= 3) out.insert(out.begin() + 2, check_kernel_polynomial(n));
    return out;
}

}  // namespace qsch
