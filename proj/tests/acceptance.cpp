// One PASS/FAIL line per criterion; checks are exact and budgets are wall-clock seconds.

#include "qsch/orthogonality.hpp"
#include "qsch/peterson.hpp"
#include "qsch/positivity.hpp"
#include "qsch/qhring.hpp"
#include "qsch/suites.hpp"
#include "qsch/tuples.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qsch;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool good, const std::string& what) {
        if (good) return;
        if (pass) detail = what;
        else if (detail.size() < 400) detail += "; " + what;
        pass = false;
    }
    void absorb(const IdentityCheck& c) {
        require(c.ok(), c.name + " failed " + std::to_string(c.failed) + "/" + std::to_string(c.checked) +
                            (c.first_failure.empty() ? "" : " first at " + c.first_failure));
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 means no budget
    std::function<Outcome()> run;
};

StrictPartition sp(std::vector<int> parts, int n) { return StrictPartition(std::move(parts), n); }

Outcome ring_relations() {
    Outcome o;
    long residuals = 0;
    for (auto tag : {RingTag{RingKind::og, 2}, RingTag{RingKind::og, 3}, RingTag{RingKind::og, 4},
                     RingTag{RingKind::lg, 2}, RingTag{RingKind::lg, 3}}) {
        auto rep = verify_presentation(tag);
        const std::size_t expected_count = static_cast<std::size_t>(tag.n);  // n-1 tau_{r,r} plus tau_n^2, or r = 1..n
        o.require(rep.relations.size() == expected_count, tag.to_string() + " relation count");
        for (const auto& r : rep.relations) {
            ++residuals;
            o.require(r.residual.is_zero(), tag.to_string() + " " + r.name + " = " + r.residual.to_string());
        }
    }
    o.detail = o.pass ? std::to_string(residuals) + " residuals zero" : o.detail;
    return o;
}

Outcome three_engines() {
    Outcome o;
    for (auto tag : {RingTag{RingKind::og, 3}, RingTag{RingKind::lg, 2}}) {
        MultTable a = full_table(tag, Provenance::vi_formula);
        MultTable b = full_table(tag, Provenance::ortho_extraction);
        MultTable c = full_table(tag, Provenance::ideal_reduction);
        const std::size_t m = enumerate_D(tag.n).size();
        o.require(a.entries.size() == m * m, tag.to_string() + " table incomplete");
        if (auto d = first_difference(a, b)) o.require(false, tag.to_string() + " vi/ortho differ at " + d->first.to_string() + "*" + d->second.to_string());
        if (auto d = first_difference(a, c)) o.require(false, tag.to_string() + " vi/ideal differ at " + d->first.to_string() + "*" + d->second.to_string());
    }
    if (o.pass) o.detail = "OG(3) and LG(2) identical across three engines";
    return o;
}

Outcome integrality() {
    Outcome o;
    long checked = 0;
    std::vector<RingTag> tags;
    for (int n = 1; n <= 4; ++n) tags.push_back({RingKind::og, n});
    for (int n = 1; n <= 3; ++n) tags.push_back({RingKind::lg, n});
    for (auto tag : tags) {
        const VIEngine& e = engine(tag);
        const auto& D = e.basis();
        for (const auto& l : D)
            for (const auto& m : D)
                for (const auto& v : D) {
                    const int diff = l.weight() + m.weight() - v.weight();
                    if (diff < 0 || diff % tag.q_degree()) continue;
                    Rational r = e.gw_rational(l, m, v, diff / tag.q_degree());
                    ++checked;
                    o.require(r.get_den() == 1 && r >= 0, tag.to_string() + " (" + l.to_string() + ")(" + m.to_string() +
                                                              ")(" + v.to_string() + ") = " + r.get_str());
                }
    }
    if (o.pass) o.detail = std::to_string(checked) + " structure constants are nonnegative integers";
    return o;
}

Outcome listed_products() {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        RingTag tag{RingKind::og, n};
        QHClass t = QHClass::basis(tag, sp({n}, n));
        o.require(t * t == QHClass::q(tag), "tau_n^2 = q at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 4; ++n) {
        RingTag tag{RingKind::og, n};
        QHClass r = QHClass::basis(tag, rho(n));
        QHClass expect = n % 2 ? QHClass::q(tag, (n + 1) / 2) : QHClass::basis(tag, sp({n}, n), n / 2);
        QHClass got = r * r;
        o.require(got == expect, "tau_rho^2 at n=" + std::to_string(n) + " is " + got.to_string());
    }
    for (int n = 2; n <= 3; ++n) {
        RingTag tag{RingKind::lg, n};
        QHClass s = QHClass::basis(tag, sp({n}, n));
        o.require(s * s == QHClass::basis(tag, sp({n - 1}, n), 1), "sigma_n^2 = sigma_{n-1} q at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "all listed products reproduced";
    return o;
}

Outcome orthogonality() {
    Outcome o;
    long checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : {check_row_hall_littlewood(n), check_row_ptilde(n), check_column_ptilde(n),
                              check_column_hall_littlewood(n), check_column_omega(n)}) {
            checked += c.checked;
            IdentityCheck tagged = c;
            tagged.name = c.name + " n=" + std::to_string(n);
            o.absorb(tagged);
        }
    if (o.pass) o.detail = std::to_string(checked) + " index pairs exact";
    return o;
}

Outcome poincare() {
    Outcome o;
    auto sweep = [&](RingKind k, int n) {
        for (const auto& mu : enumerate_D(n))
            for (const auto& nu : enumerate_D(n)) {
                ZqElement expect;
                if (mu == nu) expect[0] = 1;
                ZqElement got = k == RingKind::og ? pairing_og(mu, nu, n) : pairing_lg(mu, nu, n);
                o.require(got == expect, RingTag{k, n}.to_string() + " (" + mu.to_string() + ", " + nu.to_string() +
                                             ") = " + to_string(got));
            }
    };
    sweep(RingKind::og, 3);
    sweep(RingKind::lg, 2);
    if (o.pass) o.detail = "64 + 16 pairings equal delta";
    return o;
}

Outcome comparison() {
    Outcome o;
    auto r = run_suite("compare-76", 3);
    long applicable = 0;
    for (const auto& c : r.checks) {
        applicable += c.checked;
        o.absorb(c);
    }
    o.require(applicable > 0, "no triple met the degree condition");
    if (o.pass) o.detail = std::to_string(applicable) + " applicable instances agree";
    return o;
}

Outcome counts() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        o.absorb(exclusive_count_check(n));
        o.absorb(self_symmetric_count_check(n));
    }
    for (int n = 1; n <= 10; ++n) o.absorb(orbit_check(n));
    if (o.pass) o.detail = "counts match for n <= 8, orbit formulas for n <= 10";
    return o;
}

Outcome membership() {
    Outcome o;
    long points = 0;
    for (GroupKind k : {GroupKind::C, GroupKind::B, GroupKind::D})
        for (int n = k == GroupKind::D ? 2 : 1; n <= (k == GroupKind::B ? 3 : 4); ++n) {
            const int rank = k == GroupKind::B ? n + 1 : n;
            const auto& I = enumerate_I(rank);
            for (const auto& J : enumerate_T(rank))
                for (int t : {1, 2}) {
                    ++points;
                    PointVec x = J.scaled_points(Rational(t));
                    const bool in = member(k, x);
                    const std::string where = to_string(k) + std::to_string(n) + " " + J.to_string() + " t=" + std::to_string(t);
                    o.require(in == (std::find(I.begin(), I.end(), J) != I.end()), "tuple characterization at " + where);
                    PetersonMatrix u = k == GroupKind::D ? build_v(x) : build_u(k, x);
                    o.require(member_by_minors(u) == in, "minor characterization at " + where);
                }
        }
    if (o.pass) o.detail = std::to_string(points) + " points consistent";
    return o;
}

Outcome positivity() {
    Outcome o;
    long subjects = 0, rejections = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const SweepResult& s : {sign_pattern(n), dominance(n), rectangle_schur(n)}) {
            subjects += s.subjects;
            o.require(s.ok(), s.name + ": " + (s.failures.empty() ? "" : s.failures.front()));
        }
    }
    auto sweep = [&](GroupKind k, int n) {
        SweepResult s = characterization(k, n);
        subjects += s.subjects;
        o.require(s.ok(), s.name + ": " + std::to_string(s.failures.size()) + " failures, first " +
                              (s.failures.empty() ? "" : s.failures.front()));
        const RootTuple base = base_tuple(k == GroupKind::C ? n : n + 1);
        for (const auto& r : s.reports) {
            if (r.tuple == base || !r.minors) continue;
            ++rejections;
            o.require(r.minors->first_negative.has_value(), s.name + " rejection without witness at " + r.tuple.to_string());
            if (r.minors->first_negative) {
                PetersonMatrix u = build_u(k, r.tuple.scaled_points(r.t));
                o.require(certified_sign(minor(u, *r.minors->first_negative)) == Sign::negative,
                          s.name + " witness does not re-verify at " + r.tuple.to_string());
            }
        }
    };
    for (int n = 1; n <= 4; ++n) sweep(GroupKind::C, n);
    for (int n = 1; n <= 3; ++n) sweep(GroupKind::B, n);
    if (o.pass)
        o.detail = std::to_string(subjects) + " subjects, " + std::to_string(rejections) + " rejections with re-verified witnesses";
    return o;
}

Outcome associativity() {
    Outcome o;
    RingTag tag{RingKind::og, 3};
    long triples = 0;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                QHClass x = QHClass::special(tag, a), y = QHClass::special(tag, b), z = QHClass::special(tag, c);
                ++triples;
                o.require((x * y) * z == x * (y * z),
                          "tau_" + std::to_string(a) + " tau_" + std::to_string(b) + " tau_" + std::to_string(c));
            }
    if (o.pass) o.detail = std::to_string(triples) + " generator triples associate";
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c{
        {1, "ring relations of OG(2..4) and LG(2..3)", 120, ring_relations},
        {2, "three-engine agreement on OG(3) and LG(2)", 300, three_engines},
        {3, "integrality and nonnegativity of VI structure constants", 600, integrality},
        {4, "listed products in OG and LG", 0, listed_products},
        {5, "row and column orthogonality for n <= 4", 180, orthogonality},
        {6, "Poincare duality on OG(3) and LG(2)", 0, poincare},
        {7, "OG(3) against LG(2) comparison identities", 0, comparison},
        {8, "tuple counts and orbit formulas", 30, counts},
        {9, "variety membership and minor consistency", 0, membership},
        {10, "sign, dominance and total nonnegativity sweeps", 600, positivity},
        {11, "associativity of generator products in OG(3)", 0, associativity},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) selected.push_back(std::atoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    int failures = 0;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s): " << o.detail;
        std::cout << line.str() << std::endl;
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
