#include "qsch/suites.hpp"

#include "qsch/peterson.hpp"
#include "qsch/positivity.hpp"
#include "qsch/qhring.hpp"
#include "qsch/tuples.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace qsch {

bool SuiteResult::ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok(); });
}

namespace {

Integer two_pow(int e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
}

IdentityCheck from_sweep(const SweepResult& s) {
    IdentityCheck c{s.name};
    c.checked = s.subjects;
    c.failed = static_cast<long>(s.failures.size());
    if (!s.failures.empty()) c.first_failure = s.failures.front();
    return c;
}

std::vector<IdentityCheck> presentation(RingTag tag) {
    IdentityCheck c{"relations of " + tag.to_string()};
    for (const auto& r : verify_presentation(tag).relations)
        c.record(r.residual.is_zero(), r.name + " residual " + r.residual.to_string());
    return {c};
}

std::vector<IdentityCheck> basis(int n) {
    std::vector<IdentityCheck> out;
    for (RingKind k : {RingKind::og, RingKind::lg}) {
        RingTag tag{k, n};
        IdentityCheck c{"graded basis of " + tag.to_string()};
        for (const auto& d : verify_basis(tag, n * (n + 1) / 2 + tag.q_degree()))
            c.record(d.ok(), "degree " + std::to_string(d.degree));
        out.push_back(c);
    }
    return out;
}

std::vector<IdentityCheck> poincare(int n) {
    IdentityCheck og{"pairing on OG(" + std::to_string(n) + ")"}, lg{"pairing on LG(" + std::to_string(n) + ")"};
    for (const auto& mu : enumerate_D(n))
        for (const auto& nu : enumerate_D(n)) {
            ZqElement expect;
            if (mu == nu) expect[0] = 1;
            const std::string where = "mu=(" + mu.to_string() + ") nu=(" + nu.to_string() + ")";
            og.record(pairing_og(mu, nu, n) == expect, where);
            lg.record(pairing_lg(mu, nu, n) == expect, where);
        }
    return {og, lg};
}

std::vector<IdentityCheck> compare(int n) {
    if (n < 2) throw std::invalid_argument("compare-76 needs n >= 2");
    IdentityCheck even{"OG(n) degree k against LG(n-1) degree 2k"}, odd{"OG(n) with part n against LG(n-1) degree 2k+1"};
    const auto& D = enumerate_D(n - 1);
    for (const auto& l : D)
        for (const auto& m : D)
            for (const auto& v : D)
                for (int k : {0, 1}) {
                    Comparison c = compare_og_lg(l, m, v, k, n);
                    const std::string where = "lambda=(" + l.to_string() + ") mu=(" + m.to_string() + ") nu=(" +
                                              v.to_string() + ") k=" + std::to_string(k);
                    if (c.even.applicable) even.record(Rational(c.even.og_value) == c.even.lg_scaled, where);
                    if (c.odd.applicable) odd.record(Rational(c.odd.og_value) == c.odd.lg_scaled, where);
                }
    return {even, odd};
}

IdentityCheck quantum_check(GroupKind kind, int n) {
    IdentityCheck c{"quantum parameter at the variety points, kind " + to_string(kind)};
    const int rank = kind == GroupKind::C ? n : n + 1;
    for (const auto& I : enumerate_I(rank))
        for (int t : {1, 2}) {
            CycloNum q = quantum_value(kind, I.scaled_points(Rational(t)));
            Rational tp = 1;
            for (int k = 0; k < 2 * rank; ++k) tp *= t;
            bool good = kind == GroupKind::C ? q == CycloNum(1, tp / 4) : q * q == CycloNum(1, 4 * tp);
            c.record(good, I.to_string() + " t=" + std::to_string(t));
        }
    return c;
}

using SuiteFn = std::function<std::vector<IdentityCheck>(int)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"ortho-62", [](int n) { return orthogonality_suite(n); }},
        {"basis-66", basis},
        {"presentation-31", [](int n) { return presentation({RingKind::lg, n}); }},
        {"presentation-32", [](int n) { return presentation({RingKind::og, n}); }},
        {"poincare-73", poincare},
        {"compare-76", compare},
        {"counts-53",
         [](int n) {
             return std::vector<IdentityCheck>{exclusive_count_check(n), self_symmetric_count_check(n), orbit_check(n)};
         }},
        {"membership-52", membership_checks},
        {"positivity-83",
         [](int n) {
             return std::vector<IdentityCheck>{from_sweep(characterization(GroupKind::C, n)),
                                               from_sweep(rectangle_schur(n))};
         }},
        {"positivity-84",
         [](int n) { return std::vector<IdentityCheck>{from_sweep(characterization(GroupKind::B, n))}; }},
        {"dominance-69",
         [](int n) { return std::vector<IdentityCheck>{from_sweep(sign_pattern(n)), from_sweep(dominance(n))}; }},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ortho-62",    "basis-66",   "presentation-31", "presentation-32",
                                                "poincare-73", "compare-76", "counts-53",       "membership-52",
                                                "positivity-83", "positivity-84", "dominance-69"};
    return names;
}

SuiteResult run_suite(const std::string& name, int n) {
    auto it = registry().find(name);
    if (it == registry().end()) throw UnknownSuite("unknown suite '" + name + "'");
    if (n < 1) throw std::invalid_argument("n must be positive");
    return {name, n, it->second(n)};
}

IdentityCheck exclusive_count_check(int n) {
    IdentityCheck c{"|I_n| = 2^n"};
    c.record(Integer(static_cast<long>(enumerate_I(n).size())) == two_pow(n),
             "n=" + std::to_string(n) + " enumerated " + std::to_string(enumerate_I(n).size()));
    return c;
}

IdentityCheck self_symmetric_count_check(int n) {
    IdentityCheck c{"|I_n^s| = 2^floor(n/2)"};
    c.record(Integer(static_cast<long>(enumerate_Is(n).size())) == two_pow(n / 2),
             "n=" + std::to_string(n) + " enumerated " + std::to_string(enumerate_Is(n).size()));
    return c;
}

IdentityCheck orbit_check(int n) {
    IdentityCheck c{"orbit counts"};
    OrbitCounts o = orbit_counts(n);
    const std::string at = "n=" + std::to_string(n);
    c.record(o.big_formula == o.big_enumerated,
             at + " big orbits formula " + o.big_formula.get_str() + " enumerated " + std::to_string(o.big_enumerated));
    c.record(o.small_formula == o.small_enumerated, at + " small orbits formula " + o.small_formula.get_str() +
                                                        " enumerated " + std::to_string(o.small_enumerated));
    return c;
}

std::vector<IdentityCheck> membership_checks(int n) {
    std::vector<IdentityCheck> out;
    std::vector<GroupKind> kinds{GroupKind::C, GroupKind::B};
    if (n >= 2) kinds.push_back(GroupKind::D);
    for (GroupKind k : kinds) {
        const int rank = k == GroupKind::B ? n + 1 : n;
        const auto& I = enumerate_I(rank);
        IdentityCheck tuple{"membership matches exclusive tuples, kind " + to_string(k)};
        IdentityCheck minors{"membership matches form and corner minors, kind " + to_string(k)};
        for (const auto& J : enumerate_T(rank))
            for (int t : {1, 2}) {
                PointVec x = J.scaled_points(Rational(t));
                const bool in = member(k, x);
                const std::string where = J.to_string() + " t=" + std::to_string(t);
                tuple.record(in == (std::find(I.begin(), I.end(), J) != I.end()), where);
                PetersonMatrix u = k == GroupKind::D ? build_v(x) : build_u(k, x);
                minors.record(member_by_minors(u) == in, where);
            }
        out.push_back(tuple);
        out.push_back(minors);
        if (k != GroupKind::D) out.push_back(quantum_check(k, n));
    }
    return out;
}

std::string suite_to_json(const SuiteResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"ok", c.ok()},
                          {"first_failure", c.first_failure.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.first_failure)}});
    nlohmann::json j{{"suite", r.suite}, {"n", r.n}, {"ok", r.ok()}, {"checks", checks}};
    if (!r.ok()) j["reason"] = "assertion_failed";
    return j.dump(1);
}

}  // namespace qsch
