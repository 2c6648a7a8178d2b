#include "qsch/positivity.hpp"

#include "qsch/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qsch {

namespace {

MinorSpec spec_from_masks(std::uint32_t rows, std::uint32_t cols, int size) {
    MinorSpec s;
    for (int i = 0; i < size; ++i) {
        if (rows >> i & 1) s.rows.push_back(i + 1);
        if (cols >> i & 1) s.cols.push_back(i + 1);
    }
    return s;
}

void tally(MinorStats& st, Sign s, const MinorSpec& spec) {
    switch (s) {
        case Sign::negative:
            if (st.negative++ == 0) st.first_negative = spec;
            break;
        case Sign::zero: ++st.zero; break;
        case Sign::positive: ++st.positive; break;
    }
}

// Every square minor by first-row Laplace expansion, memoized on (rows, cols).
class MinorTable {
public:
    explicit MinorTable(const PetersonMatrix& u) : u_(u), order_(u.entries[0][0].order()) {}

    const CycloNum& get(std::uint32_t rows, std::uint32_t cols) {
        const std::uint64_t key = std::uint64_t(rows) << 32 | cols;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        CycloNum acc(order_);
        if (rows == 0) {
            acc = CycloNum(order_, Rational(1));
        } else {
            const int r = std::countr_zero(rows);
            const std::uint32_t rest = rows & (rows - 1);
            int position = 0;
            for (std::uint32_t c = cols; c; c &= c - 1, ++position) {
                const int j = std::countr_zero(c);
                const CycloNum& a = u_.entries[r][j];
                if (a.is_zero()) continue;
                CycloNum term = a * get(rest, cols & ~(1u << j));
                if (position % 2) acc -= term;
                else acc += term;
            }
        }
        return memo_.emplace(key, std::move(acc)).first->second;
    }

private:
    const PetersonMatrix& u_;
    int order_;
    std::unordered_map<std::uint64_t, CycloNum> memo_;
};

std::vector<std::uint32_t> subsets_of_size(int size, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << size); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

void require_real(const PetersonMatrix& u) {
    for (const auto& row : u.entries)
        for (const auto& v : row)
            if (!is_real(v)) throw std::invalid_argument("total nonnegativity needs a real matrix");
}

MinorSpec contiguous(int r0, int c0, int k) {
    MinorSpec s;
    for (int i = 0; i < k; ++i) {
        s.rows.push_back(r0 + i);
        s.cols.push_back(c0 + i);
    }
    return s;
}

}  // namespace

MinorStats scan_minors(const PetersonMatrix& u, std::uint64_t seed, int samples) {
    require_real(u);
    const int s = u.size();
    MinorStats st;
    if (s <= kExhaustiveMinorSize) {
        MinorTable table(u);
        for (int k = 1; k <= s; ++k) {
            auto sets = subsets_of_size(s, k);
            for (auto rows : sets)
                for (auto cols : sets) tally(st, certified_sign(table.get(rows, cols)), spec_from_masks(rows, cols, s));
        }
        return st;
    }
    st.exhaustive = false;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    auto visit = [&](const MinorSpec& spec) {
        if (!seen.insert({spec.rows, spec.cols}).second) return;
        tally(st, certified_sign(minor(u, spec)), spec);
    };
    for (int k = 1; k <= s; ++k)
        for (int r = 1; r + k - 1 <= s; ++r)
            for (int c = 1; c + k - 1 <= s; ++c) visit(contiguous(r, c, k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_pick(1, s);
    std::vector<int> all(s);
    for (int i = 0; i < s; ++i) all[i] = i + 1;
    for (int trial = 0; trial < samples; ++trial) {
        const int k = size_pick(rng);
        MinorSpec spec;
        std::sample(all.begin(), all.end(), std::back_inserter(spec.rows), k, rng);
        std::sample(all.begin(), all.end(), std::back_inserter(spec.cols), k, rng);
        visit(spec);
    }
    return st;
}

NonnegResult totally_nonneg(const PetersonMatrix& u) {
    NonnegResult r;
    r.stats = scan_minors(u);
    r.nonneg = r.stats.negative == 0;
    r.witness = r.stats.first_negative;
    return r;
}

bool PositivityReport::all_positive() const {
    return real && std::all_of(signs.begin(), signs.end(), [](const SignEntry& e) { return e.sign == Sign::positive; });
}

bool PositivityReport::some_negative() const {
    return real && std::any_of(signs.begin(), signs.end(), [](const SignEntry& e) { return e.sign == Sign::negative; });
}

PositivityReport schubert_signs(GroupKind kind, const RootTuple& I, const Rational& t) {
    if (kind == GroupKind::D) throw std::invalid_argument("schubert_signs takes kind C or B");
    PositivityReport r;
    r.kind = kind;
    r.n = kind == GroupKind::C ? I.rank() : I.rank() - 1;
    r.tuple = I;
    r.t = t;
    if (!I.self_symmetric()) {
        r.real = false;
        return r;
    }
    auto ev = at_point(I.scaled_points(t));
    for (const auto& lam : enumerate_D(r.n)) {
        CycloNum v = kind == GroupKind::C ? ev.ptilde(lam.as_partition()) : ev.qtilde(lam.as_partition());
        if (!is_real(v)) {
            r.real = false;
            r.signs.clear();
            return r;
        }
        r.signs.push_back({lam, certified_sign(v)});
    }
    return r;
}

PositivityReport full_report(GroupKind kind, const RootTuple& I, const Rational& t) {
    PositivityReport r = schubert_signs(kind, I, t);
    if (r.real) r.minors = scan_minors(build_u(kind, I.scaled_points(t)));
    return r;
}

const std::vector<Rational>& sample_scales() {
    static const std::vector<Rational> s{Rational(1, 2), Rational(1), Rational(2)};
    return s;
}

SweepResult sign_pattern(int n) {
    SweepResult out;
    out.name = "sign pattern at roots of unity, n=" + std::to_string(n);
    const RootTuple base = base_tuple(n);
    for (const auto& I : enumerate_Is(n)) {
        PositivityReport r = schubert_signs(GroupKind::C, I);
        ++out.subjects;
        if (!r.real) out.failures.push_back(I.to_string() + ": non-real values");
        else if (I == base && !r.all_positive()) out.failures.push_back(I.to_string() + ": base tuple has a non-positive value");
        else if (I != base && !r.some_negative()) out.failures.push_back(I.to_string() + ": no negative value");
        out.reports.push_back(std::move(r));
    }
    return out;
}

SweepResult dominance(int n) {
    SweepResult out;
    out.name = "dominance by the base tuple, n=" + std::to_string(n);
    auto base = at_point(base_tuple(n).points());
    const auto& I = enumerate_I(n);
    const auto& D = enumerate_D(n);
    std::vector<std::vector<std::string>> bad(I.size());
    parallel_for(I.size(), [&](std::size_t i) {
        auto ev = at_point(I[i].points());
        for (const auto& lam : D) {
            CycloNum b = base.ptilde(lam.as_partition());
            CycloNum v = ev.ptilde(lam.as_partition());
            if (certified_sign(b * b - v * conj(v)) == Sign::negative)
                bad[i].push_back("I=" + I[i].to_string() + " lambda=(" + lam.to_string() + ")");
        }
    });
    for (auto& b : bad) out.failures.insert(out.failures.end(), b.begin(), b.end());
    out.subjects = static_cast<long>(I.size() * D.size());
    return out;
}

namespace {

// Signs of Qt_lambda for lambda in D(n + 1) but outside D(n), at the same point.
std::string extended_b_signs(const PositivityReport& r) {
    auto ev = at_point(r.tuple.scaled_points(r.t));
    std::string out = "outside D(n):";
    for (const auto& lam : enumerate_D(r.n + 1)) {
        if (!lam.contains(r.n + 1)) continue;
        out += " (" + lam.to_string() + ")" + to_string(certified_sign(ev.qtilde(lam.as_partition())));
    }
    return out;
}

}  // namespace

SweepResult characterization(GroupKind kind, int n) {
    if (kind == GroupKind::D) throw std::invalid_argument("characterization takes kind C or B");
    SweepResult out;
    out.name = "total nonnegativity, kind " + to_string(kind) + ", n=" + std::to_string(n);
    const int rank = kind == GroupKind::C ? n : n + 1;
    const RootTuple base = base_tuple(rank);
    std::vector<std::pair<RootTuple, Rational>> subjects;
    for (const auto& I : enumerate_Is(rank))
        for (const auto& t : sample_scales()) subjects.emplace_back(I, t);
    std::vector<PositivityReport> reports(subjects.size());
    parallel_for(subjects.size(), [&](std::size_t i) { reports[i] = full_report(kind, subjects[i].first, subjects[i].second); });
    for (auto& r : reports) {
        ++out.subjects;
        const std::string who = r.tuple.to_string() + " t=" + r.t.get_str();
        if (!r.real || !r.minors) {
            out.failures.push_back(who + ": non-real point");
        } else if (r.tuple == base) {
            if (r.minors->negative) out.failures.push_back(who + ": negative minor " + r.minors->first_negative->to_string());
            if (!r.all_positive()) out.failures.push_back(who + ": non-positive Schubert value");
        } else {
            if (!r.minors->negative) out.failures.push_back(who + ": no negative minor");
            if (!r.some_negative()) {
                std::string msg = who + ": no negative Schubert value although minor " +
                                  (r.minors->first_negative ? r.minors->first_negative->to_string() : "-") + " is negative";
                out.failures.push_back(msg);
                if (kind == GroupKind::B) out.notes.push_back(who + ": " + extended_b_signs(r));
            }
        }
        out.reports.push_back(std::move(r));
    }
    return out;
}

SweepResult rectangle_schur(int n) {
    SweepResult out;
    out.name = "rectangular Schur positivity, n=" + std::to_string(n);
    const RootTuple base = base_tuple(n);
    for (const auto& t : sample_scales()) {
        PointVec x = base.scaled_points(t);
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= n; ++k) {
                ++out.subjects;
                CycloNum s = schur(Partition(std::vector<int>(k, m)), x);
                if (!is_real(s) || certified_sign(s) != Sign::positive)
                    out.failures.push_back("t=" + t.get_str() + " (" + std::to_string(m) + "^" + std::to_string(k) + ")");
            }
    }
    return out;
}

namespace {

nlohmann::json spec_json(const MinorSpec& s) { return {{"rows", s.rows}, {"cols", s.cols}}; }

nlohmann::json report_json(const PositivityReport& r) {
    nlohmann::json j{{"kind", to_string(r.kind)}, {"n", r.n}, {"tuple", r.tuple.to_string()},
                     {"t", r.t.get_str()},      {"real", r.real}};
    nlohmann::json signs = nlohmann::json::object();
    if (r.real)
        for (const auto& e : r.signs) signs["(" + e.lambda.to_string() + ")"] = to_string(e.sign);
    else
        signs = "non-real";
    j["schubert_signs"] = signs;
    if (r.minors) {
        nlohmann::json m{{"negative", r.minors->negative}, {"zero", r.minors->zero},
                         {"positive", r.minors->positive}, {"exhaustive", r.minors->exhaustive}};
        m["witness"] = r.minors->first_negative ? spec_json(*r.minors->first_negative) : nlohmann::json(nullptr);
        j["minor_stats"] = m;
    }
    return j;
}

}  // namespace

std::string report_to_json(const PositivityReport& r) { return report_json(r).dump(1); }

std::string sweep_to_json(const SweepResult& s) {
    nlohmann::json j{{"name", s.name}, {"subjects", s.subjects}, {"ok", s.ok()}, {"failures", s.failures}, {"notes", s.notes}};
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : s.reports) reps.push_back(report_json(r));
    j["reports"] = reps;
    return j.dump(1);
}

}  // namespace qsch
