#pragma once

#include "qsch/peterson.hpp"
#include "qsch/tuples.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsch {

struct MinorStats {
    long negative = 0, zero = 0, positive = 0;
    bool exhaustive = true;
    std::optional<MinorSpec> first_negative;
    long total() const { return negative + zero + positive; }
};

// Square minors are scanned exhaustively up to this matrix size, sampled above.
inline constexpr int kExhaustiveMinorSize = 8;

// Signs of the square minors of a real matrix; throws std::invalid_argument
// when an entry is not fixed by complex conjugation.
MinorStats scan_minors(const PetersonMatrix& u, std::uint64_t seed = 1, int samples = 4000);

struct NonnegResult {
    bool nonneg = false;
    std::optional<MinorSpec> witness;  // a negative minor when nonneg is false
    MinorStats stats;
};
NonnegResult totally_nonneg(const PetersonMatrix& u);

struct SignEntry {
    StrictPartition lambda;
    Sign sign;
};

// Subject (kind, I, t) with its minor census and Schubert signs. For kind C
// the signs are of Pt_lambda, for kind B of Qt_lambda over the rank n + 1 tuple.
struct PositivityReport {
    GroupKind kind = GroupKind::C;
    int n = 0;
    RootTuple tuple;
    Rational t{1};
    bool real = true;
    std::vector<SignEntry> signs;
    std::optional<MinorStats> minors;

    bool all_positive() const;
    bool some_negative() const;
};

// Signs at t * zeta^I; non-self-symmetric tuples are reported with real = false.
PositivityReport schubert_signs(GroupKind kind, const RootTuple& I, const Rational& t = 1);
// Same, plus the minor census of the matrix model at t * zeta^I.
PositivityReport full_report(GroupKind kind, const RootTuple& I, const Rational& t);

struct SweepResult {
    std::string name;
    long subjects = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // diagnostics attached to failures
    std::vector<PositivityReport> reports;
    bool ok() const { return subjects > 0 && failures.empty(); }
};

// Sign pattern at the roots of unity: positivity at I_0, a negative value
// at every other self-symmetric tuple.
SweepResult sign_pattern(int n);
// Pt_lambda(zeta^{I_0})^2 >= |Pt_lambda(zeta^I)|^2 for every lambda and I.
SweepResult dominance(int n);
// Total nonnegativity characterization on the C side (size 2n) or
// the B side (size 2n + 1) over the self-symmetric tuples and t in {1/2, 1, 2}.
SweepResult characterization(GroupKind kind, int n);
// Rectangular Schur values s_{(m^k)}(t zeta^{I_0}) > 0 for m, k <= n.
SweepResult rectangle_schur(int n);

const std::vector<Rational>& sample_scales();

std::string report_to_json(const PositivityReport& r);
std::string sweep_to_json(const SweepResult& s);

}  // namespace qsch
