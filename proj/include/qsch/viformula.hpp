#pragma once

#include "qsch/cyclotomic.hpp"
#include "qsch/partitions.hpp"
#include "qsch/symfunc.hpp"
#include "qsch/tuples.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsch {

enum class RingKind { og, lg };

struct RingTag {
    RingKind kind = RingKind::og;
    int n = 1;

    // weight drop per power of q: 2n for OG(n), n+1 for LG(n)
    int q_degree() const { return kind == RingKind::og ? 2 * n : n + 1; }
    // rank of the root tuples the formulas sum over
    int tuple_rank() const { return kind == RingKind::og ? n : n + 1; }
    std::string to_string() const;
    static RingTag parse(const std::string& name, int n);

    friend auto operator<=>(const RingTag&, const RingTag&) = default;
};

class FormulaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Term = std::pair<StrictPartition, int>;  // (nu, q-power)

// Evaluates the Vafa-Intriligator type sums for one ring. All point values
// entering the sums are computed once in the constructor; queries only
// combine them, so an engine can be shared across threads.
class VIEngine {
public:
    explicit VIEngine(RingTag tag, int jobs = 0);

    const RingTag& tag() const noexcept { return tag_; }
    const std::vector<StrictPartition>& basis() const noexcept { return basis_; }
    const std::vector<RootTuple>& tuples() const noexcept { return tuples_; }

    // <lambda, mu, nu-hat>_d exactly, before any integrality check.
    Rational gw_rational(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                         int d) const;
    // Same value, required to be a nonnegative integer (FormulaError otherwise).
    Integer gw(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int d) const;

    // All nonzero structure constants of the product of two basis classes.
    std::map<Term, Integer> product(const StrictPartition& lambda, const StrictPartition& mu) const;

    // OG only: coefficients of a homogeneous symmetric P in the basis
    // Pt_nu q^k, using P(zeta^J) in place of Pt_lambda Pt_mu.
    std::map<Term, Rational> expand(const SparsePoly& p) const;

private:
    int index_of(const StrictPartition& p) const;
    Rational prefactor(const StrictPartition& nu, int d) const;
    Rational combine(const std::vector<CycloNum>& b, int nu_index, int d) const;

    RingTag tag_;
    std::vector<StrictPartition> basis_;
    std::vector<RootTuple> tuples_;
    // A[lambda][J]: Pt_lambda(zeta^J) for OG, Qt_lambda(zeta^J) for LG
    std::vector<std::vector<CycloNum>> a_;
    // W[parity][nu][J] = |Vand(zeta^J)|^2 sum_m P_{nu padded by m}(zeta^{J*})
    std::vector<std::vector<std::vector<CycloNum>>> w_;
};

// Engine shared per ring, built on first use.
const VIEngine& engine(RingTag tag);

Integer gw_og(int n, const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int k);
Integer gw_lg(int n, const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int d);

std::map<Term, Rational> expand_in_basis_og(const SparsePoly& p, int n);

// Element of Z[q] as power -> coefficient.
using ZqElement = std::map<int, Integer>;
std::string to_string(const ZqElement& z);

// Coefficient of the rho_n class in (mu class) * (nu-hat class).
ZqElement pairing_og(const StrictPartition& mu, const StrictPartition& nu, int n);
ZqElement pairing_lg(const StrictPartition& mu, const StrictPartition& nu, int n);

struct ComparisonSides {
    Integer og_value;
    Rational lg_scaled;
    bool applicable = false;  // degree condition met on the OG side
};

struct Comparison {
    ComparisonSides even;  // OG(n) degree k vs LG(n-1) degree 2k
    ComparisonSides odd;   // OG(n) with (n, nu) vs LG(n-1) degree 2k+1
};

// lambda, mu, nu in D(n-1).
Comparison compare_og_lg(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu, int k,
                         int n);

}  // namespace qsch
