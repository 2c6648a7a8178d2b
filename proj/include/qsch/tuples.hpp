#pragma once

#include "qsch/cyclotomic.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qsch {

// An n-tuple of distinct 2n-th roots of (-1)^{n+1}. Exponents are stored
// doubled, as powers of zeta_{4n} = e^{i pi / 2n}, so j_k = exps[k] / 2.
// They are kept sorted inside the window [-(n-1), 3n-1].
class RootTuple {
public:
    RootTuple() = default;
    RootTuple(int n, std::vector<int> doubled_exps);

    int rank() const noexcept { return n_; }
    int field_order() const noexcept { return 4 * n_; }
    const std::vector<int>& exps() const noexcept { return e_; }

    // zeta^{p * j_k} for each k, in Q(zeta_{4n}).
    std::vector<CycloNum> points(long power = 1) const;
    std::vector<CycloNum> scaled_points(const Rational& t) const;

    bool exclusive() const;
    bool self_symmetric() const;

    std::string to_string() const;

    friend auto operator<=>(const RootTuple&, const RootTuple&) = default;

private:
    int n_ = 0;
    std::vector<int> e_;
};

// Doubled exponent reduced into the window [-(n-1), 3n-1].
int canonical_exponent(int n, long e);

const std::vector<RootTuple>& enumerate_T(int n);
const std::vector<RootTuple>& enumerate_I(int n);
const std::vector<RootTuple>& enumerate_Is(int n);

RootTuple base_tuple(int n);
RootTuple hat(const RootTuple& J);
RootTuple dual(const RootTuple& J);

CycloNum vandermonde(const RootTuple& J);
CycloNum vandermonde_sq(const RootTuple& J);

struct OrbitCounts {
    Integer big_formula;      // |O_n| by the Burnside-type closed form
    Rational small_formula;   // |o_n| = 2^{floor(n/2) - 1}
    long big_enumerated = 0;  // orbits of U_{2n} on I_n
    long small_enumerated = 0;
    long exclusive_count = 0;
    long self_symmetric_count = 0;
};

OrbitCounts orbit_counts(int n);

}  // namespace qsch
