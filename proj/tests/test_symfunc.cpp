#include "doctest.h"

#include "qsch/symfunc.hpp"
#include "qsch/tuples.hpp"

#include <algorithm>
#include <random>

using namespace qsch;

namespace {

PointVec rational_point(std::vector<long> v) {
    PointVec p;
    for (long x : v) p.emplace_back(1, Rational(x));
    return p;
}

// Coset form of P_lambda(x; t): sum over distinct rearrangements alpha of the
// padded lambda of x^alpha prod_{alpha_a > alpha_b} (x_a - t x_b)/(x_a - x_b).
CycloNum hl_coset(const Partition& lambda, const PointVec& x, const Rational& t) {
    const int n = static_cast<int>(x.size());
    std::vector<int> alpha(n, 0);
    for (int i = 0; i < lambda.length(); ++i) alpha[i] = lambda.part(i);
    std::sort(alpha.begin(), alpha.end());
    int order = 1;
    for (const auto& z : x) order = std::max(order, z.order());
    CycloNum total(order);
    do {
        CycloNum term(order, Rational(1));
        for (int a = 0; a < n; ++a) term *= pow(x[a], alpha[a]);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (alpha[a] > alpha[b]) term *= (x[a] - x[b] * t) / (x[a] - x[b]);
        total += term;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return total;
}

PointVec random_root_point(int n, int m, std::mt19937& rng) {
    std::vector<int> e(m);
    for (int i = 0; i < m; ++i) e[i] = i;
    std::shuffle(e.begin(), e.end(), rng);
    PointVec p;
    for (int i = 0; i < n; ++i) p.push_back(cyclo_root(m, e[i]));
    return p;
}

}  // namespace

TEST_CASE("elementary and complete values") {
    PointVec any = rational_point({5, -2, 7});
    CHECK(elem(0, any).is_one());
    CHECK(complete(0, any).is_one());
    CHECK(elem(2, rational_point({1, 1})) == CycloNum(1, Rational(1)));
    CHECK(complete(2, rational_point({1, 1})) == CycloNum(1, Rational(3)));
    CHECK(elem(4, any).is_zero());
    CHECK(elem(-1, any).is_zero());
    CHECK(complete(-1, any).is_zero());
    CHECK(elem(3, base_tuple(3).points(2)).is_one());
    for (int k = 0; k <= 5; ++k) {
        CHECK(elem_poly(k, 3).evaluate(any) == elem(k, any));
        CHECK(complete_poly(k, 3).evaluate(any) == complete(k, any));
    }
}

TEST_CASE("SparsePoly basics") {
    SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
    SparsePoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.is_homogeneous());
    CHECK_FALSE(p.is_symmetric());
    CHECK((x * y).is_symmetric());
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.substitute({y, x}) == -p);
    CHECK(p.evaluate(rational_point({3, 1})) == CycloNum(1, Rational(8)));
}

TEST_CASE("Schur: Jacobi-Trudi against the bialternant") {
    PointVec pt = rational_point({2, -3, 5});
    CHECK(schur(Partition(), pt).is_one());
    CHECK(schur(Partition({1}), pt) == elem(1, pt));
    std::mt19937 rng(5);
    for (int n = 1; n <= 4; ++n) {
        PointVec rp = random_root_point(n, 12, rng);
        PointVec qp;
        for (int i = 0; i < n; ++i) qp.emplace_back(1, Rational(3 * i - 4, 1 + i));
        for (const auto& lam : enumerate_R(n, 4)) {
            CHECK(schur(lam, rp) == schur_bialternant(lam, rp));
            CHECK(schur(lam, qp) == schur_bialternant(lam, qp));
        }
    }
    // column shape is E_k, row shape is H_k
    PointVec p4 = rational_point({1, 2, 3, 4});
    CHECK(schur(Partition({1, 1, 1}), p4) == elem(3, p4));
    CHECK(schur(Partition({3}), p4) == complete(3, p4));
}

TEST_CASE("Schur values at positive points are positive") {
    for (int n = 1; n <= 3; ++n) {
        RootTuple I0 = base_tuple(n);
        for (Rational t : {Rational(1, 2), Rational(1), Rational(2)})
            for (int m = 1; m <= n; ++m)
                for (int k = 1; k <= n; ++k) {
                    Partition box(std::vector<int>(k, m));
                    CHECK(certified_sign(schur(box, I0.scaled_points(t))) == Sign::positive);
                }
    }
}

TEST_CASE("Q-tilde pairs") {
    for (int n = 1; n <= 5; ++n) {
        auto sym = symbolic(n);
        for (int i = 0; i <= n; ++i) CHECK(sym.qtilde_pair(i, 0) == elem_poly(i, n));
        // Q_{i,i}(x) = E_i(x_1^2, ..., x_n^2)
        std::vector<SparsePoly> squares;
        for (int v = 0; v < n; ++v) squares.push_back(SparsePoly::variable(n, v) * SparsePoly::variable(n, v));
        for (int i = 1; i <= n; ++i) CHECK(sym.qtilde_pair(i, i) == elem_poly(i, n).substitute(squares));
    }
    // n = 2: Q_{2,1} = E_2 E_1 - 2 E_3 E_0 and E_3 = 0
    CHECK(symbolic(2).qtilde_pair(2, 1) == elem_poly(2, 2) * elem_poly(1, 2));
    CHECK_THROWS_AS(symbolic(2).qtilde_pair(1, 2), std::invalid_argument);
}

TEST_CASE("Pfaffian Q-tilde polynomials") {
    CHECK(qtilde_poly(Partition(), 3) == SparsePoly::constant(3, 1));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) CHECK(qtilde_poly(Partition({k}), n) == elem_poly(k, n));
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lam : enumerate_D(n)) {
            SparsePoly q = qtilde_poly(lam.as_partition(), n);
            CHECK(q.is_symmetric());
            CHECK(q.is_homogeneous());
            // (2) Q_{lambda u (j,j)} = Q_{j,j} Q_lambda
            for (int j = 1; j <= n; ++j) {
                std::vector<int> parts = lam.parts();
                parts.push_back(j);
                parts.push_back(j);
                std::sort(parts.rbegin(), parts.rend());
                CHECK(qtilde_poly(Partition(parts), n) == symbolic(n).qtilde_pair(j, j) * q);
            }
            // (3) Q_lambda Q_n = Q_{(n, lambda)}
            std::vector<int> parts{n};
            parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
            CHECK(qtilde_poly(Partition(parts), n) == q * elem_poly(n, n));
        }
    }
    // spot check of the stated instances at n = 3
    CHECK(qtilde_poly(Partition({2, 1, 1, 1}), 3) == symbolic(3).qtilde_pair(1, 1) * qtilde_poly(Partition({2, 1}), 3));
    CHECK(qtilde_poly(Partition({3, 2, 1}), 3) == qtilde_poly(Partition({2, 1}), 3) * elem_poly(3, 3));
    // numeric and symbolic agree
    PointVec pt = rational_point({2, -1, 3});
    for (const auto& lam : enumerate_R(3, 3))
        CHECK(qtilde(lam, pt) == qtilde_poly(lam, 3).evaluate(pt));
    CHECK(ptilde_poly(Partition({2, 1}), 3) == qtilde_poly(Partition({2, 1}), 3) * Rational(1, 4));
}

TEST_CASE("Hall-Littlewood at t = -1") {
    PointVec any = rational_point({3, 5, -2});
    CHECK(hall_littlewood(Partition(), any).is_one());
    CHECK(hall_littlewood(Partition({1}), any) == elem(1, any));
    CHECK(hall_littlewood(Partition({1, 1, 1, 1}), any).is_zero());

    // n = 2, (2,3): brute-force symmetrization by hand gives
    // P_{11} = x1 x2 and P_{2} = x1^2 + x2^2 + (1 - t) x1 x2 = 4 + 9 + 12
    PointVec p23 = rational_point({2, 3});
    CHECK(hall_littlewood(Partition({1, 1}), p23) == CycloNum(1, Rational(6)));
    CHECK(hall_littlewood(Partition({2}), p23) == CycloNum(1, Rational(25)));

    std::mt19937 rng(17);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            PointVec roots = random_root_point(n, 4 * n, rng);
            PointVec rat;
            for (int i = 0; i < n; ++i) rat.emplace_back(1, Rational(2 * i + 1, 7 - i));
            for (const auto& lam : enumerate_R(n, n)) {
                CHECK(hall_littlewood(lam, roots) == hl_coset(lam, roots, -1));
                CHECK(hall_littlewood(lam, rat) == hl_coset(lam, rat, -1));
            }
        }
    }
    // P_{1^k} = E_k for every t
    PointVec p4 = rational_point({1, 2, -3, 5});
    for (int k = 0; k <= 4; ++k) CHECK(hall_littlewood(Partition(std::vector<int>(k, 1)), p4) == elem(k, p4));
    CHECK_THROWS_AS(hall_littlewood(Partition({2}), rational_point({1, 1})), std::invalid_argument);
}

TEST_CASE("omega on Hall-Littlewood polynomials") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 4; ++n) {
        PointVec pt = random_root_point(n, 4 * n, rng);
        auto e = elementary_values(pt);
        for (const auto& lam : enumerate_R(n, n)) {
            // the expansion reproduces P_lambda
            CycloNum via_e(pt[0].order());
            for (const auto& [nu, c] : hall_littlewood_e_expansion(lam, n)) {
                CycloNum term(pt[0].order(), c);
                for (int p : nu.parts()) term *= e[p];
                via_e += term;
            }
            CHECK(via_e == hall_littlewood(lam, pt));
        }
        for (int k = 0; k <= n; ++k) {
            CHECK(hall_littlewood_omega(Partition(std::vector<int>(k, 1)), pt) == complete(k, pt));
            // P_(k)(x; -1) = (1/2) sum_i E_i H_{k-i} is omega-invariant for k <= n
            CHECK(hall_littlewood_omega(Partition(k ? std::vector<int>{k} : std::vector<int>{}), pt) ==
                  hall_littlewood(Partition(k ? std::vector<int>{k} : std::vector<int>{}), pt));
        }
    }
}
