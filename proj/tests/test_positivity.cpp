#include "doctest.h"

#include "qsch/positivity.hpp"

#include <bit>

using namespace qsch;

namespace {

const RootTuple& other_self_symmetric(int n) {
    for (const auto& I : enumerate_Is(n))
        if (I != base_tuple(n)) return I;
    throw std::logic_error("no second tuple");
}

}  // namespace

TEST_CASE("minor scan on small matrices") {
    PetersonMatrix id = build_u(GroupKind::C, PointVec(2, CycloNum(1)));
    auto r = totally_nonneg(id);
    CHECK(r.nonneg);
    CHECK(r.stats.total() == 69);  // C(8,4) - 1
    CHECK(r.stats.exhaustive);

    CHECK(totally_nonneg(build_u(GroupKind::C, base_tuple(2).points())).nonneg);
    auto bad = totally_nonneg(build_u(GroupKind::C, other_self_symmetric(2).points()));
    REQUIRE_FALSE(bad.nonneg);
    REQUIRE(bad.witness);
    PetersonMatrix u = build_u(GroupKind::C, other_self_symmetric(2).points());
    CHECK(certified_sign(minor(u, *bad.witness)) == Sign::negative);

    PointVec non_real = enumerate_I(2).front().points();
    bool any_nonreal = false;
    for (const auto& I : enumerate_I(2))
        if (!I.self_symmetric()) {
            non_real = I.points();
            any_nonreal = true;
        }
    REQUIRE(any_nonreal);
    CHECK_THROWS_AS(totally_nonneg(build_u(GroupKind::C, non_real)), std::invalid_argument);
}

TEST_CASE("memoized minors agree with direct determinants") {
    PetersonMatrix u = build_u(GroupKind::C, base_tuple(3).scaled_points(Rational(2)));
    MinorStats fast = scan_minors(u);
    long neg = 0, zero = 0, pos = 0;
    for (std::uint32_t rows = 1; rows < 64; ++rows)
        for (std::uint32_t cols = 1; cols < 64; ++cols) {
            if (std::popcount(rows) != std::popcount(cols)) continue;
            MinorSpec s;
            for (int i = 0; i < 6; ++i) {
                if (rows >> i & 1) s.rows.push_back(i + 1);
                if (cols >> i & 1) s.cols.push_back(i + 1);
            }
            switch (certified_sign(minor(u, s))) {
                case Sign::negative: ++neg; break;
                case Sign::zero: ++zero; break;
                case Sign::positive: ++pos; break;
            }
        }
    CHECK(fast.negative == neg);
    CHECK(fast.zero == zero);
    CHECK(fast.positive == pos);
}

TEST_CASE("sampled scan above the exhaustive size") {
    PetersonMatrix u = build_u(GroupKind::B, base_tuple(5).points());
    REQUIRE(u.size() == 9);
    MinorStats a = scan_minors(u, 7, 300), b = scan_minors(u, 7, 300);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.total() == b.total());
    CHECK(a.negative == 0);
}

TEST_CASE("Schubert signs") {
    auto base = schubert_signs(GroupKind::C, base_tuple(3));
    CHECK(base.signs.size() == 8);
    CHECK(base.all_positive());
    for (const auto& I : enumerate_Is(4))
        if (I != base_tuple(4)) CHECK(schubert_signs(GroupKind::C, I).some_negative());
    for (const auto& I : enumerate_I(3)) {
        auto r = schubert_signs(GroupKind::C, I);
        if (!I.self_symmetric()) CHECK_FALSE(r.real);
        else CHECK(r.signs.front().sign == Sign::positive);
    }
    CHECK(schubert_signs(GroupKind::B, base_tuple(3)).all_positive());
}

TEST_CASE("sweeps") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(sign_pattern(n).ok());
        auto d = dominance(n);
        CHECK_MESSAGE(d.ok(), n);
        CHECK(d.subjects == static_cast<long>(enumerate_I(n).size() * enumerate_D(n).size()));
        CHECK(rectangle_schur(n).ok());
    }
    for (int n = 1; n <= 3; ++n) {
        auto c = characterization(GroupKind::C, n);
        CHECK_MESSAGE(c.ok(), c.name, " ", c.failures.empty() ? "" : c.failures.front());
    }
    CHECK(characterization(GroupKind::B, 1).ok());
    CHECK(characterization(GroupKind::B, 3).ok());
}

TEST_CASE("B side nonnegativity over D(n) does not force total nonnegativity at n = 2") {
    // Qt_1 = Qt_2 = 0 at this point, so Qt_3 escapes the squaring argument and is negative.
    const RootTuple I(3, {-2, 2, 6});
    for (const auto& t : sample_scales()) {
        auto r = full_report(GroupKind::B, I, t);
        REQUIRE(r.real);
        CHECK_FALSE(r.some_negative());
        CHECK_FALSE(r.all_positive());
        CHECK(r.minors->negative == 8);
        CHECK(certified_sign(at_point(I.scaled_points(t)).qtilde(Partition({3}))) == Sign::negative);
    }
    auto b = characterization(GroupKind::B, 2);
    CHECK(b.failures.size() == 3);
    CHECK(b.notes.size() == 3);
}

TEST_CASE("report json carries witnesses") {
    auto r = full_report(GroupKind::C, other_self_symmetric(2), Rational(1));
    std::string js = report_to_json(r);
    CHECK(js.find("\"witness\"") != std::string::npos);
    CHECK(js.find("\"rows\"") != std::string::npos);
    for (const auto& I : enumerate_I(2))
        if (!I.self_symmetric()) CHECK(report_to_json(schubert_signs(GroupKind::C, I)).find("non-real") != std::string::npos);
}
