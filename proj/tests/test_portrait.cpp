#include <doctest.h>

#include "lam/portrait.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

const BranchInverse& branch_holding(const std::vector<BranchInverse>& bs, const Angle& t) {
    for (const auto& b : bs)
        if (b.sector.contains(t)) return b;
    FAIL("no sector holds the point");
    return bs.front();
}

} // namespace

TEST_CASE("portrait validation") {
    CHECK_NOTHROW(CriticalPortrait(2, {L("1/3", "5/6")}));
    CHECK_THROWS_AS(CriticalPortrait(2, {L("1/3", "2/3")}), DomainError);
    CHECK_THROWS_AS(CriticalPortrait(3, {L("0", "1/3")}), DomainError);  // criticality 1 < 2
    CHECK_THROWS_AS(CriticalPortrait(3, {L("0", "1/3"), L("1/6", "1/2")}), DomainError);  // crossing
    CHECK_NOTHROW(CriticalPortrait(3, {L("0", "1/3"), L("1/3", "2/3")}));
    CHECK_NOTHROW(CriticalPortrait(3, {L("0", "1/3"), L("1/2", "5/6")}));
}

TEST_CASE("sectors of a degree two portrait") {
    CriticalPortrait c(2, {L("1/3", "5/6")});
    REQUIRE(c.sectors().size() == 2);
    for (const auto& s : c.sectors()) CHECK(s.arc_total() == Q(1, 2));
    CHECK(c.sector_of(A("1/3")) == c.sector_of(A("1/2")));
    CHECK(c.sector_of(A("5/6")) == c.sector_of(A("0")));
    CHECK(c.sector_of(A("1/3")) != c.sector_of(A("5/6")));

    auto bs = branch_inverses(c);
    CHECK(branch_apply(branch_holding(bs, A("1/2")), A("1/3")) == A("2/3"));
    CHECK(branch_apply(branch_holding(bs, A("0")), A("1/3")) == A("1/6"));
}

TEST_CASE("End closure moves chord endpoints to the earlier sector") {
    CriticalPortrait c(2, {L("1/3", "5/6")}, SectorClosure::End);
    CHECK(c.sector_of(A("1/3")) == c.sector_of(A("0")));
    CHECK(c.sector_of(A("5/6")) == c.sector_of(A("1/2")));
}

TEST_CASE("branch inverses form the fiber") {
    CriticalPortrait c(3, {L("1/8", "11/24"), L("11/24", "19/24")});
    CHECK(c.criticality() == 2);
    CHECK(c.components().size() == 1);
    auto bs = branch_inverses(c);
    REQUIRE(bs.size() == 3);
    for (const auto& t : periodic_points(3, 3)) {
        std::vector<Angle> pre;
        for (const auto& b : bs) {
            Angle s = branch_apply(b, t);
            CHECK(sigma(3, s) == t);
            CHECK(b.sector.contains(s));
            pre.push_back(s);
        }
        std::sort(pre.begin(), pre.end());
        CHECK(pre == preimages(3, t));
    }
}

TEST_CASE("all-critical polygon") {
    auto c = CriticalPortrait::all_critical_polygon(3, A("1/8"));
    CHECK(c.chords().size() == 3);
    CHECK(c.criticality() == 2);
    for (const auto& s : c.sectors()) CHECK(s.arc_total() == Q(1, 3));
    auto c2 = CriticalPortrait::all_critical_polygon(2, A("1/7"));
    CHECK(c2.chords() == std::vector<Leaf>{L("1/7", "9/14")});
}

TEST_CASE("maximal sectors") {
    CriticalPortrait c(3, {L("0", "1/3"), L("1/2", "5/6")});
    int maximal = 0;
    for (const auto& s : c.sectors()) maximal += is_maximal_sector(c, s);
    CHECK(maximal == 1);
    auto tri = CriticalPortrait::all_critical_polygon(3, A("0"));
    for (const auto& s : tri.sectors()) CHECK(is_maximal_sector(tri, s));
}

TEST_CASE("compatibility") {
    CriticalPortrait airplane(2, {L("3/14", "5/7")});
    CHECK(is_compatible(airplane, {P({"3/7", "4/7"}), P({"1/7", "6/7"}), P({"2/7", "5/7"})}));
    CHECK_FALSE(is_compatible(airplane, {P({"1/7", "2/7", "4/7"})}));
    CHECK(is_compatible(airplane, {}));
    CriticalPortrait rabbit(2, {L("1/14", "4/7")});
    CHECK(is_compatible(rabbit, {P({"1/7", "2/7", "4/7"})}));
    // A chord joining two vertices is a diagonal.
    CHECK_FALSE(is_compatible(CriticalPortrait(2, {L("1/8", "5/8")}), {P({"1/8", "1/4", "5/8", "3/4"})}));
}
