#include <doctest.h>

#include "lam/correspondence.hpp"
#include "lam/gaps.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

Lamination lam_of(int d, std::initializer_list<Leaf> leaves) {
    Lamination l(d);
    for (const auto& x : leaves) l.add(x);
    return l;
}

Rational total_arcs(const std::vector<Gap>& gs) {
    Rational t = 0;
    for (const auto& g : gs) t += g.whole_circle() ? Rational(1) : g.arc_total();
    return t;
}

} // namespace

TEST_CASE("gap counts") {
    CHECK(gaps(Lamination(2)).size() == 1);
    CHECK(gaps(Lamination(2)).front().whole_circle());
    CHECK(gaps(lam_of(2, {L("1/3", "2/3")})).size() == 2);

    auto gs = gaps(lam_of(2, {L("1/3", "2/3"), L("5/6", "1/6")}));
    REQUIRE(gs.size() == 3);
    int middle = 0;
    for (const auto& g : gs)
        if (g.boundary_leaves().size() == 2) {
            ++middle;
            CHECK(g.arcs().size() == 2);
            CHECK(g.arc_total() == Q(1, 3));
        }
    CHECK(middle == 1);
    CHECK(total_arcs(gs) == 1);
}

TEST_CASE("gaps of a triangle and its sides") {
    auto gs = gaps(lam_of(2, {L("1/7", "2/7"), L("2/7", "4/7"), L("4/7", "1/7")}));
    CHECK(gs.size() == 4);
    int polygons = 0;
    for (const auto& g : gs) polygons += g.is_polygon();
    CHECK(polygons == 1);
    CHECK(total_arcs(gs) == 1);
}

TEST_CASE("left_of and containing") {
    GapFinder f(std::vector<Leaf>{L("1/3", "2/3"), L("5/6", "1/6")});
    Gap mid = f.left_of(A("1/3"), A("2/3"));
    CHECK(mid.boundary_leaves().size() == 2);
    CHECK(mid.trace_contains(A("0")) == false);
    CHECK(mid.trace_contains(A("1/4")));
    Gap cap = f.containing(A("1/2"));
    CHECK(cap.arc_total() == Q(1, 3));
    CHECK(cap.boundary_leaves() == std::vector<Leaf>{L("1/3", "2/3")});
}

TEST_CASE("gap degree") {
    CHECK(gap_degree(2, Gap()) == 2);
    CHECK(gap_degree(3, Gap()) == 3);

    GapFinder f(std::vector<Leaf>{L("1/3", "2/3"), L("5/6", "1/6")});
    CHECK(gap_degree(2, f.left_of(A("1/3"), A("2/3"))) == 2);
    CHECK(gap_degree(2, f.containing(A("1/2"))) == 1);

    // A small polygon admits no critical chord.
    GapFinder tri(std::vector<Leaf>{L("1/9", "1/6"), L("1/6", "2/9"), L("2/9", "1/9")});
    for (const auto& g : tri.all())
        if (g.is_polygon()) CHECK(gap_degree(3, g) == 1);

    auto mac = canonical_mac_lamination(3, L("1/8", "3/8"), 3);
    CHECK(gap_degree(3, central_gap(mac.lamination, L("1/8", "3/8"))) == 3);
}
