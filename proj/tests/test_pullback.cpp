#include <doctest.h>

#include <set>

#include "lam/gaps.hpp"
#include "lam/pullback.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

TEST_CASE("basilica pullback") {
    auto r = canonical_mac_lamination(2, L("1/3", "2/3"), 2);
    CHECK(r.portrait.chords() == std::vector<Leaf>{L("1/3", "5/6")});
    std::set<std::pair<Leaf, int>> got;
    for (const auto& [l, depth] : r.lamination.leaves()) got.insert({l, depth});
    std::set<std::pair<Leaf, int>> want{{L("1/3", "2/3"), 0},
                                        {L("5/6", "1/6"), 1},
                                        {L("5/12", "7/12"), 2},
                                        {L("11/12", "1/12"), 2}};
    CHECK(got == want);
    CHECK(r.stages == std::vector<std::size_t>{1, 2, 4});
}

TEST_CASE("each stage maps onto the previous one") {
    auto r = canonical_mac_lamination(2, L("1/3", "2/3"), 6);
    for (const auto& [l, depth] : r.lamination.leaves()) {
        if (depth == 0) continue;
        auto img = image_leaf(2, l);
        REQUIRE(std::holds_alternative<Leaf>(img));
        auto up = r.lamination.depth_of(std::get<Leaf>(img));
        REQUIRE(up.has_value());
        CHECK(*up <= depth - 1);
    }
    CHECK(check_invariance(r.lamination).ok());
}

TEST_CASE("rabbit keeps its triangle") {
    auto r = canonical_mac_lamination(2, L("1/7", "4/7"), 4);
    CHECK(r.portrait.chords() == std::vector<Leaf>{L("1/7", "9/14")});
    // The orbit of the major is the boundary of the triangle, which is a gap.
    for (auto l : {L("1/7", "4/7"), L("1/7", "2/7"), L("2/7", "4/7")}) CHECK(r.lamination.depth_of(l) == 0);
    auto gs = GapFinder(r.lamination).all();
    CHECK(std::count_if(gs.begin(), gs.end(), [](const Gap& g) {
              return g.is_polygon() && g.vertices() == P({"1/7", "2/7", "4/7"}).vertices();
          }) == 1);
    auto scm = canonical_scm_lamination(2, P({"1/7", "2/7", "4/7"}), 4);
    CHECK(scm.elements.at(P({"1/7", "2/7", "4/7"})) == 0);
    CHECK(check_invariance(r.lamination).ok());
}

TEST_CASE("zero depth returns the generators") {
    auto r = canonical_mac_lamination(2, L("2/7", "5/7"), 0);
    CHECK(r.depth == 0);
    CHECK(r.lamination.size() == 3);
    for (const auto& [l, depth] : r.lamination.leaves()) CHECK(depth == 0);
}

TEST_CASE("a portrait crossing the generators is rejected") {
    CHECK_THROWS_AS(pullback_lamination({P({"1/3", "2/3"})}, CriticalPortrait(2, {L("0", "1/2")}), 2), DomainError);
}

TEST_CASE("pullback step adds one preimage per branch") {
    CriticalPortrait c(2, {L("1/3", "5/6")});
    auto next = pullback_step({P({"1/3", "2/3"})}, c);
    std::set<Polygon> s(next.begin(), next.end());
    CHECK(s == std::set<Polygon>{P({"1/3", "2/3"}), P({"1/6", "5/6"})});
}

TEST_CASE("orbit helpers") {
    CHECK(orbit_leaves(2, L("2/7", "5/7")).size() == 3);
    CHECK(orbit_elements(2, P({"1/7", "2/7", "4/7"})).size() == 1);
    CHECK(orbit_leaves(3, L("1/8", "3/8")).size() == 1);
}

TEST_CASE("degree three canonical lamination") {
    auto r = canonical_mac_lamination(3, L("1/8", "3/8"), 4);
    CHECK(r.portrait.degree() == 3);
    CHECK(r.portrait.chords().size() == 3);
    CHECK(check_invariance(r.lamination).ok());
}

TEST_CASE("SCM major chain and portrait") {
    auto quad = P({"1/8", "1/4", "3/8", "3/4"});
    auto chain = scm_major_chain(3, quad);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == std::pair{A("3/8"), A("3/4")});
    CHECK(chain[1] == std::pair{A("3/4"), A("1/8")});
    auto c = scm_portrait(3, quad);
    std::set<Leaf> chords(c.chords().begin(), c.chords().end());
    CHECK(chords == std::set<Leaf>{L("5/12", "3/4"), L("19/24", "1/8")});
    CHECK_THROWS_AS(scm_major_chain(3, P({"1/7", "2/7", "4/7"})), DomainError);
    CHECK(check_invariance(canonical_scm_lamination(3, quad, 4).lamination).ok());
}
