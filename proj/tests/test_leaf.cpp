#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

// Two chords are linked iff exactly one endpoint of the second lies strictly
// between the endpoints of the first, read as plain rationals.
bool linked_ref(const Leaf& x, const Leaf& y) {
    Rational a = x.first().value(), b = x.second().value();
    if (b < a) std::swap(a, b);
    auto inside = [&](const Angle& t) { return a < t.value() && t.value() < b; };
    if (y.has_endpoint(x.first()) || y.has_endpoint(x.second())) return false;
    return inside(y.first()) != inside(y.second());
}

std::vector<Angle> grid(long q) {
    std::vector<Angle> out;
    for (long p = 0; p < q; ++p) out.push_back(Angle::from_fraction(p, q));
    return out;
}

} // namespace

TEST_CASE("leaf canonical form") {
    Leaf l = L("2/7", "1/7");
    CHECK(l.first() == A("1/7"));
    CHECK(l.second() == A("2/7"));
    Leaf w = L("1/7", "6/7");
    CHECK(w.first() == A("6/7"));
    CHECK(L("3/4", "1/4").first() == A("1/4"));
    CHECK_THROWS_AS(L("1/3", "1/3"), DomainError);
    CHECK(l.str() == "(1/7,2/7)");
}

TEST_CASE("leaf length") {
    CHECK(leaf_length(L("1/7", "2/7")) == Q(1, 7));
    CHECK(leaf_length(L("0", "1/2")) == Q(1, 2));
    CHECK(leaf_length(L("1/15", "11/15")) == Q(1, 3));
}

TEST_CASE("image leaf") {
    CHECK(std::get<Leaf>(image_leaf(2, L("1/7", "2/7"))) == L("2/7", "4/7"));
    CHECK(std::get<DegeneratePoint>(image_leaf(2, L("1/4", "3/4"))).point == A("1/2"));
    CHECK(std::get<Leaf>(image_leaf(3, L("1/8", "3/8"))) == L("1/8", "3/8"));
}

TEST_CASE("image length") {
    CHECK(image_length(2, Q(2, 7)) == Q(3, 7));
    CHECK(image_length(3, Q(1, 4)) == Q(1, 4));
    for (int d = 2; d <= 6; ++d) CHECK(image_length(d, Q(1, d + 1)) == Q(1, d + 1));

    // Agrees with the length of the image leaf.
    auto pts = grid(30);
    for (int d = 2; d <= 4; ++d)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Leaf l(pts[i], pts[j]);
                if (is_critical(d, l)) continue;
                CHECK(leaf_length(std::get<Leaf>(image_leaf(d, l))) == image_length(d, leaf_length(l)));
            }
}

TEST_CASE("crossing") {
    CHECK(crosses(L("0", "1/2"), L("1/4", "3/4")));
    CHECK_FALSE(crosses(L("0", "1/2"), L("0", "1/4")));
    CHECK_FALSE(crosses(L("6/7", "1/7"), L("5/7", "2/7")));

    auto pts = grid(12);
    std::vector<Leaf> leaves;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) leaves.emplace_back(pts[i], pts[j]);
    for (const auto& x : leaves)
        for (const auto& y : leaves) {
            REQUIRE(crosses(x, y) == linked_ref(x, y));
            REQUIRE(crosses(x, y) == crosses(y, x));
        }
}

TEST_CASE("leaf distance") {
    CHECK(leaf_distance(L("0", "1/4"), L("1/2", "3/4")) == Q(1, 2));
    CHECK(leaf_distance(L("1/7", "2/7"), L("4/7", "5/7")) == Q(5, 7));
    CHECK(leaf_distance(L("0", "1/8"), L("1/4", "3/8")) == Q(3, 4));
    CHECK_THROWS_AS(leaf_distance(L("0", "1/2"), L("1/4", "3/4")), DomainError);
    CHECK_THROWS_AS(leaf_distance(L("0", "1/2"), L("0", "1/4")), DomainError);
}

TEST_CASE("critical chords") {
    CHECK(is_critical(2, L("1/4", "3/4")));
    CHECK(is_critical(3, L("3/8", "17/24")));
    CHECK_FALSE(is_critical(3, L("1/8", "3/8")));
}

TEST_CASE("sibling collections") {
    auto two = sibling_collections(2, L("1/3", "2/3"));
    REQUIRE(two.size() == 2);
    auto has = [](const std::vector<std::vector<Leaf>>& all, std::vector<Leaf> want) {
        std::sort(want.begin(), want.end());
        return std::find(all.begin(), all.end(), want) != all.end();
    };
    CHECK(has(two, {L("1/6", "1/3"), L("2/3", "5/6")}));
    CHECK(has(two, {L("1/6", "5/6"), L("1/3", "2/3")}));

    CHECK(has(sibling_collections(2, L("0", "1/2")), {L("0", "1/4"), L("1/2", "3/4")}));

    auto three = sibling_collections(3, L("1/8", "3/8"));
    CHECK(has(three, {L("1/24", "1/8"), L("3/8", "11/24"), L("17/24", "19/24")}));
    for (const auto& coll : three) {
        REQUIRE(coll.size() == 3);
        for (const auto& l : coll) CHECK(std::get<Leaf>(image_leaf(3, l)) == L("1/8", "3/8"));
        for (std::size_t i = 0; i < coll.size(); ++i)
            for (std::size_t j = i + 1; j < coll.size(); ++j) CHECK_FALSE(crosses(coll[i], coll[j]));
    }
}

TEST_CASE("polygons") {
    Polygon p = P({"4/7", "1/7", "2/7"});
    CHECK(p.vertices().front() == A("1/7"));
    CHECK(p.sides().size() == 3);
    CHECK(Polygon(L("1/3", "2/3")).sides().size() == 1);
    CHECK(p.str() == "{1/7,2/7,4/7}");
    CHECK(image_polygon(2, p) == P({"1/7", "2/7", "4/7"}));
    CHECK_FALSE(image_polygon(2, P({"1/4", "3/4", "0"})).has_value());
    CHECK(polygons_cross(P({"0", "1/2", "3/4"}), P({"1/4", "5/8", "7/8"})));
    CHECK(polygons_disjoint(P({"0", "1/8", "1/4"}), P({"1/2", "5/8", "3/4"})));
    CHECK(polygon_crosses_leaf(P({"0", "1/3", "2/3"}), L("1/6", "1/2")));
    CHECK_THROWS_AS(P({"1/3"}), DomainError);
}
