#include <doctest.h>

#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

// Reference sigma straight from the definition, with plain rationals.
Rational sigma_ref(int d, const Rational& t) {
    Rational x = t * d;
    return x - Rational(numerator(x) / denominator(x));
}

} // namespace

TEST_CASE("fractions reduce and wrap") {
    CHECK(Angle::from_fraction(2, 4) == A("1/2"));
    CHECK(Angle::from_fraction(9, 7) == A("2/7"));
    CHECK(Angle::from_fraction(0, 5).str() == "0/1");
    CHECK(Angle::from_fraction(-1, 3) == A("2/3"));
    CHECK_THROWS_AS(Angle::from_fraction(1, 0), DomainError);
}

TEST_CASE("strict parsing") {
    CHECK(A("3/7").str() == "3/7");
    CHECK_THROWS_AS(Angle::parse("2/6", true), DomainError);
    CHECK_THROWS_AS(Angle::parse("7/7", true), DomainError);
    CHECK_THROWS_AS(Angle::parse("x/7", true), DomainError);
    CHECK(Angle::parse("2/6") == A("1/3"));
}

TEST_CASE("sigma") {
    CHECK(sigma(2, A("1/3")) == A("2/3"));
    CHECK(sigma(3, A("1/4")) == A("3/4"));
    CHECK(sigma(4, A("3/5")) == A("2/5"));
    CHECK_THROWS_AS(sigma(1, A("1/3")), DomainError);

    for (int d = 2; d <= 5; ++d)
        for (long q = 1; q <= 60; ++q)
            for (long p = 0; p < q; ++p) {
                Angle t = Angle::from_fraction(p, q);
                REQUIRE(sigma(d, t).value() == sigma_ref(d, Rational(p, q)));
            }
}

TEST_CASE("preimages form the fiber, counterclockwise from t/d") {
    for (int d = 2; d <= 5; ++d)
        for (long q = 1; q <= 30; ++q)
            for (long p = 0; p < q; ++p) {
                Angle t = Angle::from_fraction(p, q);
                auto pre = preimages(d, t);
                REQUIRE(pre.size() == static_cast<std::size_t>(d));
                for (int j = 0; j < d; ++j) {
                    CHECK(sigma(d, pre[j]) == t);
                    CHECK(pre[j].value() == (Rational(p, q) + j) / d);
                }
            }
}

TEST_CASE("arc length and circular order") {
    CHECK(arc_length(A("1/4"), A("3/4")) == Q(1, 2));
    CHECK(arc_length(A("3/4"), A("1/4")) == Q(1, 2));
    CHECK(arc_length(A("6/7"), A("1/7")) == Q(2, 7));
    CHECK(ccw_order(A("0"), A("1/3"), A("2/3")));
    CHECK_FALSE(ccw_order(A("0"), A("2/3"), A("1/3")));
    CHECK(ccw_order(A("6/7"), A("1/7"), A("2/7")));
    CHECK_THROWS_AS(ccw_order(A("1/3"), A("1/3"), A("2/3")), DomainError);

    Arc arc{A("5/6"), A("1/6")};
    CHECK(arc.contains_half_open(A("5/6")));
    CHECK_FALSE(arc.contains_half_open(A("1/6")));
    CHECK(arc.contains_closed(A("1/6")));
    CHECK(arc.contains_open(A("0")));
    CHECK_FALSE(arc.contains_open(A("1/2")));
}

TEST_CASE("comparison agrees with rational order") {
    std::vector<Angle> pts;
    for (long q = 1; q <= 25; ++q)
        for (long p = 0; p < q; ++p) pts.push_back(Angle::from_fraction(p, q));
    for (const auto& a : pts)
        for (const auto& b : pts) {
            CHECK(((a < b) == (a.value() < b.value())));
            CHECK(((a == b) == (a.value() == b.value())));
        }
    // Denominators past 64 bits take the slow path.
    Angle big = Angle::from_fraction(BigInt(1), ipow(3, 50));
    Angle bigger = Angle::from_fraction(BigInt(2), ipow(3, 50));
    CHECK(big < bigger);
    CHECK(big < A("1/2"));
    CHECK(sigma(3, big) == Angle::from_fraction(BigInt(1), ipow(3, 49)));
}

TEST_CASE("d-nary expansions") {
    CHECK(angle_from_dnary(DnaryExpansion::parse(2, "_01")) == A("1/3"));
    CHECK(angle_from_dnary(DnaryExpansion::parse(4, "_1")) == A("1/3"));
    CHECK(angle_from_dnary(DnaryExpansion::parse(4, "_0")) == A("0"));
    CHECK_THROWS_AS(DnaryExpansion::parse(2, "_2"), DomainError);

    CHECK(angle_to_dnary(2, A("1/3")).str() == "_01");
    CHECK(angle_to_dnary(4, A("1/4")).str() == "1_0");
    CHECK(angle_to_dnary(2, A("0")).str() == "_0");

    for (int d = 2; d <= 5; ++d)
        for (long q = 1; q <= 40; ++q)
            for (long p = 0; p < q; ++p) {
                Angle t = Angle::from_fraction(p, q);
                REQUIRE(angle_from_dnary(angle_to_dnary(d, t)) == t);
            }
}

TEST_CASE("periodic points and periods") {
    CHECK(periodic_points(2, 1) == std::vector<Angle>{A("0")});
    CHECK(periodic_points(2, 2) == std::vector<Angle>{A("0"), A("1/3"), A("2/3")});
    CHECK(periodic_points(3, 1) == std::vector<Angle>{A("0"), A("1/2")});

    for (int d = 2; d <= 4; ++d)
        for (int n = 1; n <= 4; ++n)
            for (const auto& t : periodic_points(d, n)) {
                CHECK(sigma_iter(d, t, n) == t);
                int k = 1;
                for (Angle u = sigma(d, t); u != t; u = sigma(d, u)) ++k;
                CHECK(exact_period(d, t) == k);
                CHECK(n % k == 0);
            }
    CHECK_FALSE(is_periodic(2, A("1/4")));
    CHECK(preperiod(2, A("1/4")) == 2);
    CHECK(preperiod(3, A("1/6")) == 1);
}
