#include <doctest.h>

#include <random>

#include "lam/lamination.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

TEST_CASE("lamination keeps the least depth") {
    Lamination lam(2);
    lam.add(L("1/3", "2/3"), 2);
    lam.add(L("1/3", "2/3"), 0);
    lam.add(L("5/6", "1/6"), 1);
    CHECK(lam.size() == 2);
    CHECK(lam.depth_of(L("1/3", "2/3")) == 0);
    CHECK(lam.max_depth() == 1);
    CHECK(lam.leaves_up_to(0) == std::vector<Leaf>{L("1/3", "2/3")});
    CHECK_FALSE(lam.depth_of(L("1/7", "2/7")).has_value());
}

TEST_CASE("find_crossing matches the quadratic scan") {
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        const long q = 6 + round % 19;
        std::uniform_int_distribution<long> pick(0, q - 1);
        std::vector<Leaf> leaves;
        const int n = 2 + round % 9;
        while (static_cast<int>(leaves.size()) < n) {
            long a = pick(rng), b = pick(rng);
            if (a != b) leaves.emplace_back(Angle::from_fraction(a, q), Angle::from_fraction(b, q));
        }
        bool any = false;
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j) any |= crosses(leaves[i], leaves[j]);
        auto found = find_crossing(leaves);
        REQUIRE(found.has_value() == any);
        if (found) CHECK(crosses(found->first, found->second));
    }
}

TEST_CASE("invariance report") {
    SUBCASE("crossing is a hard failure") {
        Lamination lam(2);
        lam.add(L("1/3", "2/3"));
        lam.add(L("0", "1/2"));
        auto rep = check_invariance(lam);
        CHECK(rep.crossing.has_value());
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("missing image") {
        Lamination lam(2);
        lam.add(L("1/7", "2/7"));
        auto rep = check_invariance(lam);
        CHECK_FALSE(rep.ok());
        CHECK(rep.forward_failures() == 1);
    }
    SUBCASE("basilica to depth 2") {
        Lamination lam(2);
        lam.add(L("1/3", "2/3"), 0);
        lam.add(L("5/6", "1/6"), 1);
        lam.add(L("5/12", "7/12"), 2);
        lam.add(L("11/12", "1/12"), 2);
        auto rep = check_invariance(lam);
        CHECK(rep.ok());
        // The deepest leaves are not asked for preimages.
        for (const auto& v : rep.verdicts)
            if (v.depth == 2) CHECK_FALSE(v.backward.has_value());
    }
    SUBCASE("missing preimages below the truncation depth") {
        Lamination lam(2);
        lam.add(L("1/3", "2/3"), 0);
        lam.add(L("5/6", "1/6"), 1);
        lam.set_truncation_depth(2);
        auto rep = check_invariance(lam);
        CHECK_FALSE(rep.ok());
        CHECK(rep.backward_failures() >= 1);
    }
}
