#include <doctest.h>

#include <algorithm>

#include "lam/catalog.hpp"
#include "support.hpp"

using namespace lam;
using namespace lam::test;

namespace {

int mobius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

// Quadratic hyperbolic components of exact period n: sum over k | n of
// mu(n/k) 2^(k-1). Period 1 is the main cardioid, which has no leaf.
int quadratic_components(int n) {
    int s = 0;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) s += mobius(n / k) * (1 << (k - 1));
    return s;
}

bool has_major(const std::vector<MacData>& cat, const Leaf& m) {
    return std::any_of(cat.begin(), cat.end(), [&](const MacData& x) { return x.major == m; });
}

} // namespace

TEST_CASE("small catalogs") {
    CHECK(catalog_period(2, 1).empty());
    CHECK(has_major(catalog(2, 2), L("1/3", "2/3")));
    auto three = catalog_period(2, 3);
    CHECK(three.size() == 3);
    CHECK(has_major(three, L("2/7", "5/7")));
    CHECK(has_major(three, L("1/7", "4/7")));
    CHECK(has_major(catalog_period(3, 2), L("1/8", "3/8")));
}

TEST_CASE("quadratic counts match hyperbolic components") {
    for (int n = 2; n <= 6; ++n) CHECK(catalog_period(2, n).size() == static_cast<std::size_t>(quadratic_components(n)));
}

TEST_CASE("catalog entries are MACs and sorted") {
    for (int d = 2; d <= 3; ++d) {
        auto cat = catalog(d, 4);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            auto again = is_mac(d, cat[i].major);
            REQUIRE(again);
            CHECK(again->minor == cat[i].minor);
            CHECK(cat[i].period <= 4);
            if (i > 0)
                CHECK(std::pair(cat[i - 1].period, cat[i - 1].major) < std::pair(cat[i].period, cat[i].major));
        }
    }
}

TEST_CASE("the minor is the image of the major") {
    for (int d = 2; d <= 4; ++d)
        for (const auto& m : catalog(d, 3)) {
            auto img = image_leaf(d, m.major);
            REQUIRE(std::holds_alternative<Leaf>(img));
            CHECK(std::get<Leaf>(img) == m.minor);
            CHECK(m.major.length() < Rational(1, d));
        }
}
