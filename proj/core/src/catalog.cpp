#include "lam/catalog.hpp"

#include <cstdint>
#include <numeric>

namespace lam {

std::vector<MacData> catalog_period(int d, int n) {
    require_degree(d);
    if (n < 1) throw DomainError("period must be positive");
    const BigInt big = ipow(d, n) - 1;
    if (big > BigInt(std::int64_t{1} << 40)) throw DomainError("catalog period too large");
    const std::int64_t N = big.convert_to<std::int64_t>();

    // Exact period of every j/N under multiplication by d.
    std::vector<int> period(N, 0);
    for (std::int64_t j = 0; j < N; ++j) {
        if (period[j]) continue;
        std::vector<std::int64_t> cyc{j};
        for (std::int64_t x = j * d % N; x != j; x = x * d % N) cyc.push_back(x);
        for (auto x : cyc) period[x] = static_cast<int>(cyc.size());
    }

    // Leaves of the orbit are all shorter than 1/d when the d-gon fits, so
    // the major is the longest one; its length is at least 1/(d+1).
    auto len = [N](std::int64_t a, std::int64_t b) {
        std::int64_t g = a > b ? a - b : b - a;
        return std::min(g, N - g);
    };
    const std::int64_t lmin = (N + d) / (d + 1);
    const std::int64_t lmax = (N - 1) / d;

    std::vector<MacData> out;
    for (std::int64_t a = 0; a < N; ++a) {
        for (std::int64_t L = lmin; L <= lmax; ++L) {
            const std::int64_t b = (a + L) % N;
            if (std::lcm(period[a], period[b]) != n) continue;
            bool ok = true;
            std::int64_t x = a, y = b;
            for (int i = 1; i < n && ok; ++i) {
                x = x * d % N;
                y = y * d % N;
                const std::int64_t li = len(x, y);
                ok = li * d < N && li <= L;
            }
            if (!ok) continue;
            Leaf m(Angle::from_fraction(a, N), Angle::from_fraction(b, N));
            if (auto mac = is_mac(d, m)) out.push_back(std::move(*mac));
        }
    }
    std::sort(out.begin(), out.end(), [](const MacData& p, const MacData& q) { return p.major < q.major; });
    return out;
}

std::vector<MacData> catalog(int d, int max_period) {
    std::vector<MacData> out;
    for (int n = 1; n <= max_period; ++n) {
        auto part = catalog_period(d, n);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace lam
