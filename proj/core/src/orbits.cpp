#include "lam/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lam {

RotationNumber::RotationNumber(int num, int den) {
    if (den <= 0) throw DomainError("rotation number needs a positive denominator");
    num %= den;
    if (num < 0) num += den;
    int g = std::gcd(num, den);
    p = num / g;
    q = den / g;
    if (p == 0) q = 1;
}

std::string to_string(OrbitTag t) {
    switch (t) {
    case OrbitTag::Fixed: return "Fixed";
    case OrbitTag::Rotational: return "Rotational";
    case OrbitTag::RotationReturn: return "RotationReturn";
    case OrbitTag::IdentityReturn: return "IdentityReturn";
    case OrbitTag::NotPeriodic: return "NotPeriodic";
    }
    return "NotPeriodic";
}

OrbitTag orbit_tag_from_string(const std::string& s) {
    for (auto t : {OrbitTag::Fixed, OrbitTag::Rotational, OrbitTag::RotationReturn, OrbitTag::IdentityReturn,
                   OrbitTag::NotPeriodic})
        if (to_string(t) == s) return t;
    throw DomainError("unknown orbit class tag '" + s + "'");
}

std::string OrbitClass::tag_name() const { return to_string(tag); }

std::optional<OrbitInfo> forward_orbit(int d, const Polygon& p, int max_iter) {
    require_degree(d);
    if (max_iter < 1) throw DomainError("max_iter must be >= 1");
    OrbitInfo info;
    for (const auto& v : p.vertices()) info.preperiod = std::max(info.preperiod, preperiod(d, v));
    if (info.preperiod > max_iter) return std::nullopt;

    Polygon cur = p;
    auto step = [&](const Polygon& x) {
        auto img = image_polygon(d, x);
        if (!img) throw DomainError("vertices of " + x.str() + " collide under sigma_" + std::to_string(d));
        return *img;
    };
    for (int i = 0; i < info.preperiod; ++i) {
        info.orbit.push_back(cur);
        cur = step(cur);
    }
    long k = 1;
    for (const auto& v : cur.vertices()) {
        k = std::lcm(k, static_cast<long>(exact_period(d, v)));
        if (k > max_iter) return std::nullopt;
    }
    info.vertex_period = static_cast<int>(k);
    const Polygon start = cur;
    int r = 0;
    do {
        info.orbit.push_back(cur);
        cur = step(cur);
        ++r;
    } while (cur != start && r <= k);
    info.object_period = r;
    return info;
}

std::optional<RotationNumber> is_rotational_set(int d, std::vector<Angle> s) {
    require_degree(d);
    if (s.empty()) throw DomainError("rotational set test needs a non-empty set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const int k = static_cast<int>(s.size());
    int shift = -1;
    for (int j = 0; j < k; ++j) {
        Angle img = sigma(d, s[j]);
        auto it = std::lower_bound(s.begin(), s.end(), img);
        if (it == s.end() || *it != img) return std::nullopt;
        int i = static_cast<int>(it - s.begin());
        int sh = ((i - j) % k + k) % k;
        if (shift < 0) shift = sh;
        else if (sh != shift) return std::nullopt;
    }
    return RotationNumber(shift, k);
}

RotationNumber rotation_number(int d, const std::vector<Angle>& orbit) {
    auto r = is_rotational_set(d, orbit);
    if (!r) throw DomainError("orbit is not a rotational set");
    return *r;
}

bool preserves_order(int d, const Polygon& p) {
    // Circular order is preserved iff the images, read in vertex order, are a
    // cyclic shift of their sorted order.
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    if (n < 3) return true;
    std::vector<Angle> img;
    for (const auto& x : v) img.push_back(sigma(d, x));
    std::size_t descents = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!(img[i] < img[(i + 1) % n])) ++descents;
    return descents == 1;
}

OrbitClass classify(int d, const Polygon& p, int max_iter) {
    OrbitClass cls;
    for (const auto& v : p.vertices())
        if (!is_periodic(d, v)) return cls;
    auto info = forward_orbit(d, p, max_iter);
    if (!info) return cls;
    const auto& orb = info->orbit;
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j)
            if (polygons_cross(orb[i], orb[j]))
                throw DomainError("orbit polygons " + orb[i].str() + " and " + orb[j].str() + " cross");

    const int r = info->object_period;
    if (r == 1) {
        auto rho = is_rotational_set(d, p.vertices());
        if (rho && rho->is_zero()) {
            cls.tag = OrbitTag::Fixed;
        } else if (rho) {
            cls.tag = OrbitTag::Rotational;
            cls.rotation = rho;
        }
        return cls;
    }

    bool all_disjoint = true;
    for (std::size_t i = 0; i < orb.size() && all_disjoint; ++i)
        for (std::size_t j = i + 1; j < orb.size() && all_disjoint; ++j)
            if (!polygons_disjoint(orb[i], orb[j])) all_disjoint = false;
    bool order_ok = std::all_of(orb.begin(), orb.end(), [&](const Polygon& q) { return preserves_order(d, q); });
    if (all_disjoint && order_ok && info->vertex_period == r) {
        cls.tag = OrbitTag::IdentityReturn;
        return cls;
    }

    bool off_itself = true;
    for (const auto& v : orb[1].vertices())
        if (p.has_vertex(v)) off_itself = false;
    if (off_itself) {
        // Rotation of the first return sigma^r on the vertices of p.
        const auto& v = p.vertices();
        const int k = static_cast<int>(v.size());
        int shift = -1;
        bool consistent = true;
        for (int j = 0; j < k && consistent; ++j) {
            Angle img = sigma_iter(d, v[j], r);
            int i = static_cast<int>(std::lower_bound(v.begin(), v.end(), img) - v.begin());
            int sh = ((i - j) % k + k) % k;
            if (shift < 0) shift = sh;
            else if (sh != shift) consistent = false;
        }
        if (consistent && shift > 0) {
            cls.tag = OrbitTag::RotationReturn;
            cls.rotation = RotationNumber(shift, k);
        }
    }
    return cls;
}

int side_orbit_count(int d, const Polygon& p) {
    std::set<Leaf> seen;
    int count = 0;
    for (const auto& s : p.sides()) {
        if (seen.count(s)) continue;
        ++count;
        Leaf cur = s;
        while (seen.insert(cur).second) {
            auto img = image_leaf(d, cur);
            auto* l = std::get_if<Leaf>(&img);
            if (!l) break;
            cur = *l;
        }
    }
    return count;
}

bool kiwi_bound_check(int d, const Polygon& p, const OrbitClass& cls) {
    if (side_orbit_count(d, p) > d) return false;
    if (cls.tag == OrbitTag::IdentityReturn && static_cast<int>(p.sides().size()) > d) return false;
    return true;
}

int growth_steps(int d, const Rational& len) {
    require_degree(d);
    if (len <= 0 || len * 2 > 1) throw DomainError("leaf length must lie in (0, 1/2]");
    const Rational target(1, d + 1);
    Rational x = len;
    int k = 0;
    while (x < target) {
        x = image_length(d, x);
        if (++k > 100000) throw DomainError("leaf length did not grow");
    }
    return k;
}

} // namespace lam
