#include "lam/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lam {

namespace {

Rational critical_gap(int d, const Leaf& l) {
    Rational g = Rational(1, d) - l.length();
    return g < 0 ? Rational(-g) : g;
}

int leaf_vertex_period(int d, const Leaf& l) {
    return std::lcm(exact_period(d, l.first()), exact_period(d, l.second()));
}

Leaf image_of(int d, const Leaf& l) {
    auto img = image_leaf(d, l);
    if (auto* p = std::get_if<Leaf>(&img)) return *p;
    throw DomainError(l.str() + " is critical");
}

bool attachable(int d, const Angle& at, const std::vector<Polygon>& orbit) {
    return is_compatible(CriticalPortrait::all_critical_polygon(d, at), orbit);
}

// Vertices of the orbit leaves connected to l through shared endpoints.
Polygon orbit_component(const Leaf& l, const std::vector<Leaf>& orbit) {
    std::set<Angle> verts{l.first(), l.second()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& o : orbit)
            if (verts.count(o.first()) || verts.count(o.second())) {
                grew |= verts.insert(o.first()).second;
                grew |= verts.insert(o.second()).second;
            }
    }
    return Polygon(std::vector<Angle>(verts.begin(), verts.end()));
}


// Least r with sigma^r mapping the polygon spanned by the orbit component of
// l back onto itself.
int return_time(int d, const Leaf& l) {
    return static_cast<int>(orbit_elements(d, orbit_component(l, orbit_leaves(d, l))).size());
}

// Polygon on the seed points and all their images under sigma^r.
Polygon return_closure(int d, int r, const std::vector<Angle>& seed) {
    std::set<Angle> verts;
    for (const auto& t : seed)
        for (Angle u = t; verts.insert(u).second;) u = sigma_iter(d, u, r);
    return Polygon(std::vector<Angle>(verts.begin(), verts.end()));
}

} // namespace

int CentralStrip::single_component(const Leaf& l) const {
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].contains_closed(l.first()) && arcs[i].contains_closed(l.second())) return static_cast<int>(i);
    return -1;
}

bool CentralStrip::reenters(const Leaf& l) const {
    if (std::find(bounding_leaves.begin(), bounding_leaves.end(), l) != bounding_leaves.end()) return false;
    auto in_strip = [&](const Angle& t) {
        return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.contains_closed(t); });
    };
    return in_strip(l.first()) && in_strip(l.second());
}

SiblingPortrait sibling_portrait(int d, const Leaf& m) {
    require_degree(d);
    if (m.length() * d >= 1) throw DomainError(m.str() + " is not shorter than 1/" + std::to_string(d));
    SiblingPortrait sp{d, m, {}, CriticalPortrait::all_critical_polygon(d, m.first())};
    for (int j = 1; j < d; ++j)
        sp.siblings.emplace_back(m.first().shifted(Rational(j, d)), m.second().shifted(Rational(j, d)));
    return sp;
}

CentralStrip strip_from_siblings(int d, const std::vector<Leaf>& siblings) {
    std::vector<std::pair<Angle, std::size_t>> ends;
    for (std::size_t i = 0; i < siblings.size(); ++i) {
        ends.emplace_back(siblings[i].first(), i);
        ends.emplace_back(siblings[i].second(), i);
    }
    std::sort(ends.begin(), ends.end());
    CentralStrip strip;
    strip.bounding_leaves = siblings;
    std::sort(strip.bounding_leaves.begin(), strip.bounding_leaves.end());
    strip.eta = 0;
    const Rational limit(1, 2 * d);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const auto& [a, la] = ends[i];
        const auto& [b, lb] = ends[(i + 1) % ends.size()];
        if (la == lb) continue;
        Arc arc{a, b};
        if (arc.length() >= limit) continue;
        strip.eta = std::max(strip.eta, arc.length());
        strip.arcs.push_back(arc);
    }
    strip.narrow = !strip.arcs.empty() && strip.eta < Rational(1, d * (d + 1));
    return strip;
}

CentralStrip central_strip(const SiblingPortrait& sp) {
    std::vector<Leaf> all{sp.major};
    all.insert(all.end(), sp.siblings.begin(), sp.siblings.end());
    auto strip = strip_from_siblings(sp.d, all);
    if (strip.arcs.size() < 2) throw DomainError("no central strip for " + sp.major.str());
    return strip;
}

std::vector<Endcap> endcaps(const SiblingPortrait& sp) {
    // Sibling j touches the d-gon at first + j/d; its free end is second + j/d
    // and the endcap runs on to the next d-gon vertex.
    std::vector<Endcap> out;
    for (int j = 0; j < sp.d; ++j) {
        Arc a{sp.major.second().shifted(Rational(j, sp.d)), sp.major.first().shifted(Rational(j + 1, sp.d))};
        bool adj = sp.major.has_endpoint(a.start) || sp.major.has_endpoint(a.end);
        out.push_back({a, adj});
    }
    return out;
}

Rational distance_to_critical(int d, const Leaf& l) {
    Rational span = l.length(), best = -1;
    for (int m = 1; m < d; ++m) {
        Rational g = span - Rational(m, d);
        if (g < 0) g = -g;
        if (best < 0 || g < best) best = g;
    }
    return best / 2;
}

namespace {

// Strip of l and its siblings. A leaf shorter than 1/d uses its translates;
// a longer one needs the full sibling collection through it, which must be
// unique.
CentralStrip strip_of(int d, const Leaf& l) {
    if (l.length() * d < 1) return central_strip(sibling_portrait(d, l));
    std::vector<std::vector<Leaf>> through;
    for (auto& c : sibling_collections(d, image_of(d, l)))
        if (std::find(c.begin(), c.end(), l) != c.end()) through.push_back(std::move(c));
    if (through.size() != 1)
        throw DomainError(std::to_string(through.size()) + " full sibling collections contain " + l.str());
    auto strip = strip_from_siblings(d, through.front());
    if (strip.arcs.size() < 2) throw DomainError("no central strip for " + l.str());
    return strip;
}

CslReport strip_check(int d, const Leaf& l, const CentralStrip& strip, int max_iter) {
    CslReport rep;
    rep.eta = strip.eta;
    rep.narrow = strip.narrow;
    const int n = std::min(leaf_vertex_period(d, l), max_iter);
    std::vector<Leaf> iter{l};
    for (int j = 1; j < n; ++j) {
        iter.push_back(image_of(d, iter.back()));
        const Leaf& lj = iter.back();
        if (lj == l) break;
        if (strip.reenters(lj)) rep.reentries.push_back(j);
        if (strip.single_component(lj) >= 0 && strip.reenters(lj)) rep.single_component.push_back(j);
    }
    rep.clause1 = std::find(rep.reentries.begin(), rep.reentries.end(), 1) == rep.reentries.end();
    rep.clause2 = std::find(rep.single_component.begin(), rep.single_component.end(), 2) == rep.single_component.end();
    for (int j : rep.single_component) {
        if (j <= 2) continue;
        bool found = false;
        BigInt scale = 1;
        for (int k = j - 1; k >= 1 && !found; --k) {
            scale *= d;
            if (distance_to_critical(d, iter[k]) <= strip.eta / Rational(scale)) found = true;
        }
        rep.clause3 = rep.clause3 && found;
    }
    return rep;
}

} // namespace

CslReport csl_check(int d, const Leaf& l, int max_iter) {
    if (!is_periodic(d, l.first()) || !is_periodic(d, l.second()))
        throw DomainError(l.str() + " is not periodic");
    return strip_check(d, l, strip_of(d, l), max_iter);
}

CslReport csl_check(int d, const Leaf& l, const std::vector<Leaf>& collection, int max_iter) {
    if (!is_periodic(d, l.first()) || !is_periodic(d, l.second()))
        throw DomainError(l.str() + " is not periodic");
    if (static_cast<int>(collection.size()) != d || std::find(collection.begin(), collection.end(), l) == collection.end())
        throw DomainError("not a full sibling collection through " + l.str());
    const Leaf target = image_of(d, l);
    for (const auto& c : collection)
        if (image_of(d, c) != target) throw DomainError(c.str() + " is not a sibling of " + l.str());
    auto strip = strip_from_siblings(d, collection);
    if (strip.arcs.size() < 2) throw DomainError("no central strip for " + l.str());
    return strip_check(d, l, strip, max_iter);
}

std::optional<MacData> is_mac(int d, const Leaf& l) {
    require_degree(d);
    if (!is_periodic(d, l.first()) || !is_periodic(d, l.second())) return std::nullopt;
    if (l.length() * d >= 1) return std::nullopt;
    std::vector<Leaf> orbit = orbit_leaves(d, l);
    if (find_crossing(orbit)) return std::nullopt;
    std::vector<Polygon> orbit_polys(orbit.begin(), orbit.end());
    const Rational mine = critical_gap(d, l);
    std::vector<Leaf> tied;
    for (const auto& o : orbit) {
        if (o == l) continue;
        Rational g = critical_gap(d, o);
        if (g < mine) return std::nullopt;
        if (g == mine) tied.push_back(o);
    }
    bool at_start = attachable(d, l.first(), orbit_polys);
    bool at_end = attachable(d, l.second(), orbit_polys);
    if (!at_start && !at_end) return std::nullopt;

    std::vector<std::string> diag;
    if (!at_start) diag.push_back("only the counterclockwise endpoint admits an all-critical attachment");
    for (const auto& o : tied) {
        if (o.length() * d >= 1) continue;
        if (!attachable(d, o.first(), orbit_polys) && !attachable(d, o.second(), orbit_polys)) continue;
        if (o < l) return std::nullopt;
        diag.push_back("tied with " + o.str() + "; smaller leaf chosen");
    }

    OrbitClass cls;
    try {
        cls = classify(d, orbit_component(l, orbit));
    } catch (const DomainError&) {
        return std::nullopt;
    }
    if (cls.tag != OrbitTag::IdentityReturn && cls.tag != OrbitTag::Rotational && cls.tag != OrbitTag::RotationReturn)
        return std::nullopt;

    MacData mac{l, image_of(d, l), leaf_vertex_period(d, l), cls, {}, std::move(diag)};
    try {
        mac.coroots = coroots(d, mac);
    } catch (const DomainError& e) {
        mac.diagnostics.push_back(e.what());
    }
    return mac;
}

std::vector<Angle> coroots(int d, const MacData& mac) {
    // A co-root is a point of the central gap fixed by its first return. The
    // candidates are the period-n points of each far endcap; the one on the
    // gap is the one whose orbit, joined to the endpoints of M, stays
    // non-crossing and keeps the orbit type of M.
    const int n = mac.period;
    const BigInt N = ipow(d, n) - 1;
    const int r = return_time(d, mac.major);
    auto consistent = [&](const std::vector<Angle>& extra) {
        std::vector<Angle> seed{mac.major.first(), mac.major.second()};
        seed.insert(seed.end(), extra.begin(), extra.end());
        try {
            return classify(d, return_closure(d, r, seed)).tag == mac.orbit_class.tag;
        } catch (const DomainError&) {
            return false;
        }
    };

    std::vector<Arc> caps;
    std::vector<std::vector<Angle>> options;
    for (const auto& cap : endcaps(sibling_portrait(d, mac.major))) {
        if (cap.adjacent_to_major) continue;
        Rational s = cap.interval.start.value() * Rational(N);
        Rational e = cap.interval.end.value() * Rational(N);
        if (e <= s) e += Rational(N);
        BigInt lo = numerator(s) / denominator(s) + 1;
        BigInt hi = numerator(e) / denominator(e);
        if (denominator(e) == 1) hi -= 1;
        std::vector<Angle> found;
        for (BigInt j = lo; j <= hi; ++j) {
            Angle t = Angle::from_fraction(j % N, N);
            if (cap.interval.contains_open(t) && exact_period(d, t) == n && consistent({t})) found.push_back(t);
        }
        caps.push_back(cap.interval);
        options.push_back(std::move(found));
    }

    std::vector<std::vector<Angle>> solutions;
    std::vector<Angle> pick;
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (solutions.size() > 1) return;
        if (i == options.size()) {
            if (consistent(pick)) solutions.push_back(pick);
            return;
        }
        for (const auto& c : options[i]) {
            pick.push_back(c);
            if (i == 0 || consistent(pick)) self(self, i + 1);
            pick.pop_back();
        }
    };
    search(search, 0);
    if (solutions.size() != 1) {
        std::string where;
        for (std::size_t i = 0; i < caps.size(); ++i)
            where += " (" + caps[i].start.str() + "," + caps[i].end.str() + "):" + std::to_string(options[i].size());
        throw DomainError(std::string(solutions.empty() ? "no" : "ambiguous") + " co-root assignment for " +
                          mac.major.str() + "; candidates per endcap" + where);
    }
    auto out = solutions.front();
    std::sort(out.begin(), out.end());
    return out;
}

ScmData mac_to_scm(int d, const MacData& mac) {
    if (mac.orbit_class.tag != OrbitTag::IdentityReturn && mac.orbit_class.tag != OrbitTag::Rotational)
        throw DomainError("no SCM construction for a " + mac.orbit_class.tag_name() + " major");
    if (static_cast<int>(mac.coroots.size()) != d - 2)
        throw DomainError("expected " + std::to_string(d - 2) + " co-roots for " + mac.major.str());
    std::vector<Angle> seed{mac.major.first(), mac.major.second()};
    seed.insert(seed.end(), mac.coroots.begin(), mac.coroots.end());
    Polygon p = return_closure(d, return_time(d, mac.major), seed);
    auto chain = scm_major_chain(d, p);
    Leaf chord(chain.front().first, chain.back().second);
    if (chord != mac.major) throw DomainError("major chain of " + p.str() + " does not close on " + mac.major.str());
    ScmData scm{p, {}, chord};
    for (const auto& [a, b] : chain) scm.majors.emplace_back(a, b);
    return scm;
}

MacData scm_to_mac(int d, const Polygon& p) {
    auto chain = scm_major_chain(d, p);
    Leaf m(chain.front().first, chain.back().second);
    auto mac = is_mac(d, m);
    if (!mac) throw DomainError(m.str() + " recovered from " + p.str() + " is not a MAC leaf");
    return *mac;
}

MacData scm_to_mac(int d, const ScmData& scm) { return scm_to_mac(d, scm.polygon); }

std::optional<ScmData> is_scm(int d, const Polygon& p) {
    require_degree(d);
    OrbitClass cls;
    try {
        cls = classify(d, p);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    if (cls.tag != OrbitTag::IdentityReturn && cls.tag != OrbitTag::Rotational) return std::nullopt;

    const auto& v = p.vertices();
    const std::size_t k = v.size();
    const Rational lo(1, d), hi(1, d - 1);
    int majors = 0, shorts = 0;
    for (std::size_t i = 0; i < k; ++i) {
        Rational span = arc_length(v[i], v[(i + 1) % k]);
        if (span > lo && span < hi) ++majors;
        if (span < lo) ++shorts;
    }
    if (majors != d - 1 || shorts == 0) return std::nullopt;

    std::vector<std::pair<Angle, Angle>> chain;
    std::optional<CriticalPortrait> portrait;
    try {
        chain = scm_major_chain(d, p);
        portrait = scm_portrait(d, p);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    const int s = portrait->sector_of(v.front());
    for (const auto& x : v)
        if (portrait->sector_of(x) != s) return std::nullopt;
    if (!is_maximal_sector(*portrait, portrait->sectors()[s])) return std::nullopt;

    auto closest = [&](const Polygon& q) {
        Rational best = -1;
        for (const auto& side : q.sides()) {
            Rational g = critical_gap(d, side);
            if (best < 0 || g < best) best = g;
        }
        return best;
    };
    const Rational mine = closest(p);
    for (const auto& q : orbit_elements(d, p))
        if (q != p && closest(q) <= mine) return std::nullopt;

    ScmData scm{p, {}, Leaf(chain.front().first, chain.back().second)};
    for (const auto& [a, b] : chain) scm.majors.emplace_back(a, b);
    return scm;
}

Gap central_gap(const Lamination& l, const Leaf& major) {
    return GapFinder(l).left_of(major.first(), major.second());
}

bool lamination_equal_at_depth(const PullbackResult& a, const PullbackResult& b, int n) {
    const int d = a.lamination.degree();
    if (b.lamination.degree() != d || b.depth < n) return false;

    // A branch inverse carries every chord between vertices of a polygon to
    // the matching chord of its pullback. So when each generator of A joins
    // two vertices of one generator of B, the pullbacks of A's generators are
    // already chords of B's elements and no second pullback is needed.
    std::set<Leaf> a_gens;
    for (const auto& g : a.generators)
        for (const auto& s : g.sides()) a_gens.insert(s);
    bool inside = std::all_of(a_gens.begin(), a_gens.end(), [&](const Leaf& l) {
        return std::any_of(b.generators.begin(), b.generators.end(), [&](const Polygon& g) {
            return g.has_vertex(l.first()) && g.has_vertex(l.second());
        });
    });

    std::optional<PullbackResult> joint;
    if (!inside) {
        std::vector<Polygon> gens = b.generators;
        gens.insert(gens.end(), a.generators.begin(), a.generators.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        try {
            joint = pullback_lamination(gens, b.portrait, n);
        } catch (const DomainError&) {
            return false;
        }
    }
    const auto& elements = joint ? joint->elements : b.elements;

    std::set<Leaf> kept;
    for (const auto& [poly, depth] : elements) {
        if (depth > n) continue;
        const auto& v = poly.vertices();
        std::vector<Angle> root;
        for (const auto& t : v) root.push_back(sigma_iter(d, t, depth));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (root[i] != root[j] && a_gens.count(Leaf(root[i], root[j]))) kept.insert(Leaf(v[i], v[j]));
    }
    auto want = a.lamination.leaves_up_to(n);
    return std::set<Leaf>(want.begin(), want.end()) == kept;
}

FirstReturn first_return(int d, const Gap& g, int max_iter) {
    require_degree(d);
    if (g.whole_circle()) return {1, d};
    const auto verts = g.vertices();
    std::vector<Angle> cur = verts;
    for (int k = 1; k <= max_iter; ++k) {
        for (auto& t : cur) t = sigma(d, t);
        bool inside = std::all_of(cur.begin(), cur.end(),
                                  [&](const Angle& t) { return std::binary_search(verts.begin(), verts.end(), t); });
        if (!inside) continue;
        // Winding of the boundary image: arcs stretch by d^k, chords advance by
        // the arc they cut off.
        Rational total = 0;
        const BigInt scale = ipow(d, k);
        for (const auto& piece : g.pieces()) {
            if (piece.kind == GapPiece::Kind::Arc) {
                total += arc_length(piece.from, piece.to) * Rational(scale);
            } else {
                Angle x = sigma_iter(d, piece.from, k), y = sigma_iter(d, piece.to, k);
                if (x != y) total += arc_length(x, y);
            }
        }
        if (denominator(total) != 1) throw DomainError("first return degree is not an integer: " + to_string(total));
        return {k, numerator(total).convert_to<int>()};
    }
    throw DomainError("gap does not return within " + std::to_string(max_iter) + " steps");
}

} // namespace lam
