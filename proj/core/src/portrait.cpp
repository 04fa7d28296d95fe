#include "lam/portrait.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lam/gaps.hpp"
#include "lam/lamination.hpp"

namespace lam {

bool CriticalSector::contains(const Angle& t, SectorClosure closure) const {
    return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
        return closure == SectorClosure::Start ? a.contains_half_open(t) : a.contains_open(t) || t == a.end;
    });
}

Rational CriticalSector::arc_total() const {
    Rational r = 0;
    for (const auto& a : arcs) r += a.length();
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

CriticalPortrait::CriticalPortrait(int d, std::vector<Leaf> chords, SectorClosure closure)
    : d_(d), closure_(closure), chords_(std::move(chords)) {
    require_degree(d);
    std::sort(chords_.begin(), chords_.end());
    chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
    for (const auto& c : chords_)
        if (!is_critical(d, c)) throw DomainError("portrait chord " + c.str() + " is not critical");
    if (auto x = find_crossing(chords_))
        throw CrossingError("portrait chords cross: " + x->first.str() + " " + x->second.str(), x->first.str(),
                            x->second.str());
    if (criticality() < d - 1)
        throw DomainError("portrait criticality " + std::to_string(criticality()) + " is below d-1");

    const Rational share(1, d);
    for (auto& g : GapFinder(chords_).all()) {
        if (g.arc_total() == 0) continue;
        CriticalSector s;
        s.arcs = g.arcs();
        s.chords = g.boundary_leaves();
        if (s.arc_total() != share)
            throw DomainError("portrait sector has arc length " + to_string(s.arc_total()) + ", expected 1/" +
                              std::to_string(d));
        sectors_.push_back(std::move(s));
    }
    if (static_cast<int>(sectors_.size()) != d) throw DomainError("portrait does not cut the disk into d sectors");
    std::sort(sectors_.begin(), sectors_.end(), [](const CriticalSector& x, const CriticalSector& y) {
        auto lo = [](const CriticalSector& s) {
            return std::min_element(s.arcs.begin(), s.arcs.end(),
                                    [](const Arc& a, const Arc& b) { return a.start < b.start; })
                ->start;
        };
        return lo(x) < lo(y);
    });

    for (const auto& c : chords_) {
        cuts_.push_back(c.first());
        cuts_.push_back(c.second());
    }
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
    owner_.assign(cuts_.size(), -1);
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
        const Arc gap{cuts_[i], cuts_[(i + 1) % cuts_.size()]};
        const Angle mid = gap.start.shifted(gap.length() / 2);
        for (std::size_t s = 0; s < sectors_.size() && owner_[i] < 0; ++s)
            if (sectors_[s].contains(mid)) owner_[i] = static_cast<int>(s);
    }
}

CriticalPortrait CriticalPortrait::all_critical_polygon(int d, const Angle& v, SectorClosure closure) {
    std::vector<Angle> verts;
    for (int j = 0; j < d; ++j) verts.push_back(v.shifted(Rational(j, d)));
    return CriticalPortrait(d, Polygon(verts).sides(), closure);
}

int CriticalPortrait::sector_of(const Angle& t) const {
    auto it = closure_ == SectorClosure::Start ? std::upper_bound(cuts_.begin(), cuts_.end(), t)
                                               : std::lower_bound(cuts_.begin(), cuts_.end(), t);
    std::size_t i = it == cuts_.begin() ? cuts_.size() - 1 : static_cast<std::size_t>(it - cuts_.begin()) - 1;
    return owner_[i];
}

std::vector<std::vector<Leaf>> CriticalPortrait::components() const {
    std::vector<Angle> pts;
    for (const auto& c : chords_) {
        pts.push_back(c.first());
        pts.push_back(c.second());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto idx = [&](const Angle& t) { return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), t) - pts.begin()); };
    UnionFind uf(static_cast<int>(pts.size()));
    for (const auto& c : chords_) uf.unite(idx(c.first()), idx(c.second()));
    std::map<int, std::vector<Leaf>> groups;
    for (const auto& c : chords_) groups[uf.find(idx(c.first()))].push_back(c);
    std::vector<std::vector<Leaf>> out;
    for (auto& [_, g] : groups) out.push_back(std::move(g));
    return out;
}

int CriticalPortrait::criticality() const {
    int total = 0;
    for (const auto& comp : components()) {
        std::vector<Angle> v;
        for (const auto& c : comp) {
            v.push_back(c.first());
            v.push_back(c.second());
        }
        std::sort(v.begin(), v.end());
        total += static_cast<int>(std::unique(v.begin(), v.end()) - v.begin()) - 1;
    }
    return total;
}

std::vector<CriticalSector> sectors(const CriticalPortrait& c) { return c.sectors(); }

std::vector<BranchInverse> branch_inverses(const CriticalPortrait& c) {
    std::vector<BranchInverse> out;
    for (const auto& s : c.sectors()) out.push_back({s, c.degree(), c.closure()});
    return out;
}

Angle branch_apply(const BranchInverse& tau, const Angle& t) {
    for (const auto& s : preimages(tau.d, t))
        if (tau.sector.contains(s, tau.closure)) return s;
    throw DomainError("no preimage of " + t.str() + " in sector");
}

bool is_maximal_sector(const CriticalPortrait& c, const CriticalSector& s) {
    auto on_boundary = [&](const Leaf& l) { return std::find(s.chords.begin(), s.chords.end(), l) != s.chords.end(); };
    for (const auto& comp : c.components()) {
        if (comp.size() == 1) {
            if (!on_boundary(comp.front())) return false;
        } else if (std::none_of(comp.begin(), comp.end(), on_boundary)) {
            return false;
        }
    }
    return true;
}

bool is_compatible(const CriticalPortrait& c, const std::vector<Polygon>& f) {
    for (const auto& p : f) {
        auto sides = p.sides();
        for (const auto& chord : c.chords()) {
            // A chord on two vertices is a side or a diagonal; either way it meets p.
            if (p.has_vertex(chord.first()) && p.has_vertex(chord.second())) return false;
            for (const auto& s : sides)
                if (crosses(s, chord)) return false;
        }
    }
    return true;
}

} // namespace lam
