#include "lam/pullback.hpp"

#include <algorithm>

#include "lam/orbits.hpp"

namespace lam {

namespace {

// Preimages of circle points keyed by sector, computed once per point.
class BranchTable {
public:
    explicit BranchTable(const CriticalPortrait& c) : c_(c) {}

    const std::vector<Angle>& lifts(const Angle& v) {
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
        std::vector<Angle> by_sector(c_.degree());
        for (auto& p : preimages(c_.degree(), v)) {
            int s = c_.sector_of(p);
            by_sector[s] = std::move(p);
        }
        return memo_.emplace(v, std::move(by_sector)).first->second;
    }

private:
    const CriticalPortrait& c_;
    std::map<Angle, std::vector<Angle>> memo_;
};

template <class Emit>
void pull_back(const Polygon& q, BranchTable& table, int d, Emit&& emit) {
    std::vector<const std::vector<Angle>*> lifts;
    lifts.reserve(q.size());
    for (const auto& v : q.vertices()) lifts.push_back(&table.lifts(v));
    for (int s = 0; s < d; ++s) {
        std::vector<Angle> verts;
        verts.reserve(q.size());
        for (const auto* l : lifts) verts.push_back((*l)[s]);
        emit(Polygon(std::move(verts)));
    }
}

void require_compatible(const CriticalPortrait& c, const std::vector<Polygon>& f) {
    if (!is_compatible(c, f)) throw DomainError("portrait is not compatible with the generating set");
}

} // namespace

std::vector<Polygon> pullback_step(const std::vector<Polygon>& f, const CriticalPortrait& c) {
    require_compatible(c, f);
    BranchTable table(c);
    std::vector<Polygon> out = f;
    for (const auto& q : f) pull_back(q, table, c.degree(), [&](Polygon p) { out.push_back(std::move(p)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PullbackResult pullback_lamination(const std::vector<Polygon>& f, const CriticalPortrait& c, int n) {
    if (n < 0) throw DomainError("pullback depth must be >= 0");
    require_compatible(c, f);
    const int d = c.degree();
    PullbackResult res{Lamination(d), {}, c, f, n, {}};
    std::sort(res.generators.begin(), res.generators.end());
    res.generators.erase(std::unique(res.generators.begin(), res.generators.end()), res.generators.end());

    std::vector<const Polygon*> frontier;
    for (const auto& g : res.generators) {
        auto [it, inserted] = res.elements.emplace(g, 0);
        if (inserted) frontier.push_back(&it->first);
        for (const auto& s : g.sides()) res.lamination.add(s, 0);
    }
    res.stages.push_back(res.lamination.size());

    for (int stage = 1; stage <= n; ++stage) {
        BranchTable table(c);
        std::vector<const Polygon*> next;
        for (const Polygon* q : frontier)
            pull_back(*q, table, d, [&](Polygon p) {
                auto [it, inserted] = res.elements.emplace(std::move(p), stage);
                if (!inserted) return;
                next.push_back(&it->first);
                for (const auto& s : it->first.sides()) res.lamination.add(s, stage);
            });
        frontier = std::move(next);
        res.stages.push_back(res.lamination.size());
    }
    res.lamination.set_truncation_depth(n);

    if (auto x = find_crossing(res.lamination.leaf_list()))
        throw CrossingError("pullback produced crossing leaves " + x->first.str() + " and " + x->second.str(),
                            x->first.str(), x->second.str());
    return res;
}

std::vector<Polygon> orbit_elements(int d, const Polygon& p) {
    auto info = forward_orbit(d, p);
    if (!info || info->preperiod != 0) throw DomainError(p.str() + " is not periodic");
    return info->orbit;
}

std::vector<Leaf> orbit_leaves(int d, const Leaf& l) {
    std::vector<Leaf> out;
    for (const auto& q : orbit_elements(d, Polygon(l))) out.push_back(q.sides().front());
    return out;
}

std::optional<CriticalPortrait> mac_portrait(int d, const Leaf& m) {
    if (leaf_length(m) * d >= 1) return std::nullopt;
    std::vector<Polygon> orbit;
    for (const auto& l : orbit_leaves(d, m)) orbit.emplace_back(l);
    auto c = CriticalPortrait::all_critical_polygon(d, m.first());
    if (is_compatible(c, orbit)) return c;
    // Mirror image: the d-gon at the far end of the short arc, with sectors
    // closed at their clockwise end so that M stays in one sector.
    c = CriticalPortrait::all_critical_polygon(d, m.second(), SectorClosure::End);
    if (is_compatible(c, orbit)) return c;
    return std::nullopt;
}

PullbackResult canonical_mac_lamination(int d, const Leaf& m, int n) {
    auto c = mac_portrait(d, m);
    if (!c) throw DomainError("no compatible all-critical attachment for " + m.str());
    std::vector<Polygon> orbit;
    for (const auto& l : orbit_leaves(d, m)) orbit.emplace_back(l);
    return pullback_lamination(orbit, *c, n);
}

std::vector<std::pair<Angle, Angle>> scm_major_chain(int d, const Polygon& p) {
    const auto& v = p.vertices();
    const int k = static_cast<int>(v.size());
    const Rational share(1, d);
    std::vector<char> major(k, 0);
    int count = 0;
    for (int i = 0; i < k; ++i)
        if (arc_length(v[i], v[(i + 1) % k]) > share) {
            major[i] = 1;
            ++count;
        }
    if (count != d - 1)
        throw DomainError(p.str() + " has " + std::to_string(count) + " sides longer than 1/" + std::to_string(d) +
                          ", expected " + std::to_string(d - 1));
    // The chain starts at a major whose predecessor is not a major.
    int start = -1;
    for (int i = 0; i < k && start < 0; ++i)
        if (major[i] && !major[(i + k - 1) % k]) start = i;
    if (start < 0) throw DomainError(p.str() + " has no side shorter than 1/" + std::to_string(d));
    std::vector<std::pair<Angle, Angle>> chain;
    for (int j = 0; j < count; ++j) {
        int i = (start + j) % k;
        if (!major[i]) throw DomainError("major sides of " + p.str() + " are not adjacent");
        chain.emplace_back(v[i], v[(i + 1) % k]);
    }
    return chain;
}

CriticalPortrait scm_portrait(int d, const Polygon& p) {
    std::vector<Leaf> chords;
    for (const auto& [a, b] : scm_major_chain(d, p)) chords.emplace_back(b.shifted(Rational(-1, d)), b);
    return CriticalPortrait(d, chords);
}

PullbackResult canonical_scm_lamination(int d, const Polygon& p, int n) {
    return pullback_lamination(orbit_elements(d, p), scm_portrait(d, p), n);
}

} // namespace lam
