#include "lam/gaps.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace lam {

std::vector<Angle> Gap::vertices() const {
    std::vector<Angle> out;
    for (const auto& p : pieces_) {
        out.push_back(p.from);
        out.push_back(p.to);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Arc> Gap::arcs() const {
    std::vector<Arc> out;
    for (const auto& p : pieces_)
        if (p.kind == GapPiece::Kind::Arc) out.push_back({p.from, p.to});
    return out;
}

std::vector<Leaf> Gap::boundary_leaves() const {
    std::vector<Leaf> out;
    for (const auto& p : pieces_)
        if (p.kind == GapPiece::Kind::Leaf) out.emplace_back(p.from, p.to);
    std::sort(out.begin(), out.end());
    return out;
}

Rational Gap::arc_total() const {
    if (whole_circle_) return 1;
    Rational r = 0;
    for (const auto& a : arcs()) r += a.length();
    return r;
}

bool Gap::trace_contains(const Angle& t) const {
    if (whole_circle_) return true;
    for (const auto& p : pieces_) {
        if (p.from == t || p.to == t) return true;
        if (p.kind == GapPiece::Kind::Arc && in_open_arc(p.from, t, p.to)) return true;
    }
    return false;
}

GapFinder::GapFinder(const std::vector<Leaf>& leaves) {
    for (const auto& l : leaves) {
        pts_.push_back(l.first());
        pts_.push_back(l.second());
    }
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    const int m = static_cast<int>(pts_.size());
    nbr_.assign(m, {});
    for (const auto& l : leaves) {
        int a = index_of(l.first()), b = index_of(l.second());
        nbr_[a].push_back(b);
        nbr_[b].push_back(a);
    }
    for (int i = 0; i < m; ++i) {
        auto& v = nbr_[i];
        std::sort(v.begin(), v.end(), [&](int x, int y) { return (x - i + m) % m < (y - i + m) % m; });
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
}

int GapFinder::index_of(const Angle& t) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), t);
    if (it == pts_.end() || *it != t) return -1;
    return static_cast<int>(it - pts_.begin());
}

GapFinder::Step GapFinder::next(const Step& s) const {
    const int m = static_cast<int>(pts_.size());
    const int y = s.to;
    // Arriving along an arc every chord at y is admissible; arriving along a
    // chord only those that stay inside the arc it cut off behind us.
    const int limit = s.is_arc ? m : (s.from - y + m) % m;
    const auto& v = nbr_[y];
    auto it = std::lower_bound(v.begin(), v.end(), limit,
                               [&](int u, int lim) { return (u - y + m) % m < lim; });
    if (it == v.begin()) return {true, y, (y + 1) % m};
    return {false, y, *std::prev(it)};
}

Gap GapFinder::walk(Step start, std::vector<char>* used) const {
    const int m = static_cast<int>(pts_.size());
    auto key = [&](const Step& s) -> std::size_t {
        if (s.is_arc) return static_cast<std::size_t>(s.from);
        const auto& v = nbr_[s.from];
        auto pos = std::find(v.begin(), v.end(), s.to) - v.begin();
        return static_cast<std::size_t>(m) * (1 + s.from) + static_cast<std::size_t>(pos);
    };
    std::vector<GapPiece> pieces;
    Step s = start;
    do {
        if (used) (*used)[key(s)] = 1;
        pieces.push_back({s.is_arc ? GapPiece::Kind::Arc : GapPiece::Kind::Leaf, pts_[s.from], pts_[s.to]});
        s = next(s);
    } while (!(s.is_arc == start.is_arc && s.from == start.from && s.to == start.to));
    return Gap(std::move(pieces));
}

std::vector<Gap> GapFinder::all() const {
    if (pts_.empty()) return {Gap()};
    const int m = static_cast<int>(pts_.size());
    std::vector<char> used(static_cast<std::size_t>(m) * (m + 1), 0);
    std::vector<Gap> out;
    for (int i = 0; i < m; ++i)
        if (!used[i]) out.push_back(walk({true, i, (i + 1) % m}, &used));
    for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < nbr_[i].size(); ++k)
            if (!used[static_cast<std::size_t>(m) * (1 + i) + k]) out.push_back(walk({false, i, nbr_[i][k]}, &used));
    return out;
}

Gap GapFinder::left_of(const Angle& from, const Angle& to) const {
    int a = index_of(from), b = index_of(to);
    if (a < 0 || b < 0 || std::find(nbr_[a].begin(), nbr_[a].end(), b) == nbr_[a].end())
        throw DomainError("no leaf " + from.str() + " -> " + to.str() + " in lamination");
    return walk({false, a, b}, nullptr);
}

Gap GapFinder::containing(const Angle& t) const {
    if (pts_.empty()) return Gap();
    const int m = static_cast<int>(pts_.size());
    auto it = std::upper_bound(pts_.begin(), pts_.end(), t);
    int i = it == pts_.begin() ? m - 1 : static_cast<int>(it - pts_.begin()) - 1;
    return walk({true, i, (i + 1) % m}, nullptr);
}

std::vector<Gap> gaps(const Lamination& L) { return GapFinder(L).all(); }

namespace {

// Closed circle trace of a gap with O(log n) membership.
class Trace {
public:
    explicit Trace(const Gap& g) : verts_(g.vertices()) {
        for (const auto& a : g.arcs()) arcs_.push_back(a);
        std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
    }
    bool contains(const Angle& t) const {
        if (std::binary_search(verts_.begin(), verts_.end(), t)) return true;
        if (arcs_.empty()) return false;
        auto it = std::upper_bound(arcs_.begin(), arcs_.end(), t,
                                   [](const Angle& x, const Arc& a) { return x < a.start; });
        const Arc& a = it == arcs_.begin() ? arcs_.back() : *std::prev(it);
        return a.contains_open(t);
    }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Angle>& vertices() const { return verts_; }

private:
    std::vector<Angle> verts_;
    std::vector<Arc> arcs_;
};

} // namespace

int gap_degree(int d, const Gap& g) {
    require_degree(d);
    if (g.whole_circle()) return d;
    Trace trace(g);

    // Breakpoints: vertices and their 1/d-translates inside the trace. This
    // set is closed under translation within the trace.
    std::vector<Angle> breaks = trace.vertices();
    for (const auto& v : trace.vertices())
        for (int j = 1; j < d; ++j) {
            Angle w = v.shifted(Rational(j, d));
            if (trace.contains(w)) breaks.push_back(w);
        }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Inside each arc, d-1 evenly spaced points per open sub-interval between
    // breakpoints. Translation maps sub-intervals onto sub-intervals, so these
    // points are translation-closed too, and d-1 of them realise every
    // relative order a family of criticality <= d-1 can need.
    std::vector<Angle> cand = breaks;
    for (const auto& a : trace.arcs()) {
        std::vector<std::pair<Rational, Angle>> inside;
        for (const auto& b : breaks)
            if (a.contains_closed(b)) inside.emplace_back(arc_length(a.start, b), b);
        std::sort(inside.begin(), inside.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i + 1 < inside.size(); ++i) {
            Rational len = inside[i + 1].first - inside[i].first;
            for (int k = 1; k < d; ++k) cand.push_back(inside[i].second.shifted(len * k / d));
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::map<Angle, int> fiber_ids;
    std::vector<int> fib;
    fib.reserve(cand.size());
    std::map<int, int> fiber_count;
    for (const auto& c : cand) {
        auto [it, _] = fiber_ids.emplace(sigma(d, c), static_cast<int>(fiber_ids.size()));
        fib.push_back(it->second);
        ++fiber_count[it->second];
    }
    std::vector<int> keep;
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (fiber_count[fib[i]] > 1) keep.push_back(fib[i]);
    const int n = static_cast<int>(keep.size());
    if (n < 2) return 1;

    // Interval DP. A component of a non-crossing chord family may be
    // replaced by the chain through its points in order, so G(i, j) pairs i
    // with its next chain point k.
    std::vector<std::vector<int>> partners(n);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (keep[k] == keep[i]) partners[i].push_back(k);
    std::vector<std::uint8_t> G(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> std::uint8_t {
        if (i > j || i >= n || j < 0) return 0;
        return G[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = n - 1; i >= 0; --i)
        for (int j = i; j < n; ++j) {
            int best = at(i + 1, j);
            for (int k : partners[i]) {
                if (k > j) break;
                best = std::max(best, 1 + at(i + 1, k - 1) + at(k, j));
            }
            G[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(std::min(best, 255));
        }
    return 1 + at(0, n - 1);
}

} // namespace lam
