#include "lam/leaf.hpp"

#include <algorithm>
#include <numeric>

namespace lam {

namespace {

// Sign of (arc_length(a, b) - 1/2) without building a Rational.
int half_compare(const Angle& a, const Angle& b) {
    BigInt D = a.den() * b.den();
    BigInt diff = b.num() * a.den() - a.num() * b.den();
    if (diff < 0) diff += D;
    diff *= 2;
    return diff.compare(D);
}

} // namespace

Leaf::Leaf(const Angle& a, const Angle& b) {
    if (a == b) throw DomainError("leaf endpoints must differ: " + a.str());
    int c = half_compare(a, b);
    if (c < 0 || (c == 0 && a < b)) {
        a_ = a;
        b_ = b;
    } else {
        a_ = b;
        b_ = a;
    }
}

Leaf Leaf::parse(std::string_view a, std::string_view b, bool strict) {
    return Leaf(Angle::parse(a, strict), Angle::parse(b, strict));
}

std::string Leaf::str() const { return "(" + a_.str() + "," + b_.str() + ")"; }

Polygon::Polygon(std::vector<Angle> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw DomainError("polygon has a repeated vertex");
    if (v_.size() < 2) throw DomainError("polygon needs at least two vertices");
}

std::vector<Leaf> Polygon::sides() const {
    if (v_.size() == 2) return {Leaf(v_[0], v_[1])};
    std::vector<Leaf> out;
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) out.emplace_back(v_[i], v_[(i + 1) % v_.size()]);
    return out;
}

bool Polygon::has_vertex(const Angle& t) const { return std::binary_search(v_.begin(), v_.end(), t); }

std::string Polygon::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + v_[i].str();
    return s + "}";
}

Rational leaf_length(const Leaf& l) { return l.length(); }

LeafImage image_leaf(int d, const Leaf& l) {
    Angle a = sigma(d, l.first()), b = sigma(d, l.second());
    if (a == b) return DegeneratePoint{a};
    return Leaf(a, b);
}

Rational image_length(int d, const Rational& len) {
    Rational x = len * d;
    x -= Rational(numerator(x) / denominator(x));
    if (x * 2 <= 1) return x;
    return 1 - x;
}

bool crosses(const Leaf& l1, const Leaf& l2) {
    if (l1.shares_endpoint(l2)) return false;
    bool c = in_open_arc(l1.first(), l2.first(), l1.second());
    bool e = in_open_arc(l1.first(), l2.second(), l1.second());
    return c != e;
}

Rational leaf_distance(const Leaf& l1, const Leaf& l2) {
    if (l1.shares_endpoint(l2) || crosses(l1, l2))
        throw DomainError("leaf_distance needs disjoint leaves: " + l1.str() + " " + l2.str());
    // Order the four endpoints a < b < c < d circularly with (a,b) = l1.
    Angle a = l1.first(), b = l1.second();
    if (in_open_arc(a, l2.first(), b)) std::swap(a, b);
    Angle c = l2.first(), e = l2.second();
    if (!in_open_arc(b, c, e)) std::swap(c, e);
    return arc_length(b, c) + arc_length(e, a);
}

bool is_critical(int d, const Leaf& l) { return sigma(d, l.first()) == sigma(d, l.second()); }

std::vector<std::vector<Leaf>> sibling_collections(int d, const Leaf& target) {
    require_degree(d);
    auto pa = preimages(d, target.first());
    auto pb = preimages(d, target.second());
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Leaf>> out;
    do {
        std::vector<Leaf> coll;
        for (int i = 0; i < d; ++i) coll.emplace_back(pa[i], pb[perm[i]]);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            for (int j = i + 1; j < d && ok; ++j)
                if (crosses(coll[i], coll[j])) ok = false;
        if (ok) {
            std::sort(coll.begin(), coll.end());
            out.push_back(std::move(coll));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Polygon> image_polygon(int d, const Polygon& p) {
    std::vector<Angle> img;
    img.reserve(p.size());
    for (const auto& v : p.vertices()) img.push_back(sigma(d, v));
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;
    return Polygon(std::move(img));
}

bool polygon_crosses_leaf(const Polygon& p, const Leaf& l) {
    for (const auto& s : p.sides())
        if (crosses(s, l)) return true;
    return false;
}

bool polygons_cross(const Polygon& p, const Polygon& q) {
    for (const auto& s : p.sides())
        if (polygon_crosses_leaf(q, s)) return true;
    return false;
}

bool polygons_disjoint(const Polygon& p, const Polygon& q) {
    for (const auto& v : p.vertices())
        if (q.has_vertex(v)) return false;
    return !polygons_cross(p, q);
}

} // namespace lam
