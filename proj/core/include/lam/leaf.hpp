#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lam/circle.hpp"

namespace lam {

/// Chord between two distinct circle points. Stored so that the
/// counterclockwise arc from first() to second() is the short one; at length
/// exactly 1/2 the smaller endpoint comes first.
class Leaf {
public:
    Leaf(const Angle& a, const Angle& b);
    static Leaf parse(std::string_view a, std::string_view b, bool strict = false);

    const Angle& first() const { return a_; }
    const Angle& second() const { return b_; }
    bool has_endpoint(const Angle& t) const { return a_ == t || b_ == t; }
    bool shares_endpoint(const Leaf& o) const { return has_endpoint(o.a_) || has_endpoint(o.b_); }

    /// Length of the shorter subtended arc, in (0, 1/2].
    Rational length() const { return arc_length(a_, b_); }
    std::string str() const;

    friend bool operator==(const Leaf&, const Leaf&) = default;
    friend auto operator<=>(const Leaf& x, const Leaf& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    Angle a_;
    Angle b_;
};

struct DegeneratePoint {
    Angle point;
    friend bool operator==(const DegeneratePoint&, const DegeneratePoint&) = default;
};

using LeafImage = std::variant<Leaf, DegeneratePoint>;

/// Convex hull of two or more circle points, vertices kept in increasing order.
class Polygon {
public:
    explicit Polygon(std::vector<Angle> vertices);
    Polygon(const Leaf& l) : Polygon(std::vector<Angle>{l.first(), l.second()}) {}

    const std::vector<Angle>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    /// Sides between cyclically consecutive vertices; a digon has one side.
    std::vector<Leaf> sides() const;
    bool has_vertex(const Angle& t) const;
    std::string str() const;

    friend bool operator==(const Polygon&, const Polygon&) = default;
    friend auto operator<=>(const Polygon& x, const Polygon& y) { return x.v_ <=> y.v_; }

private:
    std::vector<Angle> v_;
};

Rational leaf_length(const Leaf& l);
LeafImage image_leaf(int d, const Leaf& l);
/// Length of the image of a leaf of length `len`.
Rational image_length(int d, const Rational& len);

/// Linked in the open disk; shared endpoints never cross.
bool crosses(const Leaf& l1, const Leaf& l2);
/// Sum of the two circle arcs separating disjoint leaves.
Rational leaf_distance(const Leaf& l1, const Leaf& l2);
bool is_critical(int d, const Leaf& l);

/// All sets of d pairwise disjoint leaves that map onto `target`.
std::vector<std::vector<Leaf>> sibling_collections(int d, const Leaf& target);

/// Vertex-wise image; nullopt when two vertices collide.
std::optional<Polygon> image_polygon(int d, const Polygon& p);
bool polygons_cross(const Polygon& p, const Polygon& q);
/// No shared vertex and no crossing sides.
bool polygons_disjoint(const Polygon& p, const Polygon& q);
bool polygon_crosses_leaf(const Polygon& p, const Leaf& l);

} // namespace lam
