#pragma once

#include <optional>
#include <vector>

#include "lam/lamination.hpp"

namespace lam {

/// One boundary piece of a gap, oriented so the gap lies to its left.
/// An arc piece runs counterclockwise along the circle; a leaf piece runs
/// along a chord.
struct GapPiece {
    enum class Kind { Arc, Leaf };
    Kind kind;
    Angle from;
    Angle to;
    friend bool operator==(const GapPiece&, const GapPiece&) = default;
};

class Gap {
public:
    Gap() : whole_circle_(true) {}
    explicit Gap(std::vector<GapPiece> pieces) : pieces_(std::move(pieces)) {}

    bool whole_circle() const { return whole_circle_; }
    const std::vector<GapPiece>& pieces() const { return pieces_; }
    /// Boundary points in increasing order.
    std::vector<Angle> vertices() const;
    std::vector<Arc> arcs() const;
    std::vector<Leaf> boundary_leaves() const;
    /// Total length of circle arcs in the boundary.
    Rational arc_total() const;
    /// No circle arc of positive length in the boundary.
    bool is_polygon() const { return !whole_circle_ && arcs().empty(); }
    /// t lies in the closed circle trace of the gap.
    bool trace_contains(const Angle& t) const;

private:
    std::vector<GapPiece> pieces_;
    bool whole_circle_ = false;
};

/// Planar structure of a finite leaf set, reusable for many gap queries.
class GapFinder {
public:
    explicit GapFinder(const std::vector<Leaf>& leaves);
    explicit GapFinder(const Lamination& L) : GapFinder(L.leaf_list()) {}

    std::vector<Gap> all() const;
    /// The gap lying to the left of the chord traversed from `from` to `to`.
    Gap left_of(const Angle& from, const Angle& to) const;
    /// The gap whose trace contains t in the interior of a boundary arc.
    Gap containing(const Angle& t) const;

private:
    struct Step {
        bool is_arc;
        int from;
        int to;
    };
    Step next(const Step& s) const;
    Gap walk(Step start, std::vector<char>* used) const;
    int index_of(const Angle& t) const;

    std::vector<Angle> pts_;
    // For each point, neighbour indices sorted by counterclockwise distance.
    std::vector<std::vector<int>> nbr_;
};

std::vector<Gap> gaps(const Lamination& L);

/// 1 + the largest criticality of a non-crossing family of critical chords
/// with endpoints in the closed trace of g.
int gap_degree(int d, const Gap& g);

} // namespace lam
