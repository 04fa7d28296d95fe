#pragma once

#include <vector>

#include "lam/leaf.hpp"

namespace lam {

/// Which end of each sector interval owns a chord endpoint. Start gives
/// [a,b) sectors, End gives (a,b].
enum class SectorClosure { Start, End };

/// A component of the disk minus the portrait chords. Arcs are half-open,
/// so every circle point lies in exactly one sector.
struct CriticalSector {
    std::vector<Arc> arcs;
    std::vector<Leaf> chords;  // portrait chords on the boundary

    bool contains(const Angle& t, SectorClosure closure = SectorClosure::Start) const;
    Rational arc_total() const;
};

class CriticalPortrait {
public:
    /// Validates: every chord critical, no crossings, criticality >= d-1,
    /// and d sectors of arc length 1/d each.
    CriticalPortrait(int d, std::vector<Leaf> chords, SectorClosure closure = SectorClosure::Start);
    /// Sides of the all-critical d-gon with vertices v + j/d.
    static CriticalPortrait all_critical_polygon(int d, const Angle& v,
                                                 SectorClosure closure = SectorClosure::Start);

    int degree() const { return d_; }
    SectorClosure closure() const { return closure_; }
    const std::vector<Leaf>& chords() const { return chords_; }
    const std::vector<CriticalSector>& sectors() const { return sectors_; }
    /// Index into sectors() of the sector holding t, honoring closure().
    int sector_of(const Angle& t) const;
    int criticality() const;
    /// Chords grouped into connected components through shared endpoints.
    std::vector<std::vector<Leaf>> components() const;

private:
    int d_;
    SectorClosure closure_;
    std::vector<Leaf> chords_;
    std::vector<CriticalSector> sectors_;
    // Sorted chord endpoints; the interval between cuts_[i] and cuts_[i+1]
    // lies in sector owner_[i] (the last interval wraps through 0).
    std::vector<Angle> cuts_;
    std::vector<int> owner_;
};

struct BranchInverse {
    CriticalSector sector;
    int d;
    SectorClosure closure = SectorClosure::Start;
};

std::vector<CriticalSector> sectors(const CriticalPortrait& c);
std::vector<BranchInverse> branch_inverses(const CriticalPortrait& c);
/// The unique sigma_d-preimage of t inside the sector.
Angle branch_apply(const BranchInverse& tau, const Angle& t);

/// Every isolated chord and a side of every all-critical polygon lie on the
/// boundary of s.
bool is_maximal_sector(const CriticalPortrait& c, const CriticalSector& s);
/// No portrait chord crosses, coincides with, or is a diagonal of an element.
bool is_compatible(const CriticalPortrait& c, const std::vector<Polygon>& f);

} // namespace lam
