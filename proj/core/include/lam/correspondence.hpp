#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lam/gaps.hpp"
#include "lam/orbits.hpp"
#include "lam/pullback.hpp"

namespace lam {

/// A leaf with its d-1 translates by j/d and the all-critical d-gon at the
/// start of its short arc.
struct SiblingPortrait {
    int d = 2;
    Leaf major;
    std::vector<Leaf> siblings;
    std::optional<CriticalPortrait> attachment;
};

/// Region between a full sibling collection, described by its short circle
/// arcs (those joining endpoints of different siblings, shorter than 1/(2d)).
struct CentralStrip {
    std::vector<Leaf> bounding_leaves;
    std::vector<Arc> arcs;
    Rational eta;         // longest strip arc
    bool narrow = false;  // eta < 1/(d(d+1))

    /// Index of the strip arc holding both endpoints of l, or -1.
    int single_component(const Leaf& l) const;
    /// Both endpoints lie in strip arcs and l is not a bounding leaf.
    bool reenters(const Leaf& l) const;
};

struct Endcap {
    Arc interval;
    bool adjacent_to_major = false;
};

struct MacData {
    Leaf major;
    Leaf minor;
    int period = 1;  // first return of the endpoints of the major
    OrbitClass orbit_class;
    std::vector<Angle> coroots;
    std::vector<std::string> diagnostics;
};

struct ScmData {
    Polygon polygon;
    std::vector<Leaf> majors;  // chain order, counterclockwise
    Leaf chain_chord;          // joins the free ends of the major chain
};

struct CslReport {
    Rational eta;
    bool narrow = false;
    bool clause1 = true;
    bool clause2 = true;
    bool clause3 = true;
    std::vector<int> reentries;         // steps j with a re-entry into the strip
    std::vector<int> single_component;  // steps j with both endpoints in one arc
    bool ok() const { return clause1 && clause2 && clause3; }
};

struct FirstReturn {
    int time = 0;
    int degree = 0;
};

SiblingPortrait sibling_portrait(int d, const Leaf& m);
CentralStrip strip_from_siblings(int d, const std::vector<Leaf>& siblings);
CentralStrip central_strip(const SiblingPortrait& sp);
std::vector<Endcap> endcaps(const SiblingPortrait& sp);

/// Endpoint-metric distance from l to the nearest critical chord.
Rational distance_to_critical(int d, const Leaf& l);
/// Leaves shorter than 1/d use the translate siblings; longer ones the unique
/// full sibling collection through them.
CslReport csl_check(int d, const Leaf& l, int max_iter = 64);
/// Same, with the strip of a given full sibling collection through l.
CslReport csl_check(int d, const Leaf& l, const std::vector<Leaf>& collection, int max_iter = 64);

std::optional<MacData> is_mac(int d, const Leaf& l);
std::vector<Angle> coroots(int d, const MacData& mac);

ScmData mac_to_scm(int d, const MacData& mac);
MacData scm_to_mac(int d, const ScmData& scm);
MacData scm_to_mac(int d, const Polygon& p);
std::optional<ScmData> is_scm(int d, const Polygon& p);

/// The gap bounded by the major on the side of its long arc.
Gap central_gap(const Lamination& l, const Leaf& major);

/// A (MAC lamination) and B (SCM lamination) agree up to depth n once the
/// grand orbit of the SCM polygon's other sides is removed from B.
bool lamination_equal_at_depth(const PullbackResult& a, const PullbackResult& b, int n);

FirstReturn first_return(int d, const Gap& g, int max_iter = 64);

} // namespace lam
