#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lam/lamination.hpp"
#include "lam/portrait.hpp"

namespace lam {

struct PullbackResult {
    Lamination lamination;            // all sides, with the stage that produced them
    std::map<Polygon, int> elements;  // leaves and polygons with their stage
    CriticalPortrait portrait;
    std::vector<Polygon> generators;  // stage 0
    int depth = 0;
    std::vector<std::size_t> stages;  // leaf count after each stage
};

/// F together with the images of every element under every branch inverse.
std::vector<Polygon> pullback_step(const std::vector<Polygon>& f, const CriticalPortrait& c);

/// N stages of the pullback scheme starting from a forward invariant F.
/// Throws CrossingError naming the offending pair if leaves ever cross.
PullbackResult pullback_lamination(const std::vector<Polygon>& f, const CriticalPortrait& c, int n);

/// P, sigma(P), ... until the orbit closes. P must be periodic.
std::vector<Polygon> orbit_elements(int d, const Polygon& p);
std::vector<Leaf> orbit_leaves(int d, const Leaf& l);

/// The all-critical d-gon at the start of M's short arc when it is
/// compatible with the orbit of M, else the one at the end of that arc with
/// End-closed sectors.
std::optional<CriticalPortrait> mac_portrait(int d, const Leaf& m);
PullbackResult canonical_mac_lamination(int d, const Leaf& m, int n);

/// Sides of P whose outer arc is longer than 1/d, as (from, to) pairs in
/// counterclockwise chain order. Throws unless there are d-1 adjacent ones.
std::vector<std::pair<Angle, Angle>> scm_major_chain(int d, const Polygon& p);
/// One critical chord (b - 1/d, b) under each major side (a, b).
CriticalPortrait scm_portrait(int d, const Polygon& p);
PullbackResult canonical_scm_lamination(int d, const Polygon& p, int n);

} // namespace lam
