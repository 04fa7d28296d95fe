#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lam/leaf.hpp"

namespace lam {

struct RotationNumber {
    int p = 0;
    int q = 1;

    RotationNumber() = default;
    RotationNumber(int num, int den);  // reduces
    bool is_zero() const { return p == 0; }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
    friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
};

struct OrbitInfo {
    int preperiod = 0;
    int vertex_period = 1;  // first return of every vertex
    int object_period = 1;  // first return of the vertex set
    std::vector<Polygon> orbit;  // P, sigma(P), ... up to the first repeat
};

enum class OrbitTag { Fixed, Rotational, RotationReturn, IdentityReturn, NotPeriodic };

struct OrbitClass {
    OrbitTag tag = OrbitTag::NotPeriodic;
    std::optional<RotationNumber> rotation;  // set for Rotational and RotationReturn

    std::string tag_name() const;
    friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

std::string to_string(OrbitTag t);
OrbitTag orbit_tag_from_string(const std::string& s);

/// nullopt when the orbit does not become periodic within max_iter steps.
/// Throws DomainError when two vertices collide under iteration.
std::optional<OrbitInfo> forward_orbit(int d, const Polygon& p, int max_iter = 4096);

/// Rotation number of S when sigma_d permutes S as a cyclic rotation.
std::optional<RotationNumber> is_rotational_set(int d, std::vector<Angle> s);
RotationNumber rotation_number(int d, const std::vector<Angle>& orbit);

/// Throws DomainError when orbit polygons cross each other.
OrbitClass classify(int d, const Polygon& p, int max_iter = 4096);

/// Number of distinct forward orbits met by the sides of a periodic polygon.
int side_orbit_count(int d, const Polygon& p);
bool kiwi_bound_check(int d, const Polygon& p, const OrbitClass& cls);

/// Least k with the k-th iterated image length >= 1/(d+1).
int growth_steps(int d, const Rational& len);

/// sigma_d preserves the circular order of the vertices of p.
bool preserves_order(int d, const Polygon& p);

} // namespace lam
