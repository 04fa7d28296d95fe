#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lam/leaf.hpp"

namespace lam::test {

inline Angle A(const char* s) { return Angle::parse(s, true); }
inline Leaf L(const char* a, const char* b) { return Leaf(A(a), A(b)); }
inline Polygon P(std::initializer_list<const char*> vs) {
    std::vector<Angle> v;
    for (auto s : vs) v.push_back(A(s));
    return Polygon(v);
}
inline Rational Q(long p, long q) { return Rational(p, q); }

} // namespace lam::test
