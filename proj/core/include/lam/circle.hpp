#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lam/errors.hpp"

namespace lam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// A rational point of the circle R/Z, stored as a reduced fraction in [0,1).
class Angle {
public:
    Angle() : num_(0), den_(1) {}

    /// (p mod q)/q in lowest terms. Throws DomainError when q == 0.
    static Angle from_fraction(const BigInt& p, const BigInt& q);
    static Angle from_rational(const Rational& r);
    /// Parses "p/q" (or "p"). With `strict`, the text must already be a
    /// reduced fraction in [0,1).
    static Angle parse(std::string_view text, bool strict = false);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational value() const { return Rational(num_, den_); }
    double to_double() const;
    std::string str() const;

    friend bool operator==(const Angle& a, const Angle& b) {
        if (a.small_ && b.small_) return a.n64_ == b.n64_ && a.d64_ == b.d64_;
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

    /// Adds a rational offset, wrapping mod 1.
    Angle shifted(const Rational& delta) const;

private:
    Angle(BigInt n, BigInt d);
    friend Angle sigma(int d, const Angle& t);
    friend std::vector<Angle> preimages(int d, const Angle& t);

    BigInt num_;
    BigInt den_;
    // Machine-word copy when the denominator is below 2^63.
    std::uint64_t n64_ = 0;
    std::uint64_t d64_ = 1;
    bool small_ = true;
};

Angle angle_from_fraction(const BigInt& p, const BigInt& q);

/// t -> d t mod 1.
Angle sigma(int d, const Angle& t);
Angle sigma_iter(int d, const Angle& t, int n);
/// The d points s with sigma(d, s) == t, counterclockwise from t/d.
std::vector<Angle> preimages(int d, const Angle& t);

/// Counterclockwise length from a to b, in [0,1).
Rational arc_length(const Angle& a, const Angle& b);

/// x lies strictly inside the counterclockwise open arc from a to b.
/// When a == b the arc is the whole circle minus that point.
bool in_open_arc(const Angle& a, const Angle& x, const Angle& b);

/// Counterclockwise from a, b is met strictly before c. Throws on repeats.
bool ccw_order(const Angle& a, const Angle& b, const Angle& c);

struct Arc {
    Angle start;
    Angle end;

    Rational length() const { return arc_length(start, end); }
    bool contains_half_open(const Angle& x) const;  // [start, end)
    bool contains_open(const Angle& x) const;       // (start, end)
    bool contains_closed(const Angle& x) const;     // [start, end]
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct DnaryExpansion {
    int base = 2;
    std::vector<int> preperiod;
    std::vector<int> period{0};

    /// "pre_period", e.g. "1_0" or "_01".
    std::string str() const;
    static DnaryExpansion parse(int base, std::string_view text);
    friend bool operator==(const DnaryExpansion&, const DnaryExpansion&) = default;
};

Angle angle_from_dnary(const DnaryExpansion& e);
DnaryExpansion angle_to_dnary(int d, const Angle& t);

/// All j/(d^n - 1), j = 0 .. d^n - 2, in increasing order.
std::vector<Angle> periodic_points(int d, int n);

/// Denominator coprime to d.
bool is_periodic(int d, const Angle& t);
/// Least n >= 1 with sigma^n(t) == t. Requires is_periodic.
int exact_period(int d, const Angle& t);
/// Least m with sigma^m(t) periodic.
int preperiod(int d, const Angle& t);

BigInt ipow(int base, int exp);
void require_degree(int d);

} // namespace lam
