#include "lam/circle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace lam {

namespace {

BigInt parse_int(std::string_view s) {
    if (s.empty()) throw DomainError("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw DomainError("malformed integer '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

// gcd of a big value with a small positive int.
long small_gcd(const BigInt& big, long small) {
    long r = static_cast<long>(big % small);
    if (r < 0) r += small;
    return std::gcd(r, small);
}

char digit_char(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

} // namespace

void require_degree(int d) {
    if (d < 2) throw DomainError("degree must be >= 2, got " + std::to_string(d));
}

BigInt ipow(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q.is_zero()) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), q);
}

Angle::Angle(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    static const BigInt limit = BigInt(1) << 63;
    small_ = den_ < limit;
    if (small_) {
        n64_ = num_.convert_to<std::uint64_t>();
        d64_ = den_.convert_to<std::uint64_t>();
    }
}

Angle Angle::from_fraction(const BigInt& p, const BigInt& q) {
    if (q.is_zero()) throw DomainError("zero denominator");
    BigInt n = p, d = q;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    BigInt g = gcd(n, d);
    if (n.is_zero()) return Angle();
    return Angle(n / g, d / g);
}

Angle Angle::from_rational(const Rational& r) {
    return from_fraction(numerator(r), denominator(r));
}

Angle Angle::parse(std::string_view text, bool strict) {
    auto slash = text.find('/');
    BigInt p, q = 1;
    if (slash == std::string_view::npos) {
        p = parse_int(text);
    } else {
        p = parse_int(text.substr(0, slash));
        q = parse_int(text.substr(slash + 1));
    }
    if (q <= 0) throw DomainError("non-positive denominator in '" + std::string(text) + "'");
    if (strict) {
        if (p < 0 || p >= q) throw DomainError("angle out of range [0,1): '" + std::string(text) + "'");
        if (gcd(p, q) != 1 && !(p.is_zero() && q == 1))
            throw DomainError("unreduced fraction '" + std::string(text) + "'");
    }
    return from_fraction(p, q);
}

double Angle::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Angle::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.small_ && b.small_) {
        using wide = unsigned __int128;
        return wide(a.n64_) * b.d64_ <=> wide(b.n64_) * a.d64_;
    }
    if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
    BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    return lhs.compare(rhs) <=> 0;
}

Angle Angle::shifted(const Rational& delta) const {
    return from_rational(value() + delta);
}

Angle angle_from_fraction(const BigInt& p, const BigInt& q) { return Angle::from_fraction(p, q); }

Angle sigma(int d, const Angle& t) {
    require_degree(d);
    if (t.small_) {
        const std::uint64_t n = static_cast<std::uint64_t>((unsigned __int128)t.n64_ * unsigned(d) % t.d64_);
        if (n == 0) return Angle();
        const std::uint64_t g = std::gcd(n, std::gcd(t.d64_, std::uint64_t(d)));
        return Angle(BigInt(n / g), BigInt(t.d64_ / g));
    }
    BigInt n = (t.num_ * d) % t.den_;
    if (n.is_zero()) return Angle();
    // gcd(d*num mod den, den) divides gcd(d, den).
    long g0 = small_gcd(t.den_, d);
    if (g0 == 1) return Angle(std::move(n), t.den_);
    long g = small_gcd(n, g0);
    return Angle(n / g, t.den_ / g);
}

Angle sigma_iter(int d, const Angle& t, int n) {
    Angle r = t;
    for (int i = 0; i < n; ++i) r = sigma(d, r);
    return r;
}

std::vector<Angle> preimages(int d, const Angle& t) {
    require_degree(d);
    std::vector<Angle> out;
    out.reserve(d);
    BigInt den = t.den_ * d;
    BigInt n = t.num_;
    for (int j = 0; j < d; ++j) {
        // gcd(num + j den, d den) == gcd(num + j den, d).
        long g = small_gcd(n, d);
        if (n.is_zero())
            out.push_back(Angle());
        else if (g == 1)
            out.push_back(Angle(n, den));
        else
            out.push_back(Angle(n / g, den / g));
        n += t.den_;
    }
    return out;
}

Rational arc_length(const Angle& a, const Angle& b) {
    Rational r = b.value() - a.value();
    if (r < 0) r += 1;
    return r;
}

bool in_open_arc(const Angle& a, const Angle& x, const Angle& b) {
    auto ab = a <=> b;
    if (ab == 0) return x != a;
    if (ab < 0) return a < x && x < b;
    return x > a || x < b;
}

bool ccw_order(const Angle& a, const Angle& b, const Angle& c) {
    if (a == b || b == c || a == c) throw DomainError("ccw_order needs three distinct angles");
    return in_open_arc(a, b, c);
}

bool Arc::contains_half_open(const Angle& x) const {
    return x == start || (start != end && in_open_arc(start, x, end));
}

bool Arc::contains_open(const Angle& x) const {
    return start != end && in_open_arc(start, x, end);
}

bool Arc::contains_closed(const Angle& x) const {
    return x == start || x == end || contains_open(x);
}

std::string DnaryExpansion::str() const {
    std::string s;
    for (int v : preperiod) s += digit_char(v);
    s += '_';
    for (int v : period) s += digit_char(v);
    return s;
}

DnaryExpansion DnaryExpansion::parse(int base, std::string_view text) {
    require_degree(base);
    auto us = text.find('_');
    if (us == std::string_view::npos) throw DomainError("d-nary expansion needs '_' before the period");
    DnaryExpansion e;
    e.base = base;
    e.period.clear();
    auto read = [&](std::string_view part, std::vector<int>& into) {
        for (char c : part) {
            int v = digit_value(c);
            if (v < 0 || v >= base) throw DomainError(std::string("bad digit '") + c + "' in base " + std::to_string(base));
            into.push_back(v);
        }
    };
    read(text.substr(0, us), e.preperiod);
    read(text.substr(us + 1), e.period);
    if (e.period.empty()) throw DomainError("empty period block");
    return e;
}

Angle angle_from_dnary(const DnaryExpansion& e) {
    require_degree(e.base);
    if (e.period.empty()) throw DomainError("empty period block");
    auto check = [&](int v) {
        if (v < 0 || v >= e.base)
            throw DomainError("digit " + std::to_string(v) + " not valid in base " + std::to_string(e.base));
    };
    BigInt pre = 0, per = 0;
    for (int v : e.preperiod) {
        check(v);
        pre = pre * e.base + v;
    }
    for (int v : e.period) {
        check(v);
        per = per * e.base + v;
    }
    BigInt cyc = ipow(e.base, static_cast<int>(e.period.size())) - 1;
    BigInt scale = ipow(e.base, static_cast<int>(e.preperiod.size()));
    return Angle::from_fraction(pre * cyc + per, scale * cyc);
}

DnaryExpansion angle_to_dnary(int d, const Angle& t) {
    require_degree(d);
    DnaryExpansion e;
    e.base = d;
    e.period.clear();
    int m = preperiod(d, t);
    Angle u = sigma_iter(d, t, m);
    int len = u.is_zero() ? 1 : exact_period(d, u);
    // Long division: digit = floor(d * x).
    BigInt num = t.num(), den = t.den();
    for (int i = 0; i < m + len; ++i) {
        BigInt prod = num * d;
        int digit = static_cast<int>(prod / den);
        num = prod % den;
        (i < m ? e.preperiod : e.period).push_back(digit);
    }
    return e;
}

std::vector<Angle> periodic_points(int d, int n) {
    require_degree(d);
    if (n < 1) throw DomainError("period must be >= 1");
    BigInt q = ipow(d, n) - 1;
    std::vector<Angle> out;
    for (BigInt j = 0; j < q; ++j) out.push_back(Angle::from_fraction(j, q));
    return out;
}

bool is_periodic(int d, const Angle& t) {
    require_degree(d);
    return small_gcd(t.den(), d) == 1;
}

int exact_period(int d, const Angle& t) {
    if (!is_periodic(d, t)) throw DomainError(t.str() + " is not periodic under sigma_" + std::to_string(d));
    if (t.den() == 1) return 1;
    BigInt r = d % t.den();
    int n = 1;
    while (r != 1) {
        r = (r * d) % t.den();
        ++n;
    }
    return n;
}

int preperiod(int d, const Angle& t) {
    require_degree(d);
    BigInt q = t.den();
    int m = 0;
    // sigma^m(t) has denominator q / gcd(q, d^m); peel one gcd per step.
    while (true) {
        long g = small_gcd(q, d);
        if (g == 1) break;
        q /= g;
        ++m;
    }
    return m;
}

} // namespace lam
