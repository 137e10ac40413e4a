#pragma once
// Exact scalar types: rationals, angles in Q/Z, and torus coordinates.
// All arithmetic in the library is exact; floating point never appears.

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bq {

using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p", "-p" or "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Angle: element of Q/Z in additive notation, normalized to [0,1).
// 0 corresponds to the complex number 1; k/N to exp(2*pi*i*k/N).
class Angle {
public:
    Angle() : v_(0) {}
    explicit Angle(const Rat& r) : v_(normalize(r)) {}
    Angle(long long num, long long den) : v_(normalize(Rat(num, den))) {}

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.numerator() == 0; }
    long long order() const { return v_.numerator() == 0 ? 1 : v_.denominator(); }

    Angle operator+(const Angle& o) const { return Angle(v_ + o.v_); }
    Angle operator-(const Angle& o) const { return Angle(v_ - o.v_); }
    Angle operator-() const { return Angle(-v_); }
    Angle operator*(long long k) const { return Angle(v_ * k); }
    bool operator==(const Angle& o) const { return v_ == o.v_; }
    bool operator!=(const Angle& o) const { return v_ != o.v_; }
    bool operator<(const Angle& o) const { return v_ < o.v_; }

    std::string str() const { return to_string(v_); }

private:
    static Rat normalize(const Rat& r) {
        long long f = floor_div(r.numerator(), r.denominator());
        return r - Rat(f);
    }
    Rat v_;
};

inline Angle parse_angle(const std::string& s) { return Angle(parse_rat(s)); }

// One coordinate of a point on a complex torus (C^x)^N, in polar form:
// angle is the unitary part, radial the exponent of the absolute value.
struct Coord {
    Angle angle;
    Rat radial{0};

    bool operator==(const Coord& o) const { return angle == o.angle && radial == o.radial; }
    bool operator!=(const Coord& o) const { return !(*this == o); }
    bool operator<(const Coord& o) const {
        if (angle != o.angle) return angle < o.angle;
        return radial < o.radial;
    }
    Coord operator+(const Coord& o) const { return {angle + o.angle, radial + o.radial}; }
    Coord operator-(const Coord& o) const { return {angle - o.angle, radial - o.radial}; }
    bool is_unitary() const { return radial.numerator() == 0; }
    Coord unitary_part() const { return {angle, Rat(0)}; }
    std::string str() const { return "(" + angle.str() + "," + to_string(radial) + ")"; }
};

inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

} // namespace bq

template <>
struct std::hash<bq::Rat> {
    std::size_t operator()(const bq::Rat& r) const {
        return std::hash<long long>()(r.numerator()) * 1000003u ^
               std::hash<long long>()(r.denominator());
    }
};

template <>
struct std::hash<bq::Angle> {
    std::size_t operator()(const bq::Angle& a) const { return std::hash<bq::Rat>()(a.value()); }
};
