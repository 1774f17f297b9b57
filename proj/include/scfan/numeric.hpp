#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace scfan {

// Arbitrary-precision integers/rationals throughout; unimodular transforms
// blow up fixed-width entries even on small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor division (rounds toward minus infinity); b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_zero(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

// Divide out the gcd of the coordinates; the zero vector stays zero.
inline Vec primitive(Vec v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const Vec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scale(const Int& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec negate(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

// a*x + b*y componentwise.
inline Vec combine(const Int& a, const Vec& x, const Int& b, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
}

inline QVec to_qvec(const Vec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Clears denominators and divides out the content; zero stays zero.
inline Vec primitive_from_rational(const QVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        Int den = boost::multiprecision::denominator(x);
        lcm = lcm / gcd_int(lcm, den) * den;
    }
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        r[i] = boost::multiprecision::numerator(scaled);
    }
    return primitive(std::move(r));
}

inline std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace scfan
