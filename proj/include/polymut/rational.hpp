#ifndef POLYMUT_RATIONAL_HPP
#define POLYMUT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace polymut {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with positive denominator by the backend; all arithmetic is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Serialized as "p/q", or just "p" when the denominator is 1.
inline std::string show_rat(const Rat& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: " + s); };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash == std::string::npos ? s.size() : slash);
    if (num.empty()) bad();
    try {
        if (slash == std::string::npos) return Rat(Int(num));
        std::string den = s.substr(slash + 1);
        if (den.empty()) bad();
        Int p(num);
        Int q(den);
        if (q == 0) bad();
        return Rat(p) / q;
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0);  // unreachable
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

// Exact dot products; sizes must agree.
inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += b[i] * a[i];
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace polymut

#endif
