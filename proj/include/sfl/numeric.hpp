// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals, floor/ceil division on machine integers, and exact
// comparisons of counts against bounds of the form mult * 2^(a/b).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sfl {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division for possibly negative numerators (C++ / truncates).
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

inline BigInt ipow(BigInt base, unsigned long long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt pow2(unsigned long long e) { return BigInt(1) << e; }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

inline double log2_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log2 of non-positive value");
    // Split off high bits so the double conversion stays exact.
    BigInt x = v;
    long long shift = 0;
    while (x >> 900 != 0) {
        x >>= 64;
        shift += 64;
    }
    return std::log2(x.convert_to<double>()) + static_cast<double>(shift);
}

// Exact test of  count <= mult * 2^expo  with rational mult > 0 and expo.
// Cross-multiplied in integers; no floating point involved.
inline bool leq_mult_pow2(const BigInt& count, const Rat& mult, const Rat& expo) {
    if (count <= 0) return true;
    BigInt eb = denominator(expo);
    unsigned long long b = eb.convert_to<unsigned long long>();
    BigInt a = numerator(expo);
    BigInt mn = numerator(mult), md = denominator(mult);
    // count^b * md^b <= mn^b * 2^a   (2^a moved across when a < 0)
    BigInt lhs = ipow(count, b) * ipow(md, b);
    BigInt rhs = ipow(mn, b);
    if (a >= 0)
        rhs <<= a.convert_to<unsigned long long>();
    else
        lhs <<= (-a).convert_to<unsigned long long>();
    return lhs <= rhs;
}

inline bool geq_pow2(const BigInt& count, const Rat& expo) {
    if (count <= 0) return false;  // 2^expo > 0 always
    BigInt eb = denominator(expo);
    unsigned long long b = eb.convert_to<unsigned long long>();
    BigInt a = numerator(expo);
    BigInt lhs = ipow(count, b);
    BigInt rhs = 1;
    if (a >= 0)
        rhs <<= a.convert_to<unsigned long long>();
    else
        lhs <<= (-a).convert_to<unsigned long long>();
    return lhs >= rhs;
}

// A rational bound plus an integer slack term, value = fraction + additive.
// Carries closed-form bounds exactly (the structure-bound cases, C_k).
struct RationalBound {
    Rat fraction;
    long long additive = 0;

    Rat value() const { return fraction + additive; }
    BigInt num() const { return numerator(value()); }
    BigInt den() const { return denominator(value()); }
};

std::string to_string(const Rat& r);

}  // namespace sfl
