#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace torinv {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int floor_div(const Int& a, const Int& b) {
    // b != 0; round toward -infinity regardless of signs.
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_of(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// Representative of x mod Z^1 in [0,1).
inline Rat mod1(const Rat& x) {
    return x - Rat(floor_of(x));
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

QVec to_qvec(const ZVec& v);
ZVec floor_vec(const QVec& v);
QVec mod1_vec(const QVec& v);

inline QVec to_qvec(const ZVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline ZVec floor_vec(const QVec& v) {
    ZVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = floor_of(v[i]);
    return out;
}

inline QVec mod1_vec(const QVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = mod1(v[i]);
    return out;
}

} // namespace torinv
