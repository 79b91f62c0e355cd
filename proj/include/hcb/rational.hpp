#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hcb/limits.hpp"

namespace hcb {

// Exact base field.  cpp_rational keeps gcd(|p|,q)=1 and q>0 canonically,
// so equality of values is equality of representations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p/q" with q>0 and gcd 1; plain "p" when q=1.
std::string rat_str(const Rat& r);

// Parses the grammar above (also accepts unreduced "2/4").  Throws
// InputError on syntax errors or zero denominator.
Rat parse_rat(const std::string& s);

// Prime field scalar for the optional fast path of the linear algebra
// kernels.  P must be prime; arithmetic is mod P with exact division.
template <std::uint32_t P>
struct Fp {
    std::uint32_t v = 0;

    Fp() = default;
    Fp(long long x) {
        long long m = x % static_cast<long long>(P);
        if (m < 0) m += P;
        v = static_cast<std::uint32_t>(m);
    }

    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp operator-() const { return Fp(v == 0 ? 0 : static_cast<long long>(P - v)); }

    friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) + b.v); }
    friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>(a.v) + P - b.v); }
    friend Fp operator*(Fp a, Fp b) {
        return Fp(static_cast<long long>(static_cast<std::uint64_t>(a.v) * b.v % P));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    Fp inv() const {
        if (v == 0) throw Error("Fp: division by zero");
        // Fermat: v^(P-2)
        std::uint64_t base = v, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return Fp(static_cast<long long>(acc));
    }
};

}  // namespace hcb
