#pragma once

// Word-sized prime-field arithmetic and dense univariate polynomials over
// Z/p, used by the polynomial GCD fast path and the modular linear solver.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace rcs::modp {

// primes just under 2^62 so sums of a few products stay in __int128 range
inline constexpr uint64_t kPrimes[] = {
    4611686018427387847ull, 4611686018427387817ull, 4611686018427387787ull,
    4611686018427387761ull, 4611686018427387731ull, 4611686018427387617ull,
    4611686018427387559ull, 4611686018427387547ull, 4611686018427387539ull,
    4611686018427387521ull, 4611686018427387499ull, 4611686018427387439ull,
};

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);

// a mod p for a rational; fails (returns false) if denominator is 0 mod p
bool rat_mod(const mpq_class& a, uint64_t p, uint64_t& out);

// dense univariate polynomial over Z/p, coefficient of x^i at index i
using Poly = std::vector<uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly add(const Poly& a, const Poly& b, uint64_t p);
Poly sub(const Poly& a, const Poly& b, uint64_t p);
Poly mul(const Poly& a, const Poly& b, uint64_t p);
Poly mul_scalar(const Poly& a, uint64_t c, uint64_t p);
// division with remainder; q and r outputs
void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& q, Poly& r);
Poly gcd(Poly a, Poly b, uint64_t p);  // monic
uint64_t eval(const Poly& f, uint64_t x, uint64_t p);
Poly make_monic(Poly f, uint64_t p);

// Lagrange interpolation through (xs[i], ys[i]); xs distinct mod p.
Poly interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys, uint64_t p);

// Cauchy (rational-function) interpolation: finds num/den with
// deg(num) <= dn, deg(den) <= dd, dn + dd < xs.size(), den monic, matching
// all sample points.  Returns false if no such pair exists or den vanishes
// at a sample point.
bool rational_interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys,
                          int dn, int dd, uint64_t p, Poly& num, Poly& den);

}  // namespace rcs::modp
