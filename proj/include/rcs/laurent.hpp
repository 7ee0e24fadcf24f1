#pragma once

// Sparse Laurent polynomials in q^(1/2), t^(1/2) over arbitrary-precision
// rationals.  Exponents count half-steps: the monomial stored with key
// (eq, et) is q^(eq/2) t^(et/2).  Terms are kept sorted by key and never
// hold a zero coefficient, so equal polynomials have identical term lists.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rcs {

using Rat = mpq_class;
using Int = mpz_class;

// Packed exponent pair.  Lexicographic comparison on (eq, et).
struct ExpPair {
    int32_t eq = 0;  // half-steps of q
    int32_t et = 0;  // half-steps of t

    friend bool operator==(ExpPair a, ExpPair b) { return a.eq == b.eq && a.et == b.et; }
    friend bool operator<(ExpPair a, ExpPair b) {
        return a.eq != b.eq ? a.eq < b.eq : a.et < b.et;
    }
    ExpPair operator+(ExpPair o) const { return {eq + o.eq, et + o.et}; }
    ExpPair operator-(ExpPair o) const { return {eq - o.eq, et - o.et}; }
};

struct Term {
    ExpPair e;
    Rat c;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& constant);
    explicit LaurentPoly(long constant);

    static LaurentPoly monomial(const Rat& c, int eq_half, int et_half);
    // q^k, t^k with k in full steps
    static LaurentPoly q(int power = 1) { return monomial(1, 2 * power, 0); }
    static LaurentPoly t(int power = 1) { return monomial(1, 0, 2 * power); }
    static LaurentPoly one() { return LaurentPoly(Rat(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // nonzero polynomials only
    const Term& leading() const { return terms_.back(); }   // max key
    const Term& trailing() const { return terms_.front(); } // min key

    ExpPair min_exp() const;  // componentwise minimum over terms
    ExpPair max_exp() const;

    bool has_half_q() const;  // any odd eq
    bool has_half_t() const;

    Rat coeff(ExpPair e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o);

    void mul_monomial(const Rat& c, ExpPair e);
    void mul_scalar(const Rat& c);
    LaurentPoly shifted(ExpPair e) const;  // multiply by q^(eq/2) t^(et/2)

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Rational scalar r with r * this integral and integer-content-free;
    // zero polynomial reports content 1.
    Rat content() const;

    // Exact division; nullopt if not divisible.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    // Value at q^(1/2) = sq, t^(1/2) = st (always exact).
    Rat eval_half(const Rat& sq, const Rat& st) const;

    // Substitute q -> given half-step images; see RatFunc::substitute for the
    // public entry point.  Images are (numerator poly is fine since callers
    // pass monomial-like values); kept internal-simple here: full generic
    // substitution lives in ratfunc.cpp.

    size_t hash() const;
    std::string debug_string() const;  // crude dump for diagnostics

    // internal: construct from sorted, zero-free term vector
    static LaurentPoly from_sorted(std::vector<Term> ts);

private:
    std::vector<Term> terms_;  // sorted by key, no zero coefficients
    void normalize_sorted();   // sort + combine + strip zeros
    friend class LaurentBuilder;
};

// Accumulator that tolerates unsorted/duplicate insertion.
class LaurentBuilder {
public:
    void add(ExpPair e, const Rat& c) { ts_.push_back({e, c}); }
    void add_term(const Term& t) { ts_.push_back(t); }
    LaurentPoly build();

private:
    std::vector<Term> ts_;
};

}  // namespace rcs
