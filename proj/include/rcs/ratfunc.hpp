#pragma once

// Reduced ratio of Laurent polynomials in q^(1/2), t^(1/2): the scalar field
// of the whole library.
//
// Canonical form invariants:
//   * denominator is a true polynomial (min exponent (0,0)), monomial factors
//     live in the numerator, which may be Laurent;
//   * numerator and denominator are coprime;
//   * jointly scaled so both have integer coefficients with no common integer
//     factor, and the denominator's leading coefficient (lex on (q,t)) is
//     positive.
// Equal values then have identical representations.

#include <optional>
#include <stdexcept>

#include "rcs/laurent.hpp"

namespace rcs {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct malformed_error : std::domain_error {
    using std::domain_error::domain_error;
};

class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(long v) : num_(LaurentPoly(v)), den_(LaurentPoly::one()) {}
    RatFunc(const Rat& v);
    explicit RatFunc(LaurentPoly n);
    RatFunc(LaurentPoly n, LaurentPoly d);  // normalizes; throws on zero denominator

    static RatFunc q(int power = 1) { return RatFunc(LaurentPoly::q(power)); }
    static RatFunc t(int power = 1) { return RatFunc(LaurentPoly::t(power)); }
    // monomial q^(eq/2) t^(et/2) in half-steps
    static RatFunc monomial(const Rat& c, int eq_half, int et_half) {
        return RatFunc(LaurentPoly::monomial(c, eq_half, et_half));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_monomial() const { return num_.is_monomial() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // exact value with q = q0, t = t0; rejects half exponents unless the
    // points have exact rational square roots
    Rat evaluate(const Rat& q0, const Rat& t0) const;
    // exact value with q^(1/2) = sq, t^(1/2) = st
    Rat evaluate_half(const Rat& sq, const Rat& st) const;

    // substitution images for the full variables q and/or t; see Subst below
    RatFunc substitute(const struct Subst& s) const;
    RatFunc subst_q0() const;      // q -> 0
    RatFunc subst_t0() const;      // t -> 0
    RatFunc subst_q_inv() const;   // q -> 1/q
    RatFunc subst_t_inv() const;   // t -> 1/t
    RatFunc subst_q_to_t() const;  // q -> t

    size_t hash() const { return num_.hash() * 1000003u + den_.hash(); }

private:
    LaurentPoly num_, den_;
    void reduce();
    // for results already known to be num/den-coprime: only strips the
    // denominator's monomial factor and renormalizes content and sign
    struct coprime_tag {};
    RatFunc(LaurentPoly n, LaurentPoly d, coprime_tag);
    void normalize_units();
};

// substitution images for the full variables q and/or t
struct Subst {
    std::optional<RatFunc> q;
    std::optional<RatFunc> t;
};

}  // namespace rcs
