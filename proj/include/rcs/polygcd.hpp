#pragma once

// GCD of bivariate (Laurent) polynomials over Q.
//
// The reduction workload in this project is dominated by numerators and
// denominators that are products of small cyclotomic-like binomials, so the
// driver first tries cheap certificates (monomials, equality, coprimality by
// a single modular evaluation) and only then runs a Brown-style modular GCD
// with CRT lifting and exact-division verification.  A primitive-PRS
// subresultant path is kept as the reference; the fast path must and does
// agree with it (see tests).

#include "rcs/laurent.hpp"

namespace rcs {

// gcd of the polynomial parts (monomial factors stripped), integer-primitive,
// positive leading coefficient.  gcd(0, b) = normalized b.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// primitive-part Euclid in q over Q(t); reference implementation
LaurentPoly poly_gcd_reference(const LaurentPoly& a, const LaurentPoly& b);

// strips monomial factor and rational content; positive leading coefficient
LaurentPoly primitive_part(const LaurentPoly& a);

}  // namespace rcs
