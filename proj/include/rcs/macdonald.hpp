#pragma once

// Macdonald basis construction and the derived polynomial families (norms,
// q,t-Littlewood-Richardson coefficients, Hall-Littlewood, q-Whittaker,
// modified Schur) plus the specializations entering the S-matrix and the
// topological locus.
//
// Construction: Gram-Schmidt over the monomial basis against qt_inner,
// restricted to the dominance down-ideal of the requested partition.  That
// restriction is exact: M_λ lies in span{m_µ : µ ⊴ λ} and orthogonalizing
// against that ideal's elements determines it.

#include "rcs/symfunc.hpp"

namespace rcs {

// M_λ in power-sum coordinates together with its norm ⟨M_λ, M_λ⟩
struct MacElem {
    Partition lambda;
    // dense over partitions_of(|λ|), index-aligned; zero entries allowed
    std::vector<RatFunc> p_coeffs;
    RatFunc norm;  // equals norm_G(λ)
};

// thread-safe global element cache
const MacElem& macdonald_elem(const Partition& lambda);

// the monic dominance-triangular qt_inner-orthogonal element, in p-basis
SymFunc macdonald_P(const Partition& lambda);

// cell product Π (1-q^{arm+1} t^{leg}) / (1-q^{arm} t^{leg+1}); the Arm/Leg
// reading calibrated so that norm_G(λ) = qt_inner(M_λ, M_λ)
RatFunc norm_G(const Partition& lambda);

// coefficient of M_A in M_R · M_B
RatFunc lr_coeff(const Partition& R, const Partition& B, const Partition& A);

// evaluation at the alphabet t^ρ q^A:
//   p_k -> Σ_{i≤l(A)} (t^{-i} q^{A_i})^k − t^{-k·l(A)}/(1−t^k)
RatFunc principal_pk(int k, const Partition& A);
RatFunc principal_spec(const SymFunc& f, const Partition& A);

SymFunc hall_littlewood(const Partition& lambda);   // M_λ at q=0
SymFunc q_whittaker(const Partition& lambda);       // M_λ{(t^k−1)p_k} at t=0, q→1/q
SymFunc modified_schur(const Partition& lambda);    // S_λ{(1−t^k)p_k}/(1−t)

// expansion of f in the target basis; exact, empty map for f = 0
std::map<Partition, RatFunc> expand_in_basis(const SymFunc& f, Basis target);

// rebuild a SymFunc from basis coefficients (p-canonical result)
SymFunc from_basis(Basis b, const std::map<Partition, RatFunc>& coeffs);

// p_k -> (1 − t^{−Nk})/(1 − t^{−k})
RatFunc topological_locus(const SymFunc& f, int N);

}  // namespace rcs
