#pragma once

// Graded symmetric functions over the rational-function field.  The internal
// canonical basis is power sums: the paper's specializations and rescalings
// are all diagonal there.  Monomial and Schur transitions are cached per
// homogeneous degree with rational (constant) matrices.

#include <map>
#include <optional>

#include "rcs/partition.hpp"
#include "rcs/ratfunc.hpp"

namespace rcs {

enum class Basis { p, m, s, macdonald, hl, qwhittaker, mschur };

// Coefficient map in a declared basis.  Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc() : basis_(Basis::p) {}
    explicit SymFunc(Basis b) : basis_(b) {}
    SymFunc(Basis b, std::map<Partition, RatFunc> coeffs);

    static SymFunc p_monomial(const Partition& mu, RatFunc c = RatFunc(1));
    static SymFunc constant(const RatFunc& c);

    Basis basis() const { return basis_; }
    const std::map<Partition, RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree_bound() const;  // max |λ| present
    RatFunc coeff(const Partition& mu) const;

    void set_coeff(const Partition& mu, RatFunc c);
    void add_coeff(const Partition& mu, const RatFunc& c);

    SymFunc& operator+=(const SymFunc& o);  // same basis required
    SymFunc& operator-=(const SymFunc& o);
    SymFunc operator*(const RatFunc& c) const;
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

    // equality of elements: compare power-sum canonical forms
    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

private:
    Basis basis_;
    std::map<Partition, RatFunc> coeffs_;
};

// conversion to the power-sum canonical form (p, m, s handled here; the
// Macdonald-family bases are registered by the macdonald module)
SymFunc to_canonical(const SymFunc& f);

// product; result in canonical basis
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// stable (q,t) inner product: <p_λ, p_μ> = δ z_λ Π (1-q^{λᵢ})/(1-t^{λᵢ})
RatFunc qt_inner(const SymFunc& f, const SymFunc& g);

// diagonal power-sum rescaling p_k -> factor(k) p_k
SymFunc scale_power_sums(const SymFunc& f, const std::function<RatFunc(int)>& factor);

// Schur function in canonical basis: s_λ = Σ_μ χ^λ_μ / z_μ p_μ
SymFunc schur(const Partition& lambda);

// z_λ = Π j^{m_j} m_j!
Rat z_factor(const Partition& lambda);

// symmetric-group character χ^λ_μ by Murnaghan–Nakayama, memoized
Rat sym_character(const Partition& lambda, const Partition& mu);

// coefficient matrix rows: p_μ = Σ_λ P2M[μ][λ] m_λ (integer entries), and the
// inverse transition m_λ = Σ_μ M2P[λ][μ] p_μ (rational entries); indices into
// partitions_of(d)
const std::vector<std::vector<Rat>>& p_to_m_matrix(int d);
const std::vector<std::vector<Rat>>& m_to_p_matrix(int d);

// index of a partition within partitions_of(|λ|)
int partition_index(const Partition& lambda);

// per-part weight of the qt inner product: z_λ Π (1-q^{λᵢ})/(1-t^{λᵢ})
RatFunc qt_weight(const Partition& lambda);

}  // namespace rcs
