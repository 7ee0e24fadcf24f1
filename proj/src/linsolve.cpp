#include "rcs/linsolve.hpp"

#include <algorithm>
#include <map>

#include "rcs/modp.hpp"

namespace rcs {

std::vector<RatFunc> solve_exact(const Matrix& A0, const std::vector<RatFunc>& b0) {
    int n = static_cast<int>(A0.size());
    Matrix A = A0;
    std::vector<RatFunc> b = b0;

    auto complexity = [](const RatFunc& f) {
        return f.num().term_count() + f.den().term_count();
    };

    for (int col = 0; col < n; ++col) {
        int piv = -1;
        size_t best = SIZE_MAX;
        for (int r = col; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            size_t c = complexity(A[r][col]);
            if (c < best) {
                best = c;
                piv = r;
            }
        }
        if (piv < 0) throw singular_matrix_error("singular exact system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            RatFunc f = A[r][col] / A[col][col];
            A[r][col] = RatFunc(0);
            for (int c = col + 1; c < n; ++c)
                if (!A[col][c].is_zero()) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<RatFunc> x(n);
    for (int r = n - 1; r >= 0; --r) {
        RatFunc acc = b[r];
        for (int c = r + 1; c < n; ++c)
            if (!A[r][c].is_zero()) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

bool solve_modp(std::vector<std::vector<uint64_t>> A, std::vector<std::vector<uint64_t>> B,
                uint64_t p, std::vector<std::vector<uint64_t>>& X) {
    int n = static_cast<int>(A.size());
    int nrhs = static_cast<int>(B.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(A[col], A[piv]);
        for (int k = 0; k < nrhs; ++k) std::swap(B[k][col], B[k][piv]);
        uint64_t inv = modp::inv(A[col][col], p);
        for (int c = col; c < n; ++c) A[col][c] = modp::mul(A[col][c], inv, p);
        for (int k = 0; k < nrhs; ++k) B[k][col] = modp::mul(B[k][col], inv, p);
        for (int r = col + 1; r < n; ++r) {
            uint64_t f = A[r][col];
            if (f == 0) continue;
            for (int c = col; c < n; ++c)
                A[r][c] = modp::sub(A[r][c], modp::mul(f, A[col][c], p), p);
            for (int k = 0; k < nrhs; ++k)
                B[k][r] = modp::sub(B[k][r], modp::mul(f, B[k][col], p), p);
        }
    }
    X.assign(nrhs, std::vector<uint64_t>(n, 0));
    for (int k = 0; k < nrhs; ++k) {
        for (int r = n - 1; r >= 0; --r) {
            uint64_t acc = B[k][r];
            for (int c = r + 1; c < n; ++c)
                acc = modp::sub(acc, modp::mul(A[r][c], X[k][c], p), p);
            X[k][r] = acc;
        }
    }
    return true;
}

namespace {

// bivariate polynomial over Z_p in the half-step variables (u, v) = (q^½, t^½):
// coeff[i] is the Z_p[v] coefficient of u^i
struct BiModPoly {
    std::vector<modp::Poly> coeff;
    bool zero() const {
        for (const auto& c : coeff)
            if (!c.empty()) return false;
        return true;
    }
};

// rational reconstruction: residue r mod M -> a/b with |a|,|b| <= sqrt(M/2)
bool rat_reconstruct(const mpz_class& r, const mpz_class& M, mpq_class& out) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(M / 2).get_mpz_t());
    mpz_class r0 = M, r1 = r % M, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0) return false;
    if (s1 < 0) {
        s1 = -s1;
        r1 = -r1;
    }
    if (s1 > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g > 1) {
        r1 /= g;
        s1 /= g;
    }
    out = mpq_class(r1, s1);
    out.canonicalize();
    return true;
}

// normalize so the leading (max u, then max v) denominator coefficient is 1
bool normalize_pair(BiModPoly& num, BiModPoly& den, uint64_t p) {
    int du = -1;
    for (int i = static_cast<int>(den.coeff.size()) - 1; i >= 0; --i)
        if (!den.coeff[i].empty()) {
            du = i;
            break;
        }
    if (du < 0) return false;
    uint64_t inv = modp::inv(den.coeff[du].back(), p);
    for (auto& c : den.coeff) c = modp::mul_scalar(c, inv, p);
    for (auto& c : num.coeff) c = modp::mul_scalar(c, inv, p);
    return true;
}

struct MonKey {
    int u, v;
    bool operator<(const MonKey& o) const { return u != o.u ? u < o.u : v < o.v; }
};

void collect_terms(const BiModPoly& f, std::map<MonKey, uint64_t>& out) {
    for (int i = 0; i < static_cast<int>(f.coeff.size()); ++i)
        for (int j = 0; j < static_cast<int>(f.coeff[i].size()); ++j)
            if (f.coeff[i][j]) out[{i, j}] = f.coeff[i][j];
}

uint64_t eval_laurent_modp(const LaurentPoly& lp, uint64_t u, uint64_t v, uint64_t p, bool& ok) {
    uint64_t acc = 0;
    for (const auto& tm : lp.terms()) {
        uint64_t c;
        if (!modp::rat_mod(tm.c, p, c)) {
            ok = false;
            return 0;
        }
        uint64_t pu = tm.e.eq >= 0 ? modp::pow(u, tm.e.eq, p)
                                   : modp::inv(modp::pow(u, -tm.e.eq, p), p);
        uint64_t pv = tm.e.et >= 0 ? modp::pow(v, tm.e.et, p)
                                   : modp::inv(modp::pow(v, -tm.e.et, p), p);
        acc = modp::add(acc, modp::mul(c, modp::mul(pu, pv, p), p), p);
    }
    return acc;
}

// one prime's reconstruction of all components; empty return means failure
// (usually a too-small degree budget)
std::vector<std::pair<BiModPoly, BiModPoly>> reconstruct_one_prime(const NumericSystem& sys,
                                                                   uint64_t p, int D) {
    const int n = sys.n, nrhs = sys.nrhs;
    const int npts = 2 * D + 2;
    const int extra_rows = 8;

    struct URow {
        uint64_t u;
        std::vector<modp::Poly> num, den;  // per component, den monic in v
    };
    std::vector<URow> urows;
    uint64_t ucand = 1;
    int u_misses = 0;
    while (static_cast<int>(urows.size()) < npts + extra_rows && u_misses < 8 * npts + 256) {
        ++ucand;
        uint64_t u = ucand;
        std::vector<uint64_t> vs;
        std::vector<std::vector<std::vector<uint64_t>>> xs;  // [sample][rhs][comp]
        uint64_t vcand = 1;
        int v_misses = 0;
        bool fail_u = false;
        while (static_cast<int>(vs.size()) < npts) {
            ++vcand;
            if (v_misses > 8 * npts + 256) {
                fail_u = true;
                break;
            }
            uint64_t v = vcand;
            std::vector<std::vector<uint64_t>> A, B, X;
            if (!sys.fill(p, u, v, A, B) || !solve_modp(std::move(A), std::move(B), p, X)) {
                ++v_misses;
                continue;
            }
            vs.push_back(v);
            xs.push_back(std::move(X));
        }
        if (fail_u) {
            ++u_misses;
            continue;
        }
        URow row;
        row.u = u;
        row.num.resize(nrhs * n);
        row.den.resize(nrhs * n);
        bool ok = true;
        for (int ci = 0; ci < nrhs * n && ok; ++ci) {
            std::vector<uint64_t> ys(vs.size());
            for (size_t k = 0; k < vs.size(); ++k) ys[k] = xs[k][ci / n][ci % n];
            ok = modp::rational_interpolate(vs, ys, D, D, p, row.num[ci], row.den[ci]);
        }
        if (!ok) {
            ++u_misses;
            continue;
        }
        urows.push_back(std::move(row));
    }
    if (static_cast<int>(urows.size()) < npts) return {};

    std::vector<std::pair<BiModPoly, BiModPoly>> comps(nrhs * n);
    for (int ci = 0; ci < nrhs * n; ++ci) {
        // align on the modal denominator v-degree; other rows hit accidental
        // cancellations and are dropped
        std::map<int, int> freq;
        for (const auto& row : urows) ++freq[modp::degree(row.den[ci])];
        int dden = -2, fbest = -1;
        for (auto [dg, f] : freq)
            if (f > fbest) {
                fbest = f;
                dden = dg;
            }
        std::vector<const URow*> rows;
        for (const auto& row : urows)
            if (modp::degree(row.den[ci]) == dden) rows.push_back(&row);
        if (static_cast<int>(rows.size()) < npts) return {};
        rows.resize(npts);
        int dnum = -1;
        for (const URow* row : rows) dnum = std::max(dnum, modp::degree(row->num[ci]));

        std::vector<uint64_t> us(rows.size());
        for (size_t k = 0; k < rows.size(); ++k) us[k] = rows[k]->u;

        // each v-coefficient of num and den is a rational function of u with
        // a shared true denominator; lift them and merge over the lcm
        std::vector<modp::Poly> cn_den(dden + 1), cd_den(dden + 1);
        std::vector<modp::Poly> cn_num(std::max(dnum + 1, 0)), cd_num(std::max(dnum + 1, 0));
        auto lift = [&](bool is_den, int j, modp::Poly& cn, modp::Poly& cd) {
            std::vector<uint64_t> ys(rows.size());
            bool nonzero = false;
            for (size_t k = 0; k < rows.size(); ++k) {
                const modp::Poly& f = is_den ? rows[k]->den[ci] : rows[k]->num[ci];
                ys[k] = j < static_cast<int>(f.size()) ? f[j] : 0;
                nonzero |= ys[k] != 0;
            }
            if (!nonzero) {
                cn.clear();
                cd = {1};
                return true;
            }
            return modp::rational_interpolate(us, ys, D, D, p, cn, cd);
        };
        for (int j = 0; j <= dden; ++j)
            if (!lift(true, j, cn_den[j], cd_den[j])) return {};
        for (int j = 0; j <= dnum; ++j)
            if (!lift(false, j, cn_num[j], cd_num[j])) return {};

        modp::Poly L{1};
        auto lcm_into = [&](const modp::Poly& d) {
            if (d.empty()) return;
            modp::Poly g = modp::gcd(L, d, p);
            modp::Poly q, r;
            modp::divmod(d, g, p, q, r);
            L = modp::mul(L, q, p);
        };
        for (auto& d : cd_den) lcm_into(d);
        for (auto& d : cd_num) lcm_into(d);

        BiModPoly bn, bd;
        auto place = [&](std::vector<modp::Poly>& cns, std::vector<modp::Poly>& cds,
                         BiModPoly& out) {
            for (int j = 0; j < static_cast<int>(cns.size()); ++j) {
                if (cns[j].empty()) continue;
                modp::Poly q, r;
                modp::divmod(L, cds[j], p, q, r);
                modp::Poly cu = modp::mul(cns[j], q, p);
                for (int iu = 0; iu <= modp::degree(cu); ++iu) {
                    if (cu[iu] == 0) continue;
                    if (static_cast<size_t>(iu) >= out.coeff.size()) out.coeff.resize(iu + 1);
                    auto& vp = out.coeff[iu];
                    if (static_cast<size_t>(j) >= vp.size()) vp.resize(j + 1, 0);
                    vp[j] = cu[iu];
                }
            }
        };
        place(cn_den, cd_den, bd);
        place(cn_num, cd_num, bn);
        if (bd.zero()) return {};
        if (!normalize_pair(bn, bd, p)) return {};
        comps[ci] = {std::move(bn), std::move(bd)};
    }
    return comps;
}

}  // namespace

std::vector<std::vector<RatFunc>> solve_modular(const NumericSystem& sys, int deg_hint) {
    const int n = sys.n, nrhs = sys.nrhs;
    if (n == 0) return std::vector<std::vector<RatFunc>>(nrhs);

    for (int D = std::max(deg_hint, 8); D <= 512; D *= 2) {
        std::vector<std::vector<std::pair<BiModPoly, BiModPoly>>> per_prime;
        std::vector<uint64_t> primes_used;
        bool degree_too_small = false;

        for (size_t pi = 0; pi < 3 && !degree_too_small; ++pi) {
            uint64_t p = modp::kPrimes[pi];
            auto comps = reconstruct_one_prime(sys, p, D);
            if (comps.empty()) {
                degree_too_small = true;
                break;
            }
            per_prime.push_back(std::move(comps));
            primes_used.push_back(p);

            // attempt a CRT lift with the primes gathered so far
            std::vector<std::vector<RatFunc>> result(nrhs, std::vector<RatFunc>(n));
            bool lifted = true;
            mpz_class M = 1;
            for (uint64_t q : primes_used) M *= mpz_class(static_cast<unsigned long>(q));
            for (int ci = 0; ci < nrhs * n && lifted; ++ci) {
                std::map<MonKey, std::vector<uint64_t>> nterms, dterms;
                for (size_t k = 0; k < per_prime.size(); ++k) {
                    std::map<MonKey, uint64_t> tn, td;
                    collect_terms(per_prime[k][ci].first, tn);
                    collect_terms(per_prime[k][ci].second, td);
                    for (auto& [mk, c] : tn) nterms[mk].resize(per_prime.size(), 0);
                    for (auto& [mk, c] : td) dterms[mk].resize(per_prime.size(), 0);
                }
                for (size_t k = 0; k < per_prime.size(); ++k) {
                    std::map<MonKey, uint64_t> tn, td;
                    collect_terms(per_prime[k][ci].first, tn);
                    collect_terms(per_prime[k][ci].second, td);
                    for (auto& [mk, vec] : nterms) vec[k] = tn.count(mk) ? tn[mk] : 0;
                    for (auto& [mk, vec] : dterms) vec[k] = td.count(mk) ? td[mk] : 0;
                }
                auto lift_terms = [&](std::map<MonKey, std::vector<uint64_t>>& terms,
                                      LaurentBuilder& out) {
                    for (auto& [mk, residues] : terms) {
                        mpz_class x = 0, m = 1;
                        for (size_t k = 0; k < primes_used.size(); ++k) {
                            mpz_class pk(static_cast<unsigned long>(primes_used[k]));
                            if (k == 0) {
                                x = mpz_class(static_cast<unsigned long>(residues[k]));
                                m = pk;
                            } else {
                                mpz_class inv;
                                mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
                                mpz_class d =
                                    (mpz_class(static_cast<unsigned long>(residues[k])) - x) % pk;
                                if (sgn(d) < 0) d += pk;
                                x += m * ((d * inv) % pk);
                                m *= pk;
                            }
                        }
                        mpq_class val;
                        if (!rat_reconstruct(x, M, val)) return false;
                        if (val != 0) out.add({mk.u, mk.v}, val);
                    }
                    return true;
                };
                LaurentBuilder nb, db;
                if (!lift_terms(nterms, nb) || !lift_terms(dterms, db)) {
                    lifted = false;
                    break;
                }
                LaurentPoly np = nb.build(), dp = db.build();
                if (dp.is_zero()) {
                    lifted = false;
                    break;
                }
                result[ci / n][ci % n] = RatFunc(np, dp);
            }
            if (!lifted) continue;  // gather another prime

            // verify against fresh solves on an unused prime
            uint64_t vp = modp::kPrimes[8];
            int checks = 0, attempts = 0;
            bool verified = true;
            uint64_t u = 37, v = 53;
            while (checks < 2 && attempts < 64 && verified) {
                ++attempts;
                u += 13;
                v += 17;
                std::vector<std::vector<uint64_t>> A, B, X;
                if (!sys.fill(vp, u, v, A, B)) continue;
                if (!solve_modp(std::move(A), std::move(B), vp, X)) continue;
                bool usable = true;
                for (int r = 0; r < nrhs && verified && usable; ++r)
                    for (int i = 0; i < n && verified && usable; ++i) {
                        bool ok = true;
                        uint64_t nv = eval_laurent_modp(result[r][i].num(), u, v, vp, ok);
                        uint64_t dv = eval_laurent_modp(result[r][i].den(), u, v, vp, ok);
                        if (!ok || dv == 0) {
                            usable = false;
                            break;
                        }
                        if (nv != modp::mul(X[r][i], dv, vp)) verified = false;
                    }
                if (usable) ++checks;
            }
            if (verified && checks >= 1) return result;
            degree_too_small = true;  // mismatch: degrees were too tight
        }
    }
    throw std::runtime_error("solve_modular: reconstruction failed at maximum degree budget");
}

}  // namespace rcs
