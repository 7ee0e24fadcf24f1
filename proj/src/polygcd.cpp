#include "rcs/polygcd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rcs/modp.hpp"

namespace rcs {

namespace {

// dense integer univariate polynomial, coefficient of x^i at index i
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zdiv_scalar(const ZPoly& f, const Int& c) {
    ZPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

modp::Poly to_modp(const ZPoly& f, uint64_t p) {
    modp::Poly r(f.size());
    mpz_class pz(static_cast<unsigned long>(p));
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_class m = f[i] % pz;
        uint64_t v = mpz_get_ui(m.get_mpz_t());
        if (sgn(m) < 0) v = p - v;
        r[i] = v % p;
    }
    modp::trim(r);
    return r;
}

// univariate gcd over Z by modular images + CRT + division check
ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int ca = zcontent(a), cb = zcontent(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly pa = zdiv_scalar(a, ca), pb = zdiv_scalar(b, cb);
    if (zdeg(pa) == 0 || zdeg(pb) == 0) return {cg};

    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

    auto divides = [](const ZPoly& g, const ZPoly& f) {
        // exact division test over Q for integer polys
        ZPoly r = f;
        ztrim(r);
        if (g.empty()) return r.empty();
        std::vector<mpq_class> rem(r.begin(), r.end());
        while (static_cast<int>(rem.size()) - 1 >= zdeg(g)) {
            mpq_class c = mpq_class(rem.back()) / mpq_class(g.back());
            int shift = static_cast<int>(rem.size()) - 1 - zdeg(g);
            for (int j = 0; j <= zdeg(g); ++j) rem[shift + j] -= c * g[j];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) return true;
        }
        return rem.empty();
    };

    mpz_class crt_mod = 0;
    ZPoly acc;
    int best_deg = INT32_MAX;
    for (uint64_t p : modp::kPrimes) {
        mpz_class pz(static_cast<unsigned long>(p));
        if (pa.back() % pz == 0 || pb.back() % pz == 0) continue;
        modp::Poly ga = to_modp(pa, p), gb = to_modp(pb, p);
        modp::Poly g = modp::gcd(ga, gb, p);
        if (modp::degree(g) == 0) return {cg};
        if (modp::degree(g) > best_deg) continue;  // unlucky prime
        uint64_t gl;
        modp::rat_mod(mpq_class(gamma), p, gl);
        g = modp::mul_scalar(g, gl, p);
        if (modp::degree(g) < best_deg) {
            best_deg = modp::degree(g);
            crt_mod = 0;
            acc.clear();
        }
        // CRT accumulate
        if (crt_mod == 0) {
            acc.assign(g.size(), Int(0));
            for (size_t i = 0; i < g.size(); ++i) acc[i] = Int(static_cast<unsigned long>(g[i]));
            crt_mod = pz;
        } else {
            mpz_class newmod = crt_mod * pz;
            for (size_t i = 0; i < acc.size(); ++i) {
                uint64_t gi = i < g.size() ? g[i] : 0;
                // x = acc[i] mod crt_mod, x = gi mod p
                mpz_class d = (mpz_class(static_cast<unsigned long>(gi)) - acc[i]) % pz;
                if (sgn(d) < 0) d += pz;
                mpz_class inv;
                mpz_invert(inv.get_mpz_t(), crt_mod.get_mpz_t(), pz.get_mpz_t());
                acc[i] = acc[i] + crt_mod * ((d * inv) % pz);
            }
            crt_mod = newmod;
        }
        // symmetric lift + primitive part + verification
        ZPoly cand(acc.size());
        mpz_class half = crt_mod / 2;
        for (size_t i = 0; i < acc.size(); ++i) {
            cand[i] = acc[i] % crt_mod;
            if (cand[i] > half) cand[i] -= crt_mod;
        }
        ztrim(cand);
        if (cand.empty()) continue;
        Int cc = zcontent(cand);
        if (cc != 0) cand = zdiv_scalar(cand, cc);
        if (cand.back() < 0)
            for (auto& c : cand) c = -c;
        if (divides(cand, pa) && divides(cand, pb)) {
            for (auto& c : cand) c *= cg;
            if (cg == 0) return {Int(1)};
            return cand;
        }
    }
    throw std::runtime_error("univariate gcd: primes exhausted");
}

// ---- bivariate machinery -------------------------------------------------
//
// X = q^(1/2), Y = t^(1/2); polynomials are maps X-degree -> ZPoly in Y.

struct BiPoly {
    // coeff[i] = coefficient of X^i, a ZPoly in Y
    std::vector<ZPoly> coeff;

    int degX() const {
        for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
            if (!coeff[i].empty()) return i;
        return -1;
    }
    int degY() const {
        int d = -1;
        for (const auto& c : coeff) d = std::max(d, zdeg(c));
        return d;
    }
    bool zero() const { return degX() < 0; }
};

BiPoly to_bipoly(const LaurentPoly& a) {
    // caller guarantees non-negative exponents
    BiPoly b;
    for (const auto& t : a.terms()) {
        int x = t.e.eq, y = t.e.et;
        if (static_cast<size_t>(x) >= b.coeff.size()) b.coeff.resize(x + 1);
        auto& c = b.coeff[x];
        if (static_cast<size_t>(y) >= c.size()) c.resize(y + 1, Int(0));
        // inputs are integer-primitive
        c[y] = t.c.get_num();
    }
    return b;
}

LaurentPoly from_bipoly(const BiPoly& b) {
    LaurentBuilder lb;
    for (size_t x = 0; x < b.coeff.size(); ++x)
        for (size_t y = 0; y < b.coeff[x].size(); ++y)
            if (b.coeff[x][y] != 0)
                lb.add({static_cast<int32_t>(x), static_cast<int32_t>(y)}, Rat(b.coeff[x][y]));
    return lb.build();
}

// content of b wrt X: gcd over Z[Y] of all X-coefficients
ZPoly content_X(const BiPoly& b) {
    ZPoly g;
    for (const auto& c : b.coeff) {
        if (c.empty()) continue;
        g = zgcd(g, c);
        if (zdeg(g) == 0 && !g.empty() && g[0] == 1) break;
    }
    return g;
}

// exact-ish division of every X-coefficient by a univariate u (assumed to divide)
BiPoly divide_content(const BiPoly& b, const ZPoly& u) {
    if (zdeg(u) == 0) {
        BiPoly r = b;
        if (u.empty() || u[0] == 1) return r;
        for (auto& c : r.coeff) c = zdiv_scalar(c, u[0]);
        return r;
    }
    BiPoly r;
    r.coeff.resize(b.coeff.size());
    for (size_t i = 0; i < b.coeff.size(); ++i) {
        if (b.coeff[i].empty()) continue;
        // exact univariate division over Q, result integral
        std::vector<mpq_class> rem(b.coeff[i].begin(), b.coeff[i].end());
        ZPoly q(rem.size(), Int(0));
        while (static_cast<int>(rem.size()) - 1 >= zdeg(u)) {
            mpq_class c = mpq_class(rem.back()) / mpq_class(u.back());
            int shift = static_cast<int>(rem.size()) - 1 - zdeg(u);
            q[shift] = c.get_num();  // division is exact in our uses
            for (int j = 0; j <= zdeg(u); ++j) rem[shift + j] -= c * u[j];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        ztrim(q);
        r.coeff[i] = std::move(q);
    }
    return r;
}

struct ModBiPoly {
    std::vector<modp::Poly> coeff;  // X-degree -> poly in Y over Z_p
};

ModBiPoly to_modp(const BiPoly& b, uint64_t p) {
    ModBiPoly r;
    r.coeff.resize(b.coeff.size());
    for (size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] = to_modp(b.coeff[i], p);
    return r;
}

// evaluate at Y = y, producing univariate in X over Z_p
modp::Poly eval_Y(const ModBiPoly& b, uint64_t y, uint64_t p) {
    modp::Poly r(b.coeff.size(), 0);
    for (size_t i = 0; i < b.coeff.size(); ++i) r[i] = modp::eval(b.coeff[i], y, p);
    modp::trim(r);
    return r;
}

}  // namespace

LaurentPoly primitive_part(const LaurentPoly& a) {
    if (a.is_zero()) return a;
    LaurentPoly r = a.shifted({-a.min_exp().eq, -a.min_exp().et});
    Rat c = r.content();
    r.mul_scalar(1 / c);
    return r;
}

LaurentPoly poly_gcd_reference(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return primitive_part(b0);
    if (b0.is_zero()) return primitive_part(a0);
    LaurentPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a == b) return a;
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly::one();

    BiPoly A = to_bipoly(a), B = to_bipoly(b);
    ZPoly contA = content_X(A), contB = content_X(B);
    ZPoly contG = zgcd(contA, contB);
    BiPoly PA = divide_content(A, contA), PB = divide_content(B, contB);

    // primitive PRS in X with coefficients in Z[Y]
    auto pseudo_rem = [](const BiPoly& f, const BiPoly& g) {
        // lc(g)^(df-dg+1) * f mod g
        BiPoly r = f;
        int dg = g.degX();
        const ZPoly& lg = g.coeff[dg];
        int steps = r.degX() - dg + 1;
        for (int s = 0; s < steps; ++s) {
            int dr = r.degX();
            if (dr < dg) {
                // multiply remaining by lg to keep the pseudo-division exact
                for (auto& c : r.coeff) {
                    if (c.empty()) continue;
                    // c *= lg
                    ZPoly prod(c.size() + lg.size() - 1, Int(0));
                    for (size_t i = 0; i < c.size(); ++i)
                        for (size_t j = 0; j < lg.size(); ++j) prod[i + j] += c[i] * lg[j];
                    ztrim(prod);
                    c = std::move(prod);
                }
                continue;
            }
            ZPoly lr = r.coeff[dr];
            // r = lg * r - lr * X^(dr-dg) * g
            BiPoly nr;
            nr.coeff.resize(std::max<size_t>(r.coeff.size(), dr + 1));
            for (size_t i = 0; i < r.coeff.size(); ++i) {
                if (r.coeff[i].empty()) continue;
                ZPoly prod(r.coeff[i].size() + lg.size() - 1, Int(0));
                for (size_t x = 0; x < r.coeff[i].size(); ++x)
                    for (size_t j = 0; j < lg.size(); ++j) prod[x + j] += r.coeff[i][x] * lg[j];
                ztrim(prod);
                nr.coeff[i] = std::move(prod);
            }
            for (int i = 0; i <= dg; ++i) {
                if (g.coeff[i].empty()) continue;
                ZPoly prod(g.coeff[i].size() + lr.size() - 1, Int(0));
                for (size_t x = 0; x < g.coeff[i].size(); ++x)
                    for (size_t j = 0; j < lr.size(); ++j) prod[x + j] += g.coeff[i][x] * lr[j];
                ztrim(prod);
                size_t k = i + dr - dg;
                if (k >= nr.coeff.size()) nr.coeff.resize(k + 1);
                // subtract
                ZPoly& dst = nr.coeff[k];
                if (dst.size() < prod.size()) dst.resize(prod.size(), Int(0));
                for (size_t x = 0; x < prod.size(); ++x) dst[x] -= prod[x];
                ztrim(dst);
            }
            nr.coeff[dr].clear();
            r = std::move(nr);
        }
        return r;
    };

    BiPoly F = PA.degX() >= PB.degX() ? PA : PB;
    BiPoly G = PA.degX() >= PB.degX() ? PB : PA;
    while (!G.zero()) {
        if (G.degX() == 0) {
            // gcd of X-primitive parts is univariate => 1
            LaurentPoly res = from_bipoly([&] {
                BiPoly one;
                one.coeff.resize(1);
                one.coeff[0] = contG.empty() ? ZPoly{Int(1)} : contG;
                return one;
            }());
            return primitive_part(res);
        }
        BiPoly r = pseudo_rem(F, G);
        // primitive part of r
        ZPoly cr = content_X(r);
        if (!r.zero()) r = divide_content(r, cr);
        F = std::move(G);
        G = std::move(r);
    }
    // G zero: gcd is primitive part of F times contG
    ZPoly cf = content_X(F);
    F = divide_content(F, cf);
    LaurentPoly res = from_bipoly(F);
    if (!(zdeg(contG) == 0 && !contG.empty() && contG[0] == 1)) {
        BiPoly cg;
        cg.coeff.resize(1);
        cg.coeff[0] = contG;
        res = res * from_bipoly(cg);
    }
    return primitive_part(res);
}

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return primitive_part(b0);
    if (b0.is_zero()) return primitive_part(a0);
    LaurentPoly a = primitive_part(a0), b = primitive_part(b0);
    if (a == b) return a;
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly::one();

    BiPoly A = to_bipoly(a), B = to_bipoly(b);

    // purely univariate situations go straight to zgcd
    bool a_noX = A.degX() == 0, b_noX = B.degX() == 0;
    bool a_noY = A.degY() == 0, b_noY = B.degY() == 0;
    if ((a_noX && b_noX)) {
        ZPoly g = zgcd(A.coeff[0], B.coeff[0]);
        BiPoly r;
        r.coeff.resize(1);
        r.coeff[0] = g;
        return primitive_part(from_bipoly(r));
    }
    if (a_noY && b_noY) {
        ZPoly ca(A.coeff.size(), Int(0)), cb(B.coeff.size(), Int(0));
        for (size_t i = 0; i < A.coeff.size(); ++i)
            if (!A.coeff[i].empty()) ca[i] = A.coeff[i][0];
        for (size_t i = 0; i < B.coeff.size(); ++i)
            if (!B.coeff[i].empty()) cb[i] = B.coeff[i][0];
        ZPoly g = zgcd(ca, cb);
        BiPoly r;
        r.coeff.resize(g.size());
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) r.coeff[i] = ZPoly{g[i]};
        return primitive_part(from_bipoly(r));
    }
    if (a_noX || b_noX || a_noY || b_noY) {
        // mixed: gcd divides a univariate content; handle via contents
        ZPoly contA = content_X(A), contB = content_X(B);
        if (a_noX || b_noX) {
            const ZPoly& u = a_noX ? A.coeff[0] : B.coeff[0];
            const BiPoly& other = a_noX ? B : A;
            ZPoly g = zgcd(u, content_X(other));
            BiPoly r;
            r.coeff.resize(1);
            r.coeff[0] = g;
            return primitive_part(from_bipoly(r));
        }
        // a_noY or b_noY: swap roles of variables by falling through to the
        // general path (it handles deg_Y = 0 fine).
        (void)contA;
        (void)contB;
    }

    // quick coprimality certificate with one prime and one evaluation
    {
        uint64_t p = modp::kPrimes[0];
        ModBiPoly MA = to_modp(A, p), MB = to_modp(B, p);
        int dA = A.degX(), dB = B.degX();
        uint64_t y = 3;
        for (; y < 1000; ++y) {
            if (modp::eval(MA.coeff[dA], y, p) != 0 && modp::eval(MB.coeff[dB], y, p) != 0) break;
        }
        modp::Poly ga = eval_Y(MA, y, p), gb = eval_Y(MB, y, p);
        modp::Poly g = modp::gcd(ga, gb, p);
        if (modp::degree(g) == 0) {
            // gcd has X-degree 0: reduce to gcd of X-contents
            ZPoly cg = zgcd(content_X(A), content_X(B));
            BiPoly r;
            r.coeff.resize(1);
            r.coeff[0] = cg;
            return primitive_part(from_bipoly(r));
        }
    }

    // Brown's modular algorithm
    ZPoly contA = content_X(A), contB = content_X(B);
    ZPoly contG = zgcd(contA, contB);
    BiPoly PA = divide_content(A, contA), PB = divide_content(B, contB);
    int dA = PA.degX(), dB = PB.degX();
    ZPoly gammaZ = zgcd(PA.coeff[dA], PB.coeff[dB]);
    int degY_bound = std::min(PA.degY(), PB.degY()) + zdeg(gammaZ) + 1;

    mpz_class crt_mod = 0;
    std::map<std::pair<int, int>, mpz_class> acc;  // (x,y) -> CRT residue
    int best_deg = INT32_MAX;

    for (uint64_t p : modp::kPrimes) {
        mpz_class pz(static_cast<unsigned long>(p));
        ModBiPoly MA = to_modp(PA, p), MB = to_modp(PB, p);
        if (modp::degree(MA.coeff[dA]) != zdeg(PA.coeff[dA]) ||
            modp::degree(MB.coeff[dB]) != zdeg(PB.coeff[dB]))
            continue;  // leading coefficient collapsed
        modp::Poly gamma_p = to_modp(gammaZ, p);

        // evaluation points
        std::vector<uint64_t> ys;
        std::vector<modp::Poly> gs;
        int target = degY_bound + 1;
        int dmin = INT32_MAX;
        uint64_t y = 2;
        int misses = 0;
        while (static_cast<int>(ys.size()) < target && misses < 4 * target + 64) {
            ++y;
            if (modp::eval(MA.coeff[dA], y, p) == 0 || modp::eval(MB.coeff[dB], y, p) == 0) {
                ++misses;
                continue;
            }
            modp::Poly g = modp::gcd(eval_Y(MA, y, p), eval_Y(MB, y, p), p);
            int dg = modp::degree(g);
            if (dg == 0) {
                // coprime after all
                BiPoly r;
                r.coeff.resize(1);
                r.coeff[0] = contG;
                return primitive_part(from_bipoly(r));
            }
            if (dg < dmin) {
                dmin = dg;
                ys.clear();
                gs.clear();
            }
            if (dg > dmin) {
                ++misses;
                continue;
            }
            g = modp::mul_scalar(g, modp::eval(gamma_p, y, p), p);
            ys.push_back(y);
            gs.push_back(std::move(g));
        }
        if (static_cast<int>(ys.size()) < target) continue;
        if (dmin > best_deg) continue;
        if (dmin < best_deg) {
            best_deg = dmin;
            crt_mod = 0;
            acc.clear();
        }

        // interpolate each X-coefficient in Y
        ModBiPoly H;
        H.coeff.resize(dmin + 1);
        for (int i = 0; i <= dmin; ++i) {
            std::vector<uint64_t> vals(ys.size());
            for (size_t k = 0; k < ys.size(); ++k)
                vals[k] = i < static_cast<int>(gs[k].size()) ? gs[k][i] : 0;
            H.coeff[i] = modp::interpolate(ys, vals, p);
        }

        // CRT accumulate term by term
        std::map<std::pair<int, int>, uint64_t> cur;
        for (int i = 0; i <= dmin; ++i)
            for (size_t j = 0; j < H.coeff[i].size(); ++j)
                if (H.coeff[i][j]) cur[{i, static_cast<int>(j)}] = H.coeff[i][j];
        if (crt_mod == 0) {
            for (auto& [k, v] : cur) acc[k] = mpz_class(static_cast<unsigned long>(v));
            crt_mod = pz;
        } else {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), crt_mod.get_mpz_t(), pz.get_mpz_t());
            std::map<std::pair<int, int>, mpz_class> nacc;
            auto keys = acc;
            for (auto& [k, v] : cur) keys.try_emplace(k, 0);
            for (auto& [k, oldv] : keys) {
                uint64_t nv = cur.count(k) ? cur[k] : 0;
                mpz_class prev = acc.count(k) ? acc[k] : mpz_class(0);
                mpz_class d = (mpz_class(static_cast<unsigned long>(nv)) - prev) % pz;
                if (sgn(d) < 0) d += pz;
                nacc[k] = prev + crt_mod * ((d * inv) % pz);
            }
            acc = std::move(nacc);
            crt_mod *= pz;
        }

        // symmetric lift + primitive part + verify
        BiPoly cand;
        cand.coeff.resize(dmin + 1);
        mpz_class half = crt_mod / 2;
        for (auto& [k, v] : acc) {
            mpz_class c = v % crt_mod;
            if (c > half) c -= crt_mod;
            if (c == 0) continue;
            auto [xi, yi] = k;
            if (static_cast<size_t>(xi) >= cand.coeff.size()) cand.coeff.resize(xi + 1);
            auto& cp = cand.coeff[xi];
            if (static_cast<size_t>(yi) >= cp.size()) cp.resize(yi + 1, Int(0));
            cp[yi] = c;
        }
        for (auto& c : cand.coeff) ztrim(c);
        if (cand.zero()) continue;
        ZPoly cc = content_X(cand);
        BiPoly prim = divide_content(cand, cc);
        LaurentPoly G = primitive_part(from_bipoly(prim));
        if (a.divide_exact(G) && b.divide_exact(G)) {
            if (!(zdeg(contG) == 0 && contG.size() == 1 && contG[0] == 1)) {
                BiPoly cg;
                cg.coeff.resize(1);
                cg.coeff[0] = contG;
                G = G * from_bipoly(cg);
            }
            return primitive_part(G);
        }
    }
    // modular path failed (extremely unlikely); fall back
    return poly_gcd_reference(a0, b0);
}

}  // namespace rcs
