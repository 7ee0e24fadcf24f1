#include "rcs/modp.hpp"

#include <stdexcept>

namespace rcs::modp {

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a, uint64_t p) {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2, p);
}

bool rat_mod(const mpq_class& a, uint64_t p, uint64_t& out) {
    mpz_class pz(static_cast<unsigned long>(p));
    // gmp on LP64: unsigned long holds the full prime
    mpz_class den_m = a.get_den() % pz;
    if (den_m == 0) return false;
    mpz_class num_m = a.get_num() % pz;
    uint64_t n = mpz_get_ui(num_m.get_mpz_t());
    if (sgn(num_m) < 0) n = p - n;
    uint64_t d = mpz_get_ui(den_m.get_mpz_t());
    out = mul(n % p, inv(d % p, p), p);
    return true;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

Poly mul_scalar(const Poly& a, uint64_t c, uint64_t p) {
    Poly r = a;
    for (auto& x : r) x = mul(x, c, p);
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, uint64_t p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("poly division by zero");
    r = a;
    trim(r);
    q.clear();
    if (degree(r) < degree(b)) return;
    q.assign(r.size() - b.size() + 1, 0);
    uint64_t lb = inv(b.back(), p);
    for (int i = degree(r); i >= degree(b); --i) {
        if (r[i] == 0) continue;
        uint64_t c = mul(r[i], lb, p);
        q[i - degree(b)] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            size_t k = i - degree(b) + j;
            r[k] = sub(r[k], mul(c, b[j], p), p);
        }
    }
    trim(r);
    trim(q);
}

Poly make_monic(Poly f, uint64_t p) {
    trim(f);
    if (f.empty()) return f;
    uint64_t li = inv(f.back(), p);
    for (auto& c : f) c = mul(c, li, p);
    return f;
}

Poly gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

uint64_t eval(const Poly& f, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (size_t i = f.size(); i-- > 0;) r = add(mul(r, x, p), f[i], p);
    return r;
}

Poly interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys, uint64_t p) {
    // Newton form
    size_t n = xs.size();
    std::vector<uint64_t> dd = ys;  // divided differences in place
    for (size_t lvl = 1; lvl < n; ++lvl) {
        for (size_t i = n - 1; i >= lvl; --i) {
            uint64_t denom = sub(xs[i], xs[i - lvl], p);
            dd[i] = mul(sub(dd[i], dd[i - 1], p), inv(denom, p), p);
            if (i == lvl) break;
        }
    }
    Poly r{dd.empty() ? Poly{} : Poly{}};
    r.clear();
    Poly basis{1};
    for (size_t i = 0; i < n; ++i) {
        Poly term = mul_scalar(basis, dd[i], p);
        r = add(r, term, p);
        // basis *= (x - xs[i])
        Poly lin{sub(0, xs[i], p), 1};
        basis = mul(basis, lin, p);
    }
    trim(r);
    return r;
}

bool rational_interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys,
                          int dn, int dd, uint64_t p, Poly& num, Poly& den) {
    size_t n = xs.size();
    if (static_cast<size_t>(dn + dd + 1) > n) return false;
    // modulus M = prod (x - xs[i]), V = interpolant of values
    Poly M{1};
    for (auto x : xs) {
        Poly lin{sub(0, x, p), 1};
        M = mul(M, lin, p);
    }
    Poly V = interpolate(xs, ys, p);
    // extended Euclid on (M, V) until remainder degree <= dn
    Poly r0 = M, r1 = V;
    Poly s0{}, s1{1};  // s tracks the V-cofactor: r = t*M + s*V
    while (degree(r1) > dn) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (degree(s1) > dd) return false;
    if (s1.empty()) return false;
    // require gcd(r1, s1) = 1 for a well-posed solution
    Poly g = gcd(r1, s1, p);
    if (degree(g) > 0) {
        Poly q, rr;
        divmod(r1, g, p, q, rr);
        r1 = q;
        divmod(s1, g, p, q, rr);
        s1 = q;
    }
    // normalize: monic denominator
    if (s1.empty()) return false;
    uint64_t li = inv(s1.back(), p);
    num = mul_scalar(r1, li, p);
    den = mul_scalar(s1, li, p);
    // denominator must not vanish at any sample point
    for (auto x : xs)
        if (eval(den, x, p) == 0) return false;
    // verify fit
    for (size_t i = 0; i < n; ++i) {
        uint64_t nv = eval(num, xs[i], p);
        uint64_t dv = eval(den, xs[i], p);
        if (nv != mul(ys[i], dv, p)) return false;
    }
    return true;
}

}  // namespace rcs::modp
