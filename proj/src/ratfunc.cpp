#include "rcs/ratfunc.hpp"

#include "rcs/polygcd.hpp"

namespace rcs {

RatFunc::RatFunc(const Rat& v) : num_(LaurentPoly(v)), den_(LaurentPoly::one()) { reduce(); }

RatFunc::RatFunc(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::one()) { reduce(); }

RatFunc::RatFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw malformed_error("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // move the denominator's monomial factor into the numerator
    ExpPair dmin = den_.min_exp();
    if (!(dmin == ExpPair{0, 0})) {
        den_ = den_.shifted({-dmin.eq, -dmin.et});
        num_ = num_.shifted({-dmin.eq, -dmin.et});
    }
    if (!den_.is_constant()) {
        ExpPair nmin = num_.min_exp();
        LaurentPoly nshift = num_.shifted({-nmin.eq, -nmin.et});
        LaurentPoly g = poly_gcd(nshift, den_);
        if (!g.is_one() && !g.is_constant()) {
            nshift = *nshift.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        num_ = nshift.shifted(nmin);
    }
    // joint integer normalization: both integral, jointly primitive,
    // denominator leading coefficient positive
    Rat cn = num_.content();
    Rat cd = den_.content();
    // gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d)
    Int a = cn.get_num() * cd.get_den(), c = cd.get_num() * cn.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    Rat joint(g, cn.get_den() * cd.get_den());
    joint.canonicalize();
    if (den_.leading().c < 0) joint = -joint;
    Rat inv = 1 / joint;
    num_.mul_scalar(inv);
    den_.mul_scalar(inv);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return -b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw pole_error("division by zero");
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) { return *this = *this + o; }
RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this = *this - o; }
RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = *this * o; }
RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this = *this / o; }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw pole_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(1);
    RatFunc base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
    RatFunc r(1);
    while (n) {
        if (n & 1) r *= base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

static std::optional<Rat> rat_sqrt(const Rat& v) {
    if (v < 0) return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
    if (n * n == v.get_num() && d * d == v.get_den()) return Rat(n, d);
    return std::nullopt;
}

Rat RatFunc::evaluate_half(const Rat& sq, const Rat& st) const {
    if ((sq == 0 && num_.min_exp().eq < 0) || (st == 0 && num_.min_exp().et < 0))
        throw pole_error("negative power at zero");
    Rat d = den_.eval_half(sq, st);
    if (d == 0) throw pole_error("pole at evaluation point");
    return num_.eval_half(sq, st) / d;
}

Rat RatFunc::evaluate(const Rat& q0, const Rat& t0) const {
    bool hq = num_.has_half_q() || den_.has_half_q();
    bool ht = num_.has_half_t() || den_.has_half_t();
    Rat sq(0), st(0);
    if (hq) {
        auto r = rat_sqrt(q0);
        if (!r) throw std::domain_error("half exponent of q with no exact sqrt of q0");
        sq = *r;
    }
    if (ht) {
        auto r = rat_sqrt(t0);
        if (!r) throw std::domain_error("half exponent of t with no exact sqrt of t0");
        st = *r;
    }
    auto pw = [](const Rat& b, long e) {
        Rat r(1);
        Rat bb = b;
        long n = e;
        if (n < 0) {
            if (bb == 0) throw pole_error("negative power at zero");
            bb = 1 / bb;
            n = -n;
        }
        while (n) {
            if (n & 1) r *= bb;
            bb *= bb;
            n >>= 1;
        }
        return r;
    };
    auto eval_poly = [&](const LaurentPoly& f) {
        Rat acc(0);
        for (const auto& t : f.terms()) {
            Rat qpart = (t.e.eq % 2 == 0) ? pw(q0, t.e.eq / 2) : pw(sq, t.e.eq);
            Rat tpart = (t.e.et % 2 == 0) ? pw(t0, t.e.et / 2) : pw(st, t.e.et);
            acc += t.c * qpart * tpart;
        }
        return acc;
    };
    Rat d = eval_poly(den_);
    if (d == 0) throw pole_error("pole at evaluation point");
    return eval_poly(num_) / d;
}

namespace {

// monomial square root of a RatFunc image, used for half exponents
std::optional<RatFunc> sqrt_of(const RatFunc& g) {
    if (g.is_zero()) return RatFunc();
    if (!g.num().is_monomial() || !g.den().is_one()) return std::nullopt;
    const Term& m = g.num().terms()[0];
    auto c = rat_sqrt(m.c);
    if (!c) return std::nullopt;
    if ((m.e.eq % 2) || (m.e.et % 2)) return std::nullopt;
    return RatFunc::monomial(*c, m.e.eq / 2, m.e.et / 2);
}

}  // namespace

RatFunc RatFunc::substitute(const Subst& s) const {
    // sqrt images, needed only when the corresponding half exponents occur
    std::optional<RatFunc> sq, st;
    if (s.q && (num_.has_half_q() || den_.has_half_q())) {
        sq = sqrt_of(*s.q);
        if (!sq) throw std::domain_error("half exponent of q: substitution image has no square root");
    }
    if (s.t && (num_.has_half_t() || den_.has_half_t())) {
        st = sqrt_of(*s.t);
        if (!st) throw std::domain_error("half exponent of t: substitution image has no square root");
    }

    auto subst_one = [&](const LaurentPoly& f) {
        RatFunc acc(0);
        for (const auto& t : f.terms()) {
            RatFunc term(t.c);
            if (t.e.eq != 0) {
                if (!s.q) {
                    term *= RatFunc::monomial(1, t.e.eq, 0);
                } else {
                    const RatFunc& img = (t.e.eq % 2 == 0) ? *s.q : *sq;
                    long e = (t.e.eq % 2 == 0) ? t.e.eq / 2 : t.e.eq;
                    if (img.is_zero() && e > 0) continue;
                    if (img.is_zero() && e < 0) throw pole_error("pole under substitution");
                    term *= img.pow(e);
                }
            }
            if (term.is_zero()) continue;
            if (t.e.et != 0) {
                if (!s.t) {
                    term *= RatFunc::monomial(1, 0, t.e.et);
                } else {
                    const RatFunc& img = (t.e.et % 2 == 0) ? *s.t : *st;
                    long e = (t.e.et % 2 == 0) ? t.e.et / 2 : t.e.et;
                    if (img.is_zero() && e > 0) continue;
                    if (img.is_zero() && e < 0) throw pole_error("pole under substitution");
                    term *= img.pow(e);
                }
            }
            acc += term;
        }
        return acc;
    };

    RatFunc dn = subst_one(den_);
    if (dn.is_zero()) throw pole_error("substitution creates zero denominator");
    RatFunc nm = subst_one(num_);
    return nm / dn;
}

RatFunc RatFunc::subst_q0() const { return substitute({RatFunc(0), std::nullopt}); }
RatFunc RatFunc::subst_t0() const { return substitute({std::nullopt, RatFunc(0)}); }
RatFunc RatFunc::subst_q_inv() const { return substitute({RatFunc::q(-1), std::nullopt}); }
RatFunc RatFunc::subst_t_inv() const { return substitute({std::nullopt, RatFunc::t(-1)}); }
RatFunc RatFunc::subst_q_to_t() const { return substitute({RatFunc::t(1), std::nullopt}); }

}  // namespace rcs
