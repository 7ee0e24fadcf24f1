#include "rcs/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rcs {

LaurentPoly::LaurentPoly(const Rat& constant) {
    if (constant != 0) terms_.push_back({{0, 0}, constant});
}

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) terms_.push_back({{0, 0}, Rat(constant)});
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int eq_half, int et_half) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({{eq_half, et_half}, c});
    return p;
}

LaurentPoly LaurentPoly::from_sorted(std::vector<Term> ts) {
    LaurentPoly p;
    p.terms_ = std::move(ts);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == ExpPair{0, 0});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].e == ExpPair{0, 0} && terms_[0].c == 1;
}

ExpPair LaurentPoly::min_exp() const {
    ExpPair m{0, 0};
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            m = t.e;
            first = false;
        } else {
            m.eq = std::min(m.eq, t.e.eq);
            m.et = std::min(m.et, t.e.et);
        }
    }
    return m;
}

ExpPair LaurentPoly::max_exp() const {
    ExpPair m{0, 0};
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            m = t.e;
            first = false;
        } else {
            m.eq = std::max(m.eq, t.e.eq);
            m.et = std::max(m.et, t.e.et);
        }
    }
    return m;
}

bool LaurentPoly::has_half_q() const {
    for (const auto& t : terms_)
        if (t.e.eq & 1) return true;
    return false;
}

bool LaurentPoly::has_half_t() const {
    for (const auto& t : terms_)
        if (t.e.et & 1) return true;
    return false;
}

Rat LaurentPoly::coeff(ExpPair e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, ExpPair k) { return t.e < k; });
    if (it != terms_.end() && it->e == e) return it->c;
    return Rat(0);
}

void LaurentPoly::normalize_sorted() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.e < b.e; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c += t.c;
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

LaurentPoly LaurentBuilder::build() {
    LaurentPoly p;
    p.terms_ = std::move(ts_);
    p.normalize_sorted();
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

static std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                                   bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].e < b[j].e) {
            out.push_back(a[i++]);
        } else if (b[j].e < a[i].e) {
            out.push_back(b[j]);
            if (negate_b) out.back().c = -out.back().c;
            ++j;
        } else {
            Rat c = negate_b ? Rat(a[i].c - b[j].c) : Rat(a[i].c + b[j].c);
            if (c != 0) out.push_back({a[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (negate_b) out.back().c = -out.back().c;
    }
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::from_sorted(merge_add(a.terms_, b.terms_, false));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::from_sorted(merge_add(a.terms_, b.terms_, true));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    if (a.is_monomial()) {
        LaurentPoly r = b;
        r.mul_monomial(a.terms_[0].c, a.terms_[0].e);
        return r;
    }
    if (b.is_monomial()) {
        LaurentPoly r = a;
        r.mul_monomial(b.terms_[0].c, b.terms_[0].e);
        return r;
    }
    // accumulate into an ordered map keyed by exponent pair
    std::map<ExpPair, Rat> acc;
    const auto& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
    const auto& large = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
    for (const auto& ts : small) {
        for (const auto& tl : large) {
            ExpPair e = ts.e + tl.e;
            auto [it, fresh] = acc.try_emplace(e, 0);
            it->second += ts.c * tl.c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back({e, std::move(c)});
    return LaurentPoly::from_sorted(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly::mul_monomial(const Rat& c, ExpPair e) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) {
        t.e = t.e + e;
        t.c *= c;
    }
}

void LaurentPoly::mul_scalar(const Rat& c) { mul_monomial(c, {0, 0}); }

LaurentPoly LaurentPoly::shifted(ExpPair e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.e = t.e + e;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].e == b.terms_[i].e) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

Rat LaurentPoly::content() const {
    if (terms_.empty()) return Rat(1);
    // gcd of numerators / lcm of denominators, sign of leading term
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (leading().c < 0) c = -c;
    return c;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly();
    if (divisor.is_monomial()) {
        LaurentPoly r = *this;
        Rat inv = 1 / divisor.terms_[0].c;
        ExpPair e{-divisor.terms_[0].e.eq, -divisor.terms_[0].e.et};
        r.mul_monomial(inv, e);
        return r;
    }
    // long division by leading term (lex order); remainder must vanish
    LaurentPoly rem = *this;
    const Term& dl = divisor.leading();
    std::vector<Term> quot;
    // bound the iterations to avoid pathological loops
    size_t guard = terms_.size() * divisor.terms_.size() + terms_.size() + 16;
    while (!rem.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        Rat qc = rem.leading().c / dl.c;
        ExpPair qe = rem.leading().e - dl.e;
        ExpPair old_lead = rem.leading().e;
        quot.push_back({qe, qc});
        LaurentPoly sub = divisor;
        sub.mul_monomial(qc, qe);
        rem -= sub;
        if (!rem.is_zero() && !(rem.leading().e < old_lead)) return std::nullopt;
    }
    LaurentBuilder b;
    for (auto& t : quot) b.add_term(t);
    return b.build();
}

Rat LaurentPoly::eval_half(const Rat& sq, const Rat& st) const {
    // Horner is awkward on sparse bivariate Laurent supports; with bounded
    // exponents a power cache is plenty.
    auto pow_of = [](const Rat& base, long e) {
        Rat r(1);
        if (e == 0) return r;
        Rat b = base;
        long n = e;
        if (n < 0) {
            if (b == 0) throw std::domain_error("zero to negative power");
            b = 1 / b;
            n = -n;
        }
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    };
    Rat acc(0);
    for (const auto& t : terms_) acc += t.c * pow_of(sq, t.e.eq) * pow_of(st, t.e.et);
    return acc;
}

size_t LaurentPoly::hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& t : terms_) {
        size_t k = (static_cast<uint64_t>(static_cast<uint32_t>(t.e.eq)) << 32) |
                   static_cast<uint32_t>(t.e.et);
        h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<long>()(mpz_get_si(t.c.get_num().get_mpz_t()));
    }
    return h;
}

std::string LaurentPoly::debug_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.c.get_str() << "*q^(" << t.e.eq << "/2)t^(" << t.e.et << "/2)";
    }
    return os.str();
}

}  // namespace rcs
