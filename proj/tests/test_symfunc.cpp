#include "doctest.h"

#include <random>

#include "rcs/symfunc.hpp"

using namespace rcs;

namespace {

RatFunc half(long num, long den) { return RatFunc(Rat(num, den)); }

SymFunc m_basis(const Partition& lam) { return SymFunc(Basis::m, {{lam, RatFunc(1)}}); }

std::mt19937 rng(917);

SymFunc random_symfunc(int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg), cc(-4, 4);
    SymFunc f(Basis::p);
    for (int i = 0; i < 3; ++i) {
        int d = dd(rng);
        const auto& ps = partitions_of(d);
        std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
        int c = cc(rng);
        if (c) f.add_coeff(ps[pick(rng)], RatFunc(c));
    }
    return f;
}

}  // namespace

TEST_CASE("to_canonical on monomial basis") {
    // m_[2] = p_[2]
    CHECK(to_canonical(m_basis(Partition({2}))) == SymFunc::p_monomial(Partition({2})));
    // m_[1,1] = (1/2) p_[1,1] - (1/2) p_[2]
    SymFunc m11 = to_canonical(m_basis(Partition({1, 1})));
    CHECK(m11.coeff(Partition({1, 1})) == half(1, 2));
    CHECK(m11.coeff(Partition({2})) == -half(1, 2));
}

TEST_CASE("schur expansions match the basis table") {
    CHECK(schur(Partition({1})) == SymFunc::p_monomial(Partition({1})));
    SymFunc s2 = schur(Partition({2}));
    CHECK(s2.coeff(Partition({1, 1})) == half(1, 2));
    CHECK(s2.coeff(Partition({2})) == half(1, 2));
    SymFunc s11 = schur(Partition({1, 1}));
    CHECK(s11.coeff(Partition({1, 1})) == half(1, 2));
    CHECK(s11.coeff(Partition({2})) == -half(1, 2));
}

TEST_CASE("transition round trips") {
    for (int d = 0; d <= 10; ++d) {
        const auto& p2m = p_to_m_matrix(d);
        const auto& m2p = m_to_p_matrix(d);
        size_t n = p2m.size();
        // m -> p -> m is the identity
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Rat acc(0);
                for (size_t k = 0; k < n; ++k) acc += m2p[i][k] * p2m[k][j];
                CHECK(acc == (i == j ? Rat(1) : Rat(0)));
            }
    }
}

TEST_CASE("character orthogonality (s -> p -> s identity)") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& mu : partitions_of(d)) {
                Rat acc(0);
                for (const auto& nu : partitions_of(d))
                    acc += sym_character(lam, nu) * sym_character(mu, nu) / z_factor(nu);
                CHECK(acc == (lam == mu ? Rat(1) : Rat(0)));
            }
}

TEST_CASE("qt_inner on power sums") {
    RatFunc w1{LaurentPoly(1) - LaurentPoly::q(1), LaurentPoly(1) - LaurentPoly::t(1)};
    CHECK(qt_inner(SymFunc::p_monomial(Partition({1})), SymFunc::p_monomial(Partition({1}))) == w1);
    CHECK(qt_inner(SymFunc::p_monomial(Partition({2})), SymFunc::p_monomial(Partition({1, 1})))
              .is_zero());
    RatFunc w11 = qt_inner(SymFunc::p_monomial(Partition({1, 1})),
                           SymFunc::p_monomial(Partition({1, 1})));
    CHECK(w11 == RatFunc(2) * w1 * w1);
}

TEST_CASE("multiply") {
    SymFunc p1 = SymFunc::p_monomial(Partition({1}));
    CHECK(multiply(p1, p1) == SymFunc::p_monomial(Partition({1, 1})));
    SymFunc one = SymFunc::constant(RatFunc(1));
    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(4);
        CHECK(multiply(f, one) == f);
        SymFunc g = random_symfunc(4), h = random_symfunc(4);
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    }
}

TEST_CASE("scale_power_sums") {
    auto one_minus_tk = [](int k) { return RatFunc(LaurentPoly(1) - LaurentPoly::t(k)); };
    SymFunc p1 = SymFunc::p_monomial(Partition({1}));
    CHECK(scale_power_sums(p1, one_minus_tk).coeff(Partition({1})) == one_minus_tk(1));

    auto tk_minus_one = [](int k) { return RatFunc(LaurentPoly::t(k) - LaurentPoly(1)); };
    SymFunc s21 = scale_power_sums(SymFunc::p_monomial(Partition({2, 1})), tk_minus_one);
    CHECK(s21.coeff(Partition({2, 1})) == tk_minus_one(2) * tk_minus_one(1));

    for (int i = 0; i < 10; ++i) {
        SymFunc f = random_symfunc(5);
        CHECK(scale_power_sums(f, [](int) { return RatFunc(1); }) == f);
        auto c = [](int k) { return RatFunc(LaurentPoly(1) - LaurentPoly::t(k)); };
        auto cinv = [](int k) {
            return RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t(k));
        };
        CHECK(scale_power_sums(scale_power_sums(f, c), cinv) == f);
    }
}
