#include "rcs/macdonald.hpp"

#include <mutex>
#include <unordered_map>

namespace rcs {

namespace {

std::recursive_mutex g_mac_mutex;
std::unordered_map<Partition, MacElem, PartitionHash> g_mac_cache;

// dense p-coordinate vector of m_λ within degree |λ|
std::vector<RatFunc> m_in_p(const Partition& lambda) {
    int d = lambda.size();
    const auto& m2p = m_to_p_matrix(d);
    int row = partition_index(lambda);
    std::vector<RatFunc> v(m2p.size());
    for (size_t j = 0; j < m2p.size(); ++j)
        if (m2p[row][j] != 0) v[j] = RatFunc(m2p[row][j]);
    return v;
}

RatFunc weighted_dot(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                     const std::vector<RatFunc>& w) {
    RatFunc acc(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i] * b[i] * w[i];
    }
    return acc;
}

const std::vector<RatFunc>& qt_weights_of_degree(int d) {
    static std::mutex mtx;
    static std::map<int, std::vector<RatFunc>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    const auto& ps = partitions_of(d);
    std::vector<RatFunc> w(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) w[i] = qt_weight(ps[i]);
    return cache.emplace(d, std::move(w)).first->second;
}

}  // namespace

const MacElem& macdonald_elem(const Partition& lambda) {
    std::lock_guard<std::recursive_mutex> lock(g_mac_mutex);
    auto it = g_mac_cache.find(lambda);
    if (it != g_mac_cache.end()) return it->second;

    int d = lambda.size();
    const auto& ps = partitions_of(d);
    const auto& w = qt_weights_of_degree(d);

    std::vector<RatFunc> vec = m_in_p(lambda);
    for (const auto& mu : ps) {
        if (mu == lambda) continue;
        if (dominance_leq(mu, lambda) != Dominance::less_equal) continue;
        const MacElem& me = macdonald_elem(mu);
        RatFunc c = weighted_dot(vec, me.p_coeffs, w) / me.norm;
        if (c.is_zero()) continue;
        for (size_t i = 0; i < vec.size(); ++i)
            if (!me.p_coeffs[i].is_zero()) vec[i] -= c * me.p_coeffs[i];
    }

    MacElem elem;
    elem.lambda = lambda;
    elem.norm = weighted_dot(vec, vec, w);
    elem.p_coeffs = std::move(vec);
    return g_mac_cache.emplace(lambda, std::move(elem)).first->second;
}

SymFunc macdonald_P(const Partition& lambda) {
    const MacElem& e = macdonald_elem(lambda);
    const auto& ps = partitions_of(lambda.size());
    SymFunc f(Basis::p);
    for (size_t i = 0; i < ps.size(); ++i)
        if (!e.p_coeffs[i].is_zero()) f.set_coeff(ps[i], e.p_coeffs[i]);
    return f;
}

RatFunc norm_G(const Partition& lambda) {
    RatFunc g(1);
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.parts()[r - 1]; ++c) {
            auto [arm, leg] = lambda.arm_leg(r, c);
            LaurentPoly top = LaurentPoly(1) - LaurentPoly::q(arm + 1) * LaurentPoly::t(leg);
            LaurentPoly bot = LaurentPoly(1) - LaurentPoly::q(arm) * LaurentPoly::t(leg + 1);
            g *= RatFunc(top, bot);
        }
    return g;
}

RatFunc lr_coeff(const Partition& R, const Partition& B, const Partition& A) {
    if (A.size() != R.size() + B.size()) return RatFunc(0);
    SymFunc prod = multiply(macdonald_P(R), macdonald_P(B));
    const MacElem& ea = macdonald_elem(A);
    const auto& ps = partitions_of(A.size());
    const auto& w = qt_weights_of_degree(A.size());
    RatFunc acc(0);
    for (size_t i = 0; i < ps.size(); ++i) {
        if (ea.p_coeffs[i].is_zero()) continue;
        RatFunc c = prod.coeff(ps[i]);
        if (c.is_zero()) continue;
        acc += c * ea.p_coeffs[i] * w[i];
    }
    return acc / ea.norm;
}

RatFunc principal_pk(int k, const Partition& A) {
    LaurentBuilder num;
    int l = A.length();
    // Σ_{i≤l} t^{-ik} q^{k A_i} (1−t^k) − t^{-kl}, all over (1−t^k)
    for (int i = 1; i <= l; ++i) {
        num.add({2 * k * A.parts()[i - 1], -2 * i * k}, Rat(1));
        num.add({2 * k * A.parts()[i - 1], -2 * i * k + 2 * k}, Rat(-1));
    }
    num.add({0, -2 * k * l}, Rat(-1));
    LaurentPoly den = LaurentPoly(1) - LaurentPoly::t(k);
    return RatFunc(num.build(), den);
}

RatFunc principal_spec(const SymFunc& f, const Partition& A) {
    SymFunc cf = to_canonical(f);
    std::map<int, RatFunc> pk;
    RatFunc acc(0);
    for (const auto& [mu, c] : cf.coeffs()) {
        RatFunc term = c;
        for (int part : mu.parts()) {
            auto it = pk.find(part);
            if (it == pk.end()) it = pk.emplace(part, principal_pk(part, A)).first;
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

SymFunc hall_littlewood(const Partition& lambda) {
    SymFunc m = macdonald_P(lambda);
    SymFunc out(Basis::p);
    for (const auto& [mu, c] : m.coeffs()) out.set_coeff(mu, c.subst_q0());
    return out;
}

SymFunc q_whittaker(const Partition& lambda) {
    SymFunc m = macdonald_P(lambda);
    // p_k -> (t^k − 1) p_k
    SymFunc scaled = scale_power_sums(m, [](int k) {
        return RatFunc(LaurentPoly::t(k) - LaurentPoly(1));
    });
    SymFunc out(Basis::p);
    for (const auto& [mu, c] : scaled.coeffs()) out.add_coeff(mu, c.subst_t0().subst_q_inv());
    return out;
}

SymFunc modified_schur(const Partition& lambda) {
    SymFunc s = schur(lambda);
    SymFunc scaled = scale_power_sums(s, [](int k) {
        return RatFunc(LaurentPoly(1) - LaurentPoly::t(k));
    });
    RatFunc inv_1mt = RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t(1));
    return scaled * inv_1mt;
}

namespace {

// split into homogeneous components (canonical basis)
std::map<int, SymFunc> homogeneous_parts(const SymFunc& f) {
    SymFunc cf = to_canonical(f);
    std::map<int, SymFunc> out;
    for (const auto& [mu, c] : cf.coeffs()) {
        auto [it, fresh] = out.try_emplace(mu.size(), SymFunc(Basis::p));
        it->second.add_coeff(mu, c);
    }
    return out;
}

// expand against an orthogonal family given per-degree weights; family(λ)
// must return the family element in p-coordinates plus its norm
template <typename Family>
std::map<Partition, RatFunc> expand_orthogonal(const SymFunc& f, Family&& family,
                                               const std::function<RatFunc(int)>& weight_of_part) {
    std::map<Partition, RatFunc> out;
    for (auto& [d, comp] : homogeneous_parts(f)) {
        const auto& ps = partitions_of(d);
        // weights for the pairing in which the family is orthogonal
        std::vector<RatFunc> w(ps.size());
        for (size_t i = 0; i < ps.size(); ++i) {
            RatFunc acc{z_factor(ps[i])};
            for (int part : ps[i].parts()) acc *= weight_of_part(part);
            w[i] = acc;
        }
        for (const auto& lam : ps) {
            auto [vec, norm] = family(lam);
            RatFunc acc(0);
            for (size_t i = 0; i < ps.size(); ++i) {
                if (vec[i].is_zero()) continue;
                RatFunc c = comp.coeff(ps[i]);
                if (c.is_zero()) continue;
                acc += c * vec[i] * w[i];
            }
            if (!acc.is_zero()) out[lam] = acc / norm;
        }
    }
    return out;
}

}  // namespace

std::map<Partition, RatFunc> expand_in_basis(const SymFunc& f, Basis target) {
    switch (target) {
        case Basis::p: {
            std::map<Partition, RatFunc> out;
            for (const auto& [k, v] : to_canonical(f).coeffs()) out[k] = v;
            return out;
        }
        case Basis::m: {
            std::map<Partition, RatFunc> out;
            for (auto& [d, comp] : homogeneous_parts(f)) {
                const auto& ps = partitions_of(d);
                const auto& p2m = p_to_m_matrix(d);
                for (size_t j = 0; j < ps.size(); ++j) {
                    RatFunc acc(0);
                    for (size_t i = 0; i < ps.size(); ++i) {
                        if (p2m[i][j] == 0) continue;
                        RatFunc c = comp.coeff(ps[i]);
                        if (!c.is_zero()) acc += c * RatFunc(p2m[i][j]);
                    }
                    if (!acc.is_zero()) out[ps[j]] = acc;
                }
            }
            return out;
        }
        case Basis::s: {
            // Hall pairing, Schur orthonormal: c_Y = Σ_μ f_μ χ^Y_μ
            std::map<Partition, RatFunc> out;
            for (auto& [d, comp] : homogeneous_parts(f)) {
                for (const auto& lam : partitions_of(d)) {
                    RatFunc acc(0);
                    for (const auto& [mu, c] : comp.coeffs()) {
                        Rat chi = sym_character(lam, mu);
                        if (chi != 0) acc += c * RatFunc(chi);
                    }
                    if (!acc.is_zero()) out[lam] = acc;
                }
            }
            return out;
        }
        case Basis::macdonald:
            return expand_orthogonal(
                f,
                [](const Partition& lam) {
                    const MacElem& e = macdonald_elem(lam);
                    return std::make_pair(e.p_coeffs, e.norm);
                },
                [](int k) {
                    return RatFunc(LaurentPoly(1) - LaurentPoly::q(k),
                                   LaurentPoly(1) - LaurentPoly::t(k));
                });
        case Basis::hl:
            // Hall-Littlewood pairing: z_λ Π 1/(1−t^{λᵢ})
            return expand_orthogonal(
                f,
                [](const Partition& lam) {
                    SymFunc h = hall_littlewood(lam);
                    const auto& ps = partitions_of(lam.size());
                    std::vector<RatFunc> vec(ps.size());
                    for (size_t i = 0; i < ps.size(); ++i) vec[i] = h.coeff(ps[i]);
                    RatFunc norm(0);
                    for (size_t i = 0; i < ps.size(); ++i) {
                        if (vec[i].is_zero()) continue;
                        RatFunc w{z_factor(ps[i])};
                        for (int part : ps[i].parts())
                            w *= RatFunc(LaurentPoly(1),
                                         LaurentPoly(1) - LaurentPoly::t(part));
                        norm += vec[i] * vec[i] * w;
                    }
                    return std::make_pair(vec, norm);
                },
                [](int k) {
                    return RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t(k));
                });
        case Basis::mschur: {
            // S̃_Y = φ(s_Y)/(1−t) with φ: p_k -> (1−t^k) p_k, so expand
            // φ^{-1}((1−t) f) in Schur
            RatFunc one_minus_t{LaurentPoly(1) - LaurentPoly::t(1)};
            SymFunc g = scale_power_sums(to_canonical(f) * one_minus_t, [](int k) {
                return RatFunc(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::t(k));
            });
            return expand_in_basis(g, Basis::s);
        }
        case Basis::qwhittaker:
            throw std::logic_error("expansion in the q-Whittaker basis is not provided");
    }
    throw std::logic_error("unreachable");
}

SymFunc from_basis(Basis b, const std::map<Partition, RatFunc>& coeffs) {
    SymFunc acc(Basis::p);
    for (const auto& [lam, c] : coeffs) {
        SymFunc elem;
        switch (b) {
            case Basis::p:
                elem = SymFunc::p_monomial(lam);
                break;
            case Basis::m:
                elem = to_canonical(SymFunc(Basis::m, {{lam, RatFunc(1)}}));
                break;
            case Basis::s:
                elem = schur(lam);
                break;
            case Basis::macdonald:
                elem = macdonald_P(lam);
                break;
            case Basis::hl:
                elem = hall_littlewood(lam);
                break;
            case Basis::qwhittaker:
                elem = q_whittaker(lam);
                break;
            case Basis::mschur:
                elem = modified_schur(lam);
                break;
        }
        acc += elem * c;
    }
    return acc;
}

RatFunc topological_locus(const SymFunc& f, int N) {
    if (N < 1) throw std::domain_error("topological locus needs N >= 1");
    SymFunc cf = to_canonical(f);
    std::map<int, RatFunc> pk;
    RatFunc acc(0);
    for (const auto& [mu, c] : cf.coeffs()) {
        RatFunc term = c;
        for (int part : mu.parts()) {
            auto it = pk.find(part);
            if (it == pk.end()) {
                LaurentPoly num = LaurentPoly(1) - LaurentPoly::t(-N * part);
                LaurentPoly den = LaurentPoly(1) - LaurentPoly::t(-part);
                it = pk.emplace(part, RatFunc(num, den)).first;
            }
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

}  // namespace rcs
