#include "rcs/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace rcs {

SymFunc::SymFunc(Basis b, std::map<Partition, RatFunc> coeffs) : basis_(b) {
    for (auto& [k, v] : coeffs)
        if (!v.is_zero()) coeffs_.emplace(k, std::move(v));
}

SymFunc SymFunc::p_monomial(const Partition& mu, RatFunc c) {
    SymFunc f(Basis::p);
    if (!c.is_zero()) f.coeffs_.emplace(mu, std::move(c));
    return f;
}

SymFunc SymFunc::constant(const RatFunc& c) { return p_monomial(Partition(), c); }

int SymFunc::degree_bound() const {
    int d = 0;
    for (const auto& [k, v] : coeffs_) d = std::max(d, k.size());
    return d;
}

RatFunc SymFunc::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? RatFunc(0) : it->second;
}

void SymFunc::set_coeff(const Partition& mu, RatFunc c) {
    if (c.is_zero())
        coeffs_.erase(mu);
    else
        coeffs_[mu] = std::move(c);
}

void SymFunc::add_coeff(const Partition& mu, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(mu);
    if (it == coeffs_.end()) {
        coeffs_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_) throw std::logic_error("basis mismatch in SymFunc addition");
    for (const auto& [k, v] : o.coeffs_) add_coeff(k, v);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_) throw std::logic_error("basis mismatch in SymFunc subtraction");
    for (const auto& [k, v] : o.coeffs_) add_coeff(k, -v);
    return *this;
}

SymFunc SymFunc::operator*(const RatFunc& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    SymFunc ca = to_canonical(a), cb = to_canonical(b);
    return ca.coeffs() == cb.coeffs();
}

Rat z_factor(const Partition& lambda) {
    Rat z(1);
    auto m = lambda.multiplicities();
    for (size_t j = 1; j < m.size(); ++j) {
        for (int r = 0; r < m[j]; ++r) z *= Rat(static_cast<long>(j));
        for (int r = 2; r <= m[j]; ++r) z *= Rat(r);
    }
    return z;
}

RatFunc qt_weight(const Partition& lambda) {
    RatFunc w{z_factor(lambda)};
    for (int part : lambda.parts()) {
        RatFunc f(LaurentPoly(1) - LaurentPoly::q(part), LaurentPoly(1) - LaurentPoly::t(part));
        w *= f;
    }
    return w;
}

// ---- characters ------------------------------------------------------------

namespace {

struct PairHash {
    size_t operator()(const std::pair<Partition, Partition>& p) const {
        return p.first.hash() * 31 + p.second.hash();
    }
};

// Murnaghan–Nakayama: χ^λ_μ = Σ over border strips of length μ₁ removed
// from λ of (−1)^{height} χ^{λ−strip}_{μ−μ₁}
Rat mn_character(const Partition& lambda, const Partition& mu) {
    static std::mutex mtx;
    static std::unordered_map<std::pair<Partition, Partition>, Rat, PairHash> cache;
    if (lambda.size() != mu.size()) throw std::logic_error("character needs equal sizes");
    if (lambda.empty()) return Rat(1);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({lambda, mu});
        if (it != cache.end()) return it->second;
    }
    int k = mu.parts()[0];
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest = rest_parts.empty() ? Partition() : Partition(rest_parts);

    Rat total(0);
    // remove a border strip of size k: in beta-set coordinates, subtract k
    // from one first-column hook length
    std::vector<int> beta(lambda.length());
    for (int i = 0; i < lambda.length(); ++i)
        beta[i] = lambda.parts()[i] + (lambda.length() - 1 - i);
    for (int i = 0; i < lambda.length(); ++i) {
        int nb = beta[i] - k;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        // strip height = number of beta entries strictly between nb and beta[i]
        int height = 0;
        for (int b : beta)
            if (b > nb && b < beta[i]) ++height;
        // convert back to a partition
        std::vector<int> parts;
        int n = static_cast<int>(nbeta.size());
        for (int j = 0; j < n; ++j) {
            int part = nbeta[j] - (n - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        Rat sign = (height % 2) ? Rat(-1) : Rat(1);
        total += sign * mn_character(parts.empty() ? Partition() : Partition(parts), rest);
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(lambda, mu), total);
    return total;
}

}  // namespace

Rat sym_character(const Partition& lambda, const Partition& mu) { return mn_character(lambda, mu); }

SymFunc schur(const Partition& lambda) {
    SymFunc f(Basis::p);
    int d = lambda.size();
    for (const auto& mu : partitions_of(d)) {
        Rat chi = sym_character(lambda, mu);
        if (chi != 0) f.set_coeff(mu, RatFunc(chi / z_factor(mu)));
    }
    return f;
}

// ---- monomial transitions ---------------------------------------------------

int partition_index(const Partition& lambda) {
    const auto& ps = partitions_of(lambda.size());
    auto it = std::lower_bound(ps.begin(), ps.end(), lambda);
    return static_cast<int>(it - ps.begin());
}

namespace {

// coefficient of m_μ in p_k · m_λ: number of positions i of μ with
// sort(μ - k e_i) = λ
std::map<Partition, Rat> mult_p_into_m(int k, const Partition& lambda) {
    std::map<Partition, Rat> out;
    // candidate results: add k to an existing part or as a new part
    std::vector<int> base = lambda.parts();
    std::vector<std::vector<int>> candidates;
    for (size_t i = 0; i < base.size(); ++i) {
        // only distinct part values produce distinct μ
        if (i > 0 && base[i] == base[i - 1]) continue;
        std::vector<int> mu = base;
        mu[i] += k;
        std::sort(mu.rbegin(), mu.rend());
        candidates.push_back(std::move(mu));
    }
    {
        std::vector<int> mu = base;
        mu.push_back(k);
        std::sort(mu.rbegin(), mu.rend());
        candidates.push_back(std::move(mu));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& muv : candidates) {
        Partition mu(muv);
        // count positions i with sort(μ - k e_i) = λ
        int count = 0;
        const auto& mp = mu.parts();
        for (size_t i = 0; i < mp.size(); ++i) {
            if (i > 0 && mp[i] == mp[i - 1]) {
                // identical positions give identical reductions; count each
            }
            int v = mp[i] - k;
            if (v < 0) continue;
            std::vector<int> red;
            red.reserve(mp.size());
            for (size_t j = 0; j < mp.size(); ++j)
                if (j != i) red.push_back(mp[j]);
            if (v > 0) red.push_back(v);
            std::sort(red.rbegin(), red.rend());
            if (red == lambda.parts()) ++count;
        }
        if (count) out[mu] = Rat(count);
    }
    return out;
}

struct DegreeMatrices {
    std::vector<std::vector<Rat>> p2m;  // rows p_μ over columns m_λ
    std::vector<std::vector<Rat>> m2p;  // rows m_λ over columns p_μ
};

const DegreeMatrices& degree_matrices(int d) {
    static std::mutex mtx;
    static std::map<int, DegreeMatrices> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    const auto& ps = partitions_of(d);
    int n = static_cast<int>(ps.size());
    DegreeMatrices dm;
    dm.p2m.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        // expand p_μ by multiplying p_k into the growing m-expansion
        std::map<Partition, Rat> acc;
        acc[Partition()] = Rat(1);
        for (int part : ps[i].parts()) {
            std::map<Partition, Rat> next;
            for (const auto& [lam, c] : acc)
                for (const auto& [mu, w] : mult_p_into_m(part, lam)) next[mu] += c * w;
            acc = std::move(next);
        }
        for (const auto& [lam, c] : acc) {
            if (c == 0) continue;
            int j = partition_index(lam);
            dm.p2m[i][j] = c;
        }
    }

    // invert by Gauss-Jordan over Q; cheap at these sizes
    std::vector<std::vector<Rat>> a = dm.p2m;
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("singular p->m transition");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rat s = 1 / a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] *= s;
            inv[col][c] *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    // inv is now (p2m)^{-1}: rows m_λ over columns p_μ
    dm.m2p = std::move(inv);
    return cache.emplace(d, std::move(dm)).first->second;
}

}  // namespace

const std::vector<std::vector<Rat>>& p_to_m_matrix(int d) { return degree_matrices(d).p2m; }
const std::vector<std::vector<Rat>>& m_to_p_matrix(int d) { return degree_matrices(d).m2p; }

SymFunc to_canonical(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::p:
            return f;
        case Basis::m: {
            SymFunc out(Basis::p);
            for (const auto& [lam, c] : f.coeffs()) {
                int d = lam.size();
                const auto& m2p = m_to_p_matrix(d);
                const auto& ps = partitions_of(d);
                int row = partition_index(lam);
                for (size_t j = 0; j < ps.size(); ++j)
                    if (m2p[row][j] != 0) out.add_coeff(ps[j], c * RatFunc(m2p[row][j]));
            }
            return out;
        }
        case Basis::s: {
            SymFunc out(Basis::p);
            for (const auto& [lam, c] : f.coeffs()) {
                SymFunc sl = schur(lam);
                for (const auto& [mu, w] : sl.coeffs()) out.add_coeff(mu, c * w);
            }
            return out;
        }
        default:
            throw std::logic_error(
                "to_canonical: Macdonald-family bases are converted via the macdonald module");
    }
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc cf = to_canonical(f), cg = to_canonical(g);
    SymFunc out(Basis::p);
    for (const auto& [a, ca] : cf.coeffs())
        for (const auto& [b, cb] : cg.coeffs()) {
            // p_a · p_b = p_{a ∪ b}
            std::vector<int> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            out.add_coeff(parts.empty() ? Partition() : Partition(parts), ca * cb);
        }
    return out;
}

RatFunc qt_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc cf = to_canonical(f), cg = to_canonical(g);
    RatFunc acc(0);
    const auto* small = &cf;
    const auto* large = &cg;
    if (small->coeffs().size() > large->coeffs().size()) std::swap(small, large);
    for (const auto& [mu, c] : small->coeffs()) {
        RatFunc other = large->coeff(mu);
        if (other.is_zero()) continue;
        acc += c * other * qt_weight(mu);
    }
    return acc;
}

SymFunc scale_power_sums(const SymFunc& f, const std::function<RatFunc(int)>& factor) {
    SymFunc cf = to_canonical(f);
    SymFunc out(Basis::p);
    for (const auto& [mu, c] : cf.coeffs()) {
        RatFunc w = c;
        for (int part : mu.parts()) w *= factor(part);
        out.add_coeff(mu, w);
    }
    return out;
}

}  // namespace rcs
