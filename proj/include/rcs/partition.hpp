#pragma once

// Young-diagram combinatorics: the index type for every basis and matrix in
// the library.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcs {

class Partition {
public:
    Partition() = default;
    // parts must be weakly decreasing and positive
    explicit Partition(std::vector<int> parts);
    static Partition rectangle(int part, int count);  // [part^count]
    static Partition single_row(int n) { return n ? Partition({n}) : Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                     // |λ|
    int length() const { return static_cast<int>(parts_.size()); }  // l(λ)
    int height() const { return parts_.empty() ? 0 : parts_[0]; }   // h(λ) = λ₁
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0 beyond

    Partition conjugate() const;
    long sq_norm() const;  // Σ λᵢ²

    // arm = λ_row − col, leg = λᵀ_col − row for a 1-based in-diagram cell
    std::pair<int, int> arm_leg(int row, int col) const;

    // multiplicity vector m_j = #parts equal to j, and z_λ = Π j^{m_j} m_j!
    std::vector<int> multiplicities() const;

    // text form: comma-separated parts, empty partition rendered "0"
    std::string to_string() const;
    static Partition parse(const std::string& s);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // reverse-lexicographic: [d] first, [1^d] last within a degree
    friend bool operator<(const Partition& a, const Partition& b);

    size_t hash() const;

private:
    std::vector<int> parts_;
};

enum class Dominance { less_equal, greater, incomparable };

// partial-sum comparison of partitions of equal size
Dominance dominance_leq(const Partition& mu, const Partition& lambda);

// all partitions of d in reverse-lexicographic order ([d], ..., [1^d]);
// a linear extension of dominance read downward
const std::vector<Partition>& partitions_of(int d);

// independent count p(d), used as a test oracle
long partition_count(int d);

struct PartitionHash {
    size_t operator()(const Partition& p) const { return p.hash(); }
};

}  // namespace rcs
