#include "rcs/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rcs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int part, int count) {
    if (part <= 0 || count <= 0) return Partition();
    return Partition(std::vector<int>(count, part));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

long Partition::sq_norm() const {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

std::pair<int, int> Partition::arm_leg(int row, int col) const {
    if (row < 1 || row > length() || col < 1 || col > parts_[row - 1])
        throw std::domain_error("cell outside diagram");
    int arm = parts_[row - 1] - col;
    int leg = 0;
    for (int i = row; i < length(); ++i)
        if (parts_[i] >= col) ++leg;
    return {arm, leg};
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(height() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty partition text");
    if (s == "0") return Partition();
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition text: " + s);
        parts.push_back(v);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
    // reverse-lex within any size: larger first part first
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                        a.parts_.end());
}

size_t Partition::hash() const {
    size_t h = 1469598103934665603ull;
    for (int p : parts_) {
        h ^= static_cast<size_t>(p);
        h *= 1099511628211ull;
    }
    return h;
}

Dominance dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw std::domain_error("dominance needs equal sizes");
    bool le = true, ge = true;
    long sm = 0, sl = 0;
    int n = std::max(mu.length(), lambda.length());
    for (int i = 0; i < n; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) le = false;
        if (sm < sl) ge = false;
    }
    if (le) return Dominance::less_equal;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur.empty() ? Partition() : Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int d) {
    static std::mutex mtx;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (d >= 0) gen_partitions(d, d == 0 ? 1 : d, cur, out);
    return cache.emplace(d, std::move(out)).first->second;
}

long partition_count(int d) {
    // independent recursive counter with the pentagonal-free textbook
    // recurrence p(n, k) = p(n-k, k) + p(n, k-1)
    if (d < 0) return 0;
    std::vector<std::vector<long>> p(d + 1, std::vector<long>(d + 1, 0));
    for (int k = 0; k <= d; ++k) p[0][k] = 1;
    for (int n = 1; n <= d; ++n)
        for (int k = 1; k <= d; ++k)
            p[n][k] = p[n][k - 1] + (n >= k ? p[n - k][k] : 0);
    return p[d][d];
}

}  // namespace rcs
