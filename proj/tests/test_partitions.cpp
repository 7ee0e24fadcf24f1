#include "doctest.h"

#include "rcs/partition.hpp"

using namespace rcs;

TEST_CASE("conjugate") {
    CHECK(Partition({2}).conjugate() == Partition({1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    // involution on everything up to size 12
    for (int d = 0; d <= 12; ++d)
        for (const auto& p : partitions_of(d)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("arm and leg") {
    CHECK(Partition({2, 1}).arm_leg(1, 1) == std::pair<int, int>{1, 1});
    CHECK(Partition({2}).arm_leg(1, 2) == std::pair<int, int>{0, 0});
    CHECK(Partition({3, 3, 1}).arm_leg(1, 2) == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(Partition({2}).arm_leg(2, 1), std::domain_error);
    CHECK_THROWS_AS(Partition({2}).arm_leg(1, 3), std::domain_error);
}

TEST_CASE("cell checksum identity") {
    // Σ_cells (arm+leg+1) = (‖λ‖ + ‖λᵀ‖)/2, brute force over cells
    for (int d = 0; d <= 10; ++d)
        for (const auto& p : partitions_of(d)) {
            long sum = 0;
            for (int r = 1; r <= p.length(); ++r)
                for (int c = 1; c <= p.parts()[r - 1]; ++c) {
                    auto [a, l] = p.arm_leg(r, c);
                    sum += a + l + 1;
                }
            CHECK(sum == (p.sq_norm() + p.conjugate().sq_norm()) / 2);
        }
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition({2, 1}), Partition({3})) == Dominance::less_equal);
    CHECK(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})) == Dominance::incomparable);
    CHECK(dominance_leq(Partition({3, 1}), Partition({3, 1})) == Dominance::less_equal);
    CHECK(dominance_leq(Partition({3}), Partition({2, 1})) == Dominance::greater);
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), std::domain_error);
}

TEST_CASE("enumerate") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(4).size() == 5);
    // oracle: independent recursive partition counter
    CHECK(partitions_of(10).size() == static_cast<size_t>(partition_count(10)));
    CHECK(partition_count(10) == 42);

    // reverse-lex order, and dominance-compatible: dominating partitions come
    // first
    for (int d = 1; d <= 10; ++d) {
        const auto& ps = partitions_of(d);
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] < ps[i + 1]);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                CHECK(dominance_leq(ps[i], ps[j]) != Dominance::less_equal);
    }
}

TEST_CASE("sq_norm and parity") {
    CHECK(Partition({2, 1}).sq_norm() == 5);
    CHECK(Partition().sq_norm() == 0);
    CHECK(Partition({3, 3}).sq_norm() == 18);
    for (int d = 0; d <= 12; ++d)
        for (const auto& p : partitions_of(d)) CHECK((p.sq_norm() - p.size()) % 2 == 0);
}

TEST_CASE("text form") {
    CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
    CHECK(Partition().to_string() == "0");
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("0") == Partition());
    CHECK_THROWS(Partition::parse("x"));
}
