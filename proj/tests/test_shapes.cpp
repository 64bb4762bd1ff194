#include "doctest.h"
#include "partlab/shapes.hpp"

using namespace partlab;

namespace {

const Partition kLambda{7, 6, 6, 5, 1, 1};
const Partition kOdd{9, 7, 7, 5, 1, 1};

// Largest s such that the s x s square fits in the diagram.
int brute_durfee(const Partition& p)
{
    int s = 0;
    while (p.part(static_cast<std::size_t>(s + 1)) >= s + 1) {
        ++s;
    }
    return s;
}

std::vector<Partition> odd_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (is_odd_parts(p)) {
            out.push_back(p);
        }
    });
    return out;
}

bool columns_non_increasing(const ModularDiagram& d)
{
    for (std::size_t i = 1; i < d.rows.size(); ++i) {
        for (std::size_t j = 0; j < d.rows[i].size(); ++j) {
            if (j >= d.rows[i - 1].size() || d.rows[i][j] > d.rows[i - 1][j]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("Durfee side")
{
    CHECK(durfee_side(kLambda) == 4);
    CHECK(durfee_side(Partition{}) == 0);
    CHECK(durfee_side(Partition{5, 3, 3, 3, 2}) == 3);
    for (int n = 0; n <= 15; ++n) {
        for (const auto& p : partitions_of(n)) {
            REQUIRE(durfee_side(p) == brute_durfee(p));
        }
    }
}

TEST_CASE("ordinary triple")
{
    const Triple t = ordinary_triple(kLambda);
    CHECK(t.durfee == 4);
    CHECK(t.right == Partition{3, 2, 2, 1});
    CHECK(t.below == Partition{1, 1});
    const Triple e = ordinary_triple(Partition{});
    CHECK(e.durfee == 0);
    CHECK(e.right.empty());
    CHECK(e.below.empty());
    const Triple f = ordinary_triple(Partition{5, 3, 3, 3, 2});
    CHECK(f.durfee == 3);
    CHECK(f.right == Partition{2});
    CHECK(f.below == Partition{3, 2});
}

TEST_CASE("ordinary triple reconstructs the partition")
{
    for (int n = 0; n <= 18; ++n) {
        for (const auto& p : partitions_of(n)) {
            const Triple t = ordinary_triple(p);
            REQUIRE(size(p) == 1LL * t.durfee * t.durfee + size(t.right) + size(t.below));
            std::vector<int> rebuilt;
            for (int i = 1; i <= t.durfee; ++i) {
                rebuilt.push_back(t.durfee + t.right.part(static_cast<std::size_t>(i)));
            }
            rebuilt.insert(rebuilt.end(), t.below.vec().begin(), t.below.vec().end());
            REQUIRE(Partition(rebuilt) == p);
        }
    }
}

TEST_CASE("sub-Durfee side")
{
    CHECK(sub_durfee_side(kLambda) == SubDurfee{DurfeeType::TypeI, 1});
    CHECK(sub_durfee_side(Partition{5, 3, 3, 3, 2}) == SubDurfee{DurfeeType::TypeII, 1});
    CHECK(sub_durfee_side(Partition{1}) == SubDurfee{DurfeeType::TypeII, 0});
    CHECK_THROWS_AS((void)sub_durfee_side(Partition{}), DomainError);
}

TEST_CASE("2-modular diagrams")
{
    using Rows = std::vector<std::vector<int>>;
    CHECK(modular2_diagram(kLambda, BorderStyle::LastCell).rows
          == Rows{{2, 2, 2, 1}, {2, 2, 2}, {2, 2, 2}, {2, 2, 1}, {1}, {1}});
    CHECK(modular2_diagram(kOdd, BorderStyle::RightBorder).rows
          == Rows{{2, 2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 1, 2}, {2, 2, 1}, {1}, {1}});
    CHECK(modular2_diagram(Partition{1}, BorderStyle::LastCell).rows == Rows{{1}});
    CHECK(modular2_diagram(Partition{1}, BorderStyle::RightBorder).rows == Rows{{1}});
    CHECK(modular2_diagram(kLambda, BorderStyle::LastCell).render() == "2221\n222\n222\n221\n1\n1\n");
    CHECK_THROWS_AS((void)modular2_diagram(kLambda, BorderStyle::RightBorder), DomainError);
}

TEST_CASE("2-modular diagrams: row sums, shapes and columns")
{
    for (int n = 0; n <= 25; ++n) {
        for (const auto& p : partitions_of(n)) {
            const ModularDiagram d = modular2_diagram(p, BorderStyle::LastCell);
            REQUIRE(d.shape() == modular2_shape(p));
            for (std::size_t i = 0; i < d.rows.size(); ++i) {
                int sum = 0;
                for (int e : d.rows[i]) {
                    sum += e;
                }
                REQUIRE(sum == p.vec()[i]);
            }
            REQUIRE(columns_non_increasing(d));
            if (is_odd_parts(p)) {
                const ModularDiagram r = modular2_diagram(p, BorderStyle::RightBorder);
                REQUIRE(r.shape() == d.shape());
                REQUIRE(columns_non_increasing(r));
            }
        }
    }
}

TEST_CASE("2-modular Durfee statistics")
{
    CHECK(dur2(kLambda) == 3);
    CHECK(dur2(kOdd) == 3);
    CHECK(dur2(Partition{}) == 0);
    CHECK(dur2_sub(kLambda) == SubDurfee{DurfeeType::TypeII, 1});
    CHECK(dur2_sub(kOdd) == SubDurfee{DurfeeType::TypeI, 1});
    CHECK(dur2_sub(Partition{11, 3, 1}) == SubDurfee{DurfeeType::TypeII, 0});
    CHECK_THROWS_AS((void)dur2_sub(Partition{}), DomainError);
}

TEST_CASE("2-modular triple")
{
    const Triple t = modular2_triple(kOdd);
    CHECK(t.durfee == 3);
    CHECK(t.right == Partition{4, 2, 2});
    CHECK(t.below == Partition{5, 1, 1});
    CHECK(t.flavor == TripleFlavor::Modular2);
    const Triple one = modular2_triple(Partition{1});
    CHECK(one.durfee == 1);
    CHECK(one.right.empty());
    CHECK(one.below.empty());
    const Triple g = modular2_triple(Partition{11, 3, 1});
    CHECK(g.durfee == 2);
    CHECK(g.right == Partition{8});
    CHECK(g.below == Partition{1});
    CHECK_THROWS_AS((void)modular2_triple(kLambda), DomainError);
    CHECK_THROWS_AS((void)modular2_triple(Partition{}), DomainError);
}

TEST_CASE("2-modular triple reconstructs odd partitions")
{
    for (int n = 1; n <= 30; ++n) {
        for (const auto& p : odd_partitions(n)) {
            const Triple t = modular2_triple(p);
            const int k = t.durfee;
            REQUIRE(is_even_parts(t.right));
            REQUIRE(size(p) == 1LL * k * (2 * k - 1) + size(t.right) + size(t.below));
            std::vector<int> rebuilt;
            for (int i = 1; i <= k; ++i) {
                rebuilt.push_back(2 * k - 1 + t.right.part(static_cast<std::size_t>(i)));
            }
            rebuilt.insert(rebuilt.end(), t.below.vec().begin(), t.below.vec().end());
            REQUIRE(Partition(rebuilt) == p);
        }
    }
}

TEST_CASE("2-modular conjugate of even partitions")
{
    CHECK(modular2_conjugate_even(Partition{4, 2, 2}) == Partition{6, 2});
    CHECK(modular2_conjugate_even(Partition{}) == Partition{});
    CHECK(modular2_conjugate_even(Partition{2, 2}) == Partition{4});
    CHECK_THROWS_AS((void)modular2_conjugate_even(Partition{3}), DomainError);
    for (int n = 0; n <= 30; n += 2) {
        for (const auto& p : partitions_of(n)) {
            if (!is_even_parts(p)) {
                continue;
            }
            const Partition c = modular2_conjugate_even(p);
            REQUIRE(is_even_parts(c));
            REQUIRE(size(c) == n);
            REQUIRE(modular2_conjugate_even(c) == p);
        }
    }
}

TEST_CASE("alternating index")
{
    CHECK(alternating_index(kOdd) == 4);
    CHECK(alternating_index(Partition{5, 5, 3, 3}) == 2);
    CHECK(alternating_index(Partition{3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == 1);
    CHECK(alternating_index(Partition{}) == 0);
    CHECK_THROWS_AS((void)alternating_index(kLambda), DomainError);
}

TEST_CASE("alternating index is even exactly for type I")
{
    for (int n = 1; n <= 26; ++n) {
        for (const auto& p : odd_partitions(n)) {
            const bool even = alternating_index(p) % 2 == 0;
            REQUIRE_MESSAGE(even == (dur2_sub(p).type == DurfeeType::TypeI), to_string(p));
        }
    }
}

TEST_CASE("type names")
{
    CHECK(std::string(to_string(DurfeeType::TypeI)) == "I");
    CHECK(std::string(to_string(DurfeeType::TypeII)) == "II");
}
