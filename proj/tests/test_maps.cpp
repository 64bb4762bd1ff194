#include <map>
#include <set>

#include "doctest.h"
#include "partlab/maps.hpp"
#include "partlab/shapes.hpp"

using namespace partlab;

namespace {

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

// Inverse of Glaisher's map: a part j*2^e with j odd becomes 2^e copies of j.
Partition unglaisher(const Partition& s)
{
    std::vector<int> parts;
    for (int v : s.parts()) {
        int copies = 1;
        while (v % 2 == 0) {
            v /= 2;
            copies *= 2;
        }
        parts.insert(parts.end(), copies, v);
    }
    return Partition::from_unsorted(parts);
}

// Labeled partitions of n counted directly: any partition, any set of
// values carrying one X copy, subject to the gap rule read off the sorted list.
long long brute_labeled_count(int n)
{
    long long count = 0;
    for_each_partition(n, [&](const Partition& p) {
        std::vector<int> values;
        for (int v : p.parts()) {
            if (values.empty() || values.back() != v) {
                values.push_back(v);
            }
        }
        const std::set<int> present(values.begin(), values.end());
        for (unsigned mask = 0; mask < (1U << values.size()); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (((mask >> i) & 1U) && present.count(values[i] + 1) > 0) {
                    ok = false;
                }
            }
            count += ok ? 1 : 0;
        }
    });
    return count;
}

}  // namespace

TEST_CASE("Sylvester's map")
{
    CHECK(sylvester(Partition{9, 7, 7, 5, 1, 1}) == Partition{10, 7, 5, 4, 3, 1});
    CHECK(sylvester(Partition{1}) == Partition{1});
    CHECK(sylvester(Partition{3}) == Partition{2, 1});
    CHECK(sylvester(Partition{}) == Partition{});
    CHECK_THROWS_WITH_AS((void)sylvester(Partition{4, 1}), doctest::Contains("part 4"), DomainError);

    using H = std::vector<HookData>;
    CHECK(sylvester_hooks(Partition{9, 7, 7, 5, 1, 1}) == H{{10, 7}, {5, 4}, {3, 1}});
}

TEST_CASE("Sylvester statistics")
{
    const auto r = sylvester_stats_check(Partition{9, 7, 7, 5, 1, 1});
    CHECK(r.passed);
    CHECK(dur2(Partition{9, 7, 7, 5, 1, 1}) == 3);
    CHECK(alternating_index(Partition{9, 7, 7, 5, 1, 1}) == 4);
    CHECK(sol(Partition{10, 7, 5, 4, 3, 1}) == 4);
    CHECK(sylvester_stats_check(Partition{1}).passed);
    for (const auto& p : odd_partitions(15)) {
        CHECK_MESSAGE(sylvester_stats_check(p).passed, to_string(p));
    }
}

TEST_CASE("Sylvester's map is a bijection onto strict partitions")
{
    for (int n = 0; n <= 20; ++n) {
        std::set<Partition> images;
        for (const auto& p : odd_partitions(n)) {
            const Partition s = sylvester(p);
            REQUIRE(is_strict(s));
            REQUIRE(size(s) == n);
            images.insert(s);
        }
        long long strict = 0;
        for_each_partition(n, [&](const Partition& p) { strict += is_strict(p) ? 1 : 0; });
        REQUIRE(static_cast<long long>(images.size()) == strict);
    }
}

TEST_CASE("Glaisher's map")
{
    CHECK(glaisher(Partition{11, 3, 1}) == Partition{11, 3, 1});
    CHECK(glaisher(Partition{1, 1}) == Partition{2});
    CHECK(glaisher(Partition{3, 3, 3}) == Partition{6, 3});
    CHECK_THROWS_AS((void)glaisher(Partition{2}), DomainError);
    for (int n = 0; n <= 20; ++n) {
        for (const auto& p : odd_partitions(n)) {
            const Partition g = glaisher(p);
            REQUIRE(is_strict(g));
            REQUIRE(unglaisher(g) == p);
        }
    }
}

TEST_CASE("labeled partitions")
{
    const LabeledPartition eta = parse_labeled("6x+3+3+1x");
    CHECK(eta.count(Label::X) == 2);
    CHECK(eta.count(Label::Y) == 2);
    CHECK(eta.size() == 13);
    CHECK(eta.values() == Partition{6, 3, 3, 1});
    CHECK(eta.is_valid());
    CHECK(to_string(eta) == "6x+3+3+1x");
    CHECK(to_compact_string(parse_labeled("2+2x+2")) == "2x+2^2");
    CHECK(to_compact_string(parse_labeled("")) == "ε");
    CHECK(parse_labeled("3+3x") == parse_labeled("3x+3"));
    CHECK(parse_labeled("3x+3").is_valid());
    CHECK_FALSE(parse_labeled("4+3x").is_valid());
    CHECK_FALSE(parse_labeled("3x+3x").is_valid());
    CHECK(parse_labeled("4x+2x").is_valid());
    CHECK_THROWS_AS((void)parse_labeled("3y"), DomainError);
    CHECK_THROWS_AS((void)parse_labeled("1+3"), DomainError);
}

TEST_CASE("labeled partition enumeration")
{
    for (int n = 0; n <= 10; ++n) {
        const auto all = labeled_partitions(n);
        CHECK(static_cast<long long>(all.size()) == brute_labeled_count(n));
        for (const auto& l : all) {
            REQUIRE(l.is_valid());
            REQUIRE(l.size() == n);
        }
    }
}

TEST_CASE("signed pairs")
{
    const SignedPair pr = parse_signed_pair("3+2|6x+3+3+1x");
    CHECK(pr.is_valid());
    const Monomial w = pr.weight();
    CHECK(w.x == 2);
    CHECK(w.y == 6);
    CHECK(w.q == 18);
    // Two parts carry the y label.
    CHECK(pr.sign() == 1);
    CHECK(to_string(pr) == "3+2|6x+3+3+1x");
    CHECK(to_compact_string(pr) == "(3+2, 6x+3^2+1x)");
    CHECK(to_compact_string(parse_signed_pair("0|6")) == "(ε, 6)");
    CHECK_THROWS_AS((void)parse_signed_pair("2+2|1"), DomainError);
    CHECK_THROWS_AS((void)parse_signed_pair("0|4+3x"), DomainError);
    const SignedPair bad{Partition{}, LabeledPartition({{4, Label::Y}, {3, Label::X}})};
    CHECK_FALSE(bad.is_valid());
    CHECK_THROWS_AS((void)involution_phi(bad), DomainError);
    CHECK_THROWS_AS((void)parse_signed_pair("3+2"), DomainError);
}

TEST_CASE("case analysis")
{
    const PairClass c = classify_pair(parse_signed_pair("3+2|6x+3+3+1x"));
    CHECK(c.kind == PairCase::Case2);
    CHECK(c.a == 3);
    CHECK(c.b == 3);
    CHECK(classify_pair(parse_signed_pair("2|3x+1x")).kind == PairCase::Fixed);
    const PairClass d = classify_pair(parse_signed_pair("1|5"));
    CHECK(d.kind == PairCase::Case2);
    CHECK(d.a == 1);
    CHECK(d.b == 5);
    CHECK(classify_pair(parse_signed_pair("0|6")).kind == PairCase::Case1);
    CHECK(std::string(to_string(PairCase::Case1)) == "CASE1");
    CHECK(std::string(to_string(PairCase::Fixed)) == "FIXED");
}

TEST_CASE("the involution on small pairs")
{
    CHECK(involution_phi(parse_signed_pair("0|6")) == parse_signed_pair("6|0"));
    CHECK(involution_phi(parse_signed_pair("6|0")) == parse_signed_pair("0|6"));
    CHECK(involution_phi(parse_signed_pair("3|3x")) == parse_signed_pair("0|3x+3"));
    CHECK(involution_phi(parse_signed_pair("2|3x+1x")) == parse_signed_pair("2|3x+1x"));
    CHECK(involution_phi(parse_signed_pair("1|5")) == parse_signed_pair("0|5+1"));
}

TEST_CASE("the involution is a sign-reversing, weight-preserving involution")
{
    for (int n = 0; n <= 10; ++n) {
        for (const auto& pr : signed_pairs(n)) {
            REQUIRE(pr.is_valid());
            const SignedPair im = involution_phi(pr);
            REQUIRE(im.is_valid());
            REQUIRE(involution_phi(im) == pr);
            REQUIRE(im.weight().x == pr.weight().x);
            REQUIRE(im.weight().y == pr.weight().y);
            REQUIRE(im.weight().q == pr.weight().q);
            if (classify_pair(pr).kind == PairCase::Fixed) {
                REQUIRE(im == pr);
            } else {
                REQUIRE(im.sign() == -pr.sign());
            }
        }
    }
}

TEST_CASE("fixed points and strict partitions")
{
    const SignedPair fixed = parse_signed_pair("2|3x+1x");
    CHECK(fixed_to_strict(fixed) == Partition{3, 2, 1});
    CHECK(strict_to_fixed(Partition{3, 2, 1}) == fixed);
    CHECK(fixed_to_strict(parse_signed_pair("0|6x")) == Partition{6});
    const SignedPair other = strict_to_fixed(Partition{5, 4, 2});
    CHECK(other == parse_signed_pair("5|4x+2x"));
    CHECK(classify_pair(other).kind == PairCase::Fixed);
    CHECK(fixed_to_strict(other) == Partition{5, 4, 2});
    CHECK_THROWS_AS((void)fixed_to_strict(parse_signed_pair("0|6")), DomainError);
    CHECK_THROWS_AS((void)strict_to_fixed(Partition{2, 2}), DomainError);

    for (int n = 0; n <= 16; ++n) {
        for_each_partition(n, [&](const Partition& t) {
            if (!is_strict(t)) {
                return;
            }
            const SignedPair pr = strict_to_fixed(t);
            REQUIRE(pr.is_valid());
            REQUIRE(classify_pair(pr).kind == PairCase::Fixed);
            REQUIRE(fixed_to_strict(pr) == t);
            REQUIRE(pr.weight().x == k_measure(t, 2));
        });
    }
}

TEST_CASE("odd-gap decomposition")
{
    const OddGapSplit s = lemma51_decompose(Partition{8, 5, 5, 2, 2, 2, 1});
    CHECK(s.sigma == Partition{7, 6, 3, 1});
    CHECK(s.tau == Partition{4, 2, 2});
    CHECK(lemma51_compose(s.sigma, s.tau) == Partition{8, 5, 5, 2, 2, 2, 1});

    const OddGapSplit even = lemma51_decompose(Partition{4, 2, 2});
    CHECK(even.sigma.empty());
    CHECK(even.tau == Partition{4, 2, 2});

    for (int n = 0; n <= 14; ++n) {
        for (const auto& p : partitions_of(n)) {
            const OddGapSplit d = lemma51_decompose(p);
            REQUIRE(is_strict(d.sigma));
            REQUIRE(is_even_parts(d.tau));
            REQUIRE(lemma51_compose(d.sigma, d.tau) == p);
            const std::vector<int> ascending(p.vec().rbegin(), p.vec().rend());
            REQUIRE(length(d.sigma) == parity_index(ascending));
            if (!p.empty() && p.largest() % 2 == 0) {
                REQUIRE(d.tau.largest() == p.largest() - length(d.sigma));
            }
        }
    }
}
