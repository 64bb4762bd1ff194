#ifndef PARTLAB_VERIFY_HPP
#define PARTLAB_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/core.hpp"
#include "partlab/maps.hpp"
#include "partlab/qseries.hpp"
#include "partlab/report.hpp"
#include "partlab/shapes.hpp"

namespace partlab {

/// Conjunctive filter over the partitions of n. The type, dur2_sub and dur2
/// filters read the 2-modular shape; sol needs strict partitions and alt
/// needs odd ones (partitions outside those domains never match).
struct FamilySpec {
    int n = 0;
    bool strict = false;
    bool odd_parts = false;
    std::optional<int> max_part;
    std::optional<int> length;
    std::optional<int> sol;
    std::optional<int> dur2;
    std::optional<int> dur2_sub;
    std::optional<DurfeeType> type;
    std::optional<int> alt;

    [[nodiscard]] bool matches(const Partition& p) const;
};

/// Qualifying partitions in reverse-lexicographic order.
[[nodiscard]] std::vector<Partition> enumerate(const FamilySpec& spec);

/// Strict partitions of n with k parts and m runs of odd length.
[[nodiscard]] long long count_D(int n, int k, int m);
/// Odd partitions of n, 2-modular type I, Dur2 = k, dur2 = m.
[[nodiscard]] long long count_A1(int n, int k, int m);
/// Odd partitions of n, 2-modular type II, Dur2 = k, dur2 = m.
[[nodiscard]] long long count_A2(int n, int k, int m);
/// Odd partitions of n with Dur2 = k and alternating index m.
[[nodiscard]] long long count_B(int n, int k, int m);

/// Bounds for one checker run. Unset fields fall back to the checker's
/// default (the desk profile).
struct Bounds {
    std::optional<int> nmax;
    std::optional<int> order;
    std::optional<int> k;  ///< EQ31 only; unset runs k = 1, 2, 3
};

/// Known checker names, in the order `verify_all` runs them.
[[nodiscard]] const std::vector<std::string>& checker_names();

/// Runs one checker. Throws DomainError for an unknown name.
[[nodiscard]] VerificationReport verify(std::string_view name, const Bounds& bounds = {});

/// Every checker at the desk profile. Uses up to `threads` workers (0 picks
/// PARTITION_LAB_THREADS or the hardware concurrency); results are always
/// returned in checker_names() order.
[[nodiscard]] std::vector<VerificationReport> verify_all(unsigned threads = 0);

/// Enumeration series sum over partitions of n <= order of x^{fx} y^{fy} q^n.
template <typename Filter, typename StatX, typename StatY>
[[nodiscard]] MultiSeries enumeration_series(int order, Filter&& keep, StatX&& fx, StatY&& fy)
{
    MultiSeries s(order);
    for (int n = 0; n <= order; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            if (keep(p)) {
                s.add_term(n, fx(p), fy(p), 1);
            }
        });
    }
    return s;
}

struct ExampleSets {
    std::string a_name;
    std::string b_name;
    std::string d_name;
    std::vector<Partition> a;
    std::vector<Partition> b;
    std::vector<Partition> d;
};

/// The three equinumerous sets for preset "16-4-2" or "15-3-1".
[[nodiscard]] ExampleSets example_sets(std::string_view preset);

/// Rows "(λ, η) | (λ', η')" pairing each negative pair of total size n with
/// its image, in a canonical order, preceded by the header "- | +".
[[nodiscard]] std::vector<std::string> involution_table(int n);
/// Fixed points of the involution at total size n.
[[nodiscard]] std::vector<SignedPair> involution_fixed_points(int n);

}  // namespace partlab

#endif  // PARTLAB_VERIFY_HPP
