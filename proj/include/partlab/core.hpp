#ifndef PARTLAB_CORE_HPP
#define PARTLAB_CORE_HPP

#include <compare>
#include <cstdint>
#include <algorithm>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partlab {

/// Exact integer type shared by every module.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation is applied outside the domain on which it is
/// defined (a statistic of strict partitions on a non-strict input, an odd-part
/// construction on a partition with an even part, a malformed literal, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An integer partition stored as its non-increasing list of positive parts.
/// The empty list is the empty partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws DomainError unless `parts` is non-increasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts `parts` into non-increasing order first; zeros are dropped.
    static Partition from_unsorted(std::vector<int> parts);

    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    [[nodiscard]] const std::vector<int>& vec() const noexcept { return parts_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// 1-based access, matching the usual lambda_i notation. Returns 0 past the end.
    [[nodiscard]] int part(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    [[nodiscard]] int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Finite integer sequence with no ordering constraint.
using IntSequence = std::vector<int>;

[[nodiscard]] long long size(const Partition& p) noexcept;
[[nodiscard]] int length(const Partition& p) noexcept;
[[nodiscard]] int multiplicity(const Partition& p, int j);
[[nodiscard]] int distinct_parts(const Partition& p) noexcept;

[[nodiscard]] bool is_strict(const Partition& p) noexcept;
[[nodiscard]] bool is_odd_parts(const Partition& p) noexcept;
[[nodiscard]] bool is_even_parts(const Partition& p) noexcept;

/// Maximal blocks of consecutive integers of a strict partition, largest first.
[[nodiscard]] std::vector<std::vector<int>> runs(const Partition& p);

/// Number of maximal runs of odd length ("sequences of odd length").
[[nodiscard]] int sol(const Partition& p);

/// Longest subsequence of parts whose pairwise differences are all >= k.
[[nodiscard]] int k_measure(const Partition& p, int k);

/// Multiset union of parts.
[[nodiscard]] Partition partition_union(const Partition& p, const Partition& r);

/// Transpose of the Ferrers diagram.
[[nodiscard]] Partition conjugate(const Partition& p);

/// Number of parity switches while scanning 0, s_1, ..., s_l.
[[nodiscard]] int parity_index(std::span<const int> s) noexcept;

/// Calls f(const Partition&) for every partition of n in reverse-lexicographic
/// order (n first, 1+1+...+1 last). Parts never exceed `max_part`.
template <typename F>
void for_each_partition(int n, F&& f, int max_part = std::numeric_limits<int>::max());

[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// Throw DomainError naming the first offending part.
void require_strict(const Partition& p, std::string_view what);
void require_odd_parts(const Partition& p, std::string_view what);
void require_even_parts(const Partition& p, std::string_view what);

/// Literal format: parts joined by '+', non-increasing; "" or "0" is the
/// empty partition.
[[nodiscard]] Partition parse_partition(std::string_view text);
[[nodiscard]] std::string to_string(const Partition& p);

/// Compact display form with exponents for repeated parts, e.g. "4+3^2+1".
/// The empty partition renders as "ε".
[[nodiscard]] std::string to_compact_string(const Partition& p);

namespace detail {

template <typename F>
void partitions_rec(int remaining, int max_part, std::vector<int>& buffer, F& f)
{
    if (remaining == 0) {
        f(Partition(buffer));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        buffer.push_back(part);
        partitions_rec(remaining - part, part, buffer, f);
        buffer.pop_back();
    }
}

}  // namespace detail

template <typename F>
void for_each_partition(int n, F&& f, int max_part)
{
    if (n < 0) {
        throw DomainError("cannot enumerate partitions of a negative integer");
    }
    std::vector<int> buffer;
    detail::partitions_rec(n, max_part, buffer, f);
}

}  // namespace partlab

#endif  // PARTLAB_CORE_HPP
