#ifndef PARTLAB_MAPS_HPP
#define PARTLAB_MAPS_HPP

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/core.hpp"
#include "partlab/qseries.hpp"
#include "partlab/report.hpp"

namespace partlab {

// ---------------------------------------------------------------------------
// Sylvester and Glaisher

/// Cell count and 2-count of one northwest-border hook of the right-border
/// 2-modular diagram.
struct HookData {
    int cells = 0;
    int twos = 0;

    friend bool operator==(const HookData&, const HookData&) = default;
};

/// Hooks h_1..h_k, k = dur2(p). Odd parts only.
[[nodiscard]] std::vector<HookData> sylvester_hooks(const Partition& p);

/// Sylvester's bijection from odd partitions to strict partitions of the same
/// size: the hook lengths and 2-counts listed alternately.
[[nodiscard]] Partition sylvester(const Partition& p);

/// Checks size, Dur2/length, alt/sol and Bessenrodt's hook relations for one
/// odd partition.
[[nodiscard]] VerificationReport sylvester_stats_check(const Partition& p);

/// Glaisher's bijection: f copies of odd j become parts j*2^e over the binary
/// digits e of f.
[[nodiscard]] Partition glaisher(const Partition& p);

// ---------------------------------------------------------------------------
// Labeled partitions and the sign-reversing involution

enum class Label { X, Y };

struct LabeledPart {
    int value = 0;
    Label label = Label::Y;

    friend bool operator==(const LabeledPart&, const LabeledPart&) = default;
};

/// Partition whose parts carry an X ("xy") or Y ("y") label. Stored by value
/// descending, with the X copy of a value ahead of its Y copies.
class LabeledPartition {
public:
    LabeledPartition() = default;
    /// Canonicalises the order; does not check validity.
    explicit LabeledPartition(std::vector<LabeledPart> parts);

    [[nodiscard]] const std::vector<LabeledPart>& parts() const noexcept { return parts_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int count(Label l) const noexcept;
    [[nodiscard]] bool contains(int value, Label l) const noexcept;
    [[nodiscard]] bool contains_value(int value) const noexcept;
    [[nodiscard]] long long size() const noexcept;
    [[nodiscard]] Partition values() const;

    /// Each X part v is the only X part of value v and v+1 is not a part.
    [[nodiscard]] bool is_valid() const noexcept;

    void insert(LabeledPart part);
    /// Removes one copy; returns false when absent.
    bool erase(LabeledPart part);

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;

private:
    std::vector<LabeledPart> parts_;
};

/// "6x+3+3+1x"; "" or "0" is empty.
[[nodiscard]] LabeledPartition parse_labeled(std::string_view text);
[[nodiscard]] std::string to_string(const LabeledPartition& p);
/// Display form with exponents, e.g. "2x+2^2"; "ε" when empty.
[[nodiscard]] std::string to_compact_string(const LabeledPartition& p);

/// A strict partition paired with a valid labeled partition.
struct SignedPair {
    Partition strict_part;
    LabeledPartition labeled_part;

    [[nodiscard]] bool is_valid() const noexcept;
    /// (-1)^{number of Y-labeled parts}
    [[nodiscard]] int sign() const noexcept;
    /// x^{#X} y^{l(strict)+l(labeled)} q^{|strict|+|labeled|}
    [[nodiscard]] Monomial weight() const;

    friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

/// "<strict>|<labeled>", e.g. "3+2|6x+3+3+1x".
[[nodiscard]] SignedPair parse_signed_pair(std::string_view text);
[[nodiscard]] std::string to_string(const SignedPair& pr);
/// "(3+2, 6x+3^2+1x)" with ε for empty sides.
[[nodiscard]] std::string to_compact_string(const SignedPair& pr);

enum class PairCase { Case1, Case2, Fixed };

inline constexpr int kNoPart = std::numeric_limits<int>::max();

struct PairClass {
    PairCase kind = PairCase::Fixed;
    int a = kNoPart;  ///< smallest strict part whose predecessor is not an X part of eta
    int b = kNoPart;  ///< smallest Y-labeled part of eta
};

[[nodiscard]] PairClass classify_pair(const SignedPair& pr);
[[nodiscard]] const char* to_string(PairCase c) noexcept;

/// Sign-reversing, weight-preserving involution: Case1 moves b from the
/// labeled side into the strict side, Case2 moves a the other way as a Y part.
[[nodiscard]] SignedPair involution_phi(const SignedPair& pr);

/// Union of the two sides of a fixed point. Throws on non-fixed input.
[[nodiscard]] Partition fixed_to_strict(const SignedPair& pr);
/// Inverse of fixed_to_strict: in every maximal run of t, labels alternate
/// and end with X at the smallest part; X parts form eta, the rest lambda.
[[nodiscard]] SignedPair strict_to_fixed(const Partition& t);

/// Every valid labeled partition of n.
[[nodiscard]] std::vector<LabeledPartition> labeled_partitions(int n);
/// Every signed pair of total size n.
[[nodiscard]] std::vector<SignedPair> signed_pairs(int n);

// ---------------------------------------------------------------------------
// Odd-gap decomposition

struct OddGapSplit {
    Partition sigma;  ///< strict, one part i per odd gap lambda_i - lambda_{i+1}
    Partition tau;    ///< even parts

    friend bool operator==(const OddGapSplit&, const OddGapSplit&) = default;
};

[[nodiscard]] OddGapSplit lemma51_decompose(const Partition& p);
/// Inverse: conjugate(result) = conjugate(tau) union sigma.
[[nodiscard]] Partition lemma51_compose(const Partition& sigma, const Partition& tau);

}  // namespace partlab

#endif  // PARTLAB_MAPS_HPP
