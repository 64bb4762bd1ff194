#ifndef PARTLAB_SHAPES_HPP
#define PARTLAB_SHAPES_HPP

#include <string>
#include <vector>

#include "partlab/core.hpp"

namespace partlab {

enum class TripleFlavor { Ordinary, Modular2 };

/// A partition split around its (ordinary or 2-modular) Durfee square:
/// `right` sits to the right of the square, `below` underneath it.
struct Triple {
    int durfee = 0;
    Partition right;
    Partition below;
    TripleFlavor flavor = TripleFlavor::Ordinary;

    friend bool operator==(const Triple&, const Triple&) = default;
};

enum class DurfeeType { TypeI, TypeII };

struct SubDurfee {
    DurfeeType type = DurfeeType::TypeII;
    int side = 0;

    friend bool operator==(const SubDurfee&, const SubDurfee&) = default;
};

/// Where the 1-entries of a 2-modular diagram go.
///   LastCell:    at the end of every odd row (the standard drawing).
///   RightBorder: in column k of the first k rows (k = 2-modular Durfee side)
///                and at the end of every row below; odd parts only.
enum class BorderStyle { LastCell, RightBorder };

/// Cells of a 2-modular diagram, one vector of entries in {1,2} per row.
struct ModularDiagram {
    std::vector<std::vector<int>> rows;

    [[nodiscard]] Partition shape() const;
    /// One line per row, entries written as digits ("2212").
    [[nodiscard]] std::string render() const;

    friend bool operator==(const ModularDiagram&, const ModularDiagram&) = default;
};

[[nodiscard]] int durfee_side(const Partition& p) noexcept;
[[nodiscard]] Triple ordinary_triple(const Partition& p);

/// Type I when the k-th row is longer than k. Throws on the empty partition.
[[nodiscard]] SubDurfee sub_durfee_side(const Partition& p);

/// Row lengths ceil(lambda_i / 2) of the 2-modular diagram.
[[nodiscard]] Partition modular2_shape(const Partition& p);
[[nodiscard]] ModularDiagram modular2_diagram(const Partition& p, BorderStyle border);

/// Durfee side of the 2-modular shape.
[[nodiscard]] int dur2(const Partition& p);
/// Sub-Durfee side (and type) of the 2-modular shape. Throws on the empty partition.
[[nodiscard]] SubDurfee dur2_sub(const Partition& p);

/// (k; alpha, beta) with alpha_i = lambda_i - (2k-1) for i <= k. Odd, nonempty input.
[[nodiscard]] Triple modular2_triple(const Partition& p);

/// Conjugate of the 2-modular diagram of a partition into even parts.
[[nodiscard]] Partition modular2_conjugate_even(const Partition& a);

/// Parity index of the augmented sequence built from the 2-modular triple.
/// Odd parts only; 0 for the empty partition.
[[nodiscard]] int alternating_index(const Partition& p);

[[nodiscard]] const char* to_string(DurfeeType t) noexcept;

}  // namespace partlab

#endif  // PARTLAB_SHAPES_HPP
