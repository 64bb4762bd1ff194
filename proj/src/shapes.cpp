#include "partlab/shapes.hpp"

#include <algorithm>

namespace partlab {

namespace {

// Definition of the sub-Durfee side applied to an arbitrary (shape) partition.
SubDurfee sub_durfee_of_shape(const Partition& shape)
{
    if (shape.empty()) {
        throw DomainError("sub-Durfee side is not defined for the empty partition");
    }
    const int k = durfee_side(shape);
    const Partition below(std::vector<int>(shape.vec().begin() + k, shape.vec().end()));
    if (shape.part(static_cast<std::size_t>(k)) > k) {
        return {DurfeeType::TypeI, durfee_side(below)};
    }
    int j = 0;
    while (below.part(static_cast<std::size_t>(j + 1)) >= j + 2) {
        ++j;
    }
    return {DurfeeType::TypeII, j};
}

}  // namespace

Partition ModularDiagram::shape() const
{
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) {
        lengths.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(lengths));
}

std::string ModularDiagram::render() const
{
    std::string out;
    for (const auto& row : rows) {
        for (int e : row) {
            out += static_cast<char>('0' + e);
        }
        out += '\n';
    }
    return out;
}

int durfee_side(const Partition& p) noexcept
{
    int k = 0;
    while (p.part(static_cast<std::size_t>(k + 1)) >= k + 1) {
        ++k;
    }
    return k;
}

Triple ordinary_triple(const Partition& p)
{
    const int k = durfee_side(p);
    std::vector<int> right;
    for (int i = 1; i <= k; ++i) {
        if (const int rest = p.part(static_cast<std::size_t>(i)) - k; rest > 0) {
            right.push_back(rest);
        }
    }
    return {k, Partition(std::move(right)), Partition(std::vector<int>(p.vec().begin() + k, p.vec().end())),
            TripleFlavor::Ordinary};
}

SubDurfee sub_durfee_side(const Partition& p) { return sub_durfee_of_shape(p); }

Partition modular2_shape(const Partition& p)
{
    std::vector<int> shape;
    shape.reserve(p.parts().size());
    for (int v : p.parts()) {
        shape.push_back((v + 1) / 2);
    }
    return Partition(std::move(shape));
}

ModularDiagram modular2_diagram(const Partition& p, BorderStyle border)
{
    ModularDiagram diagram;
    if (border == BorderStyle::LastCell) {
        for (int v : p.parts()) {
            std::vector<int> row(static_cast<std::size_t>((v + 1) / 2), 2);
            if (v % 2 == 1) {
                row.back() = 1;
            }
            diagram.rows.push_back(std::move(row));
        }
        return diagram;
    }

    require_odd_parts(p, "right-border 2-modular diagram");
    const int k = dur2(p);
    for (std::size_t i = 1; i <= p.parts().size(); ++i) {
        const int v = p.part(i);
        std::vector<int> row(static_cast<std::size_t>((v + 1) / 2), 2);
        if (static_cast<int>(i) <= k) {
            row[static_cast<std::size_t>(k - 1)] = 1;
        } else {
            row.back() = 1;
        }
        diagram.rows.push_back(std::move(row));
    }
    return diagram;
}

int dur2(const Partition& p) { return durfee_side(modular2_shape(p)); }

SubDurfee dur2_sub(const Partition& p) { return sub_durfee_of_shape(modular2_shape(p)); }

Triple modular2_triple(const Partition& p)
{
    require_odd_parts(p, "2-modular triple");
    if (p.empty()) {
        throw DomainError("2-modular triple is not defined for the empty partition");
    }
    const int k = dur2(p);
    std::vector<int> right;
    for (int i = 1; i <= k; ++i) {
        if (const int rest = p.part(static_cast<std::size_t>(i)) - (2 * k - 1); rest > 0) {
            right.push_back(rest);
        }
    }
    return {k, Partition(std::move(right)), Partition(std::vector<int>(p.vec().begin() + k, p.vec().end())),
            TripleFlavor::Modular2};
}

Partition modular2_conjugate_even(const Partition& a)
{
    require_even_parts(a, "2-modular conjugation");
    std::vector<int> halves;
    for (int v : a.parts()) {
        halves.push_back(v / 2);
    }
    auto columns = conjugate(Partition(std::move(halves))).vec();
    for (int& c : columns) {
        c *= 2;
    }
    return Partition(std::move(columns));
}

int alternating_index(const Partition& p)
{
    require_odd_parts(p, "alternating index");
    if (p.empty()) {
        return 0;
    }
    const Triple t = modular2_triple(p);
    const int k = t.durfee;
    const bool type_one = p.part(static_cast<std::size_t>(k)) > 2 * k - 1;

    auto eta = partition_union(modular2_conjugate_even(t.right), t.below).vec();
    std::reverse(eta.begin(), eta.end());
    eta.push_back(type_one ? 2 * k : 2 * k - 1);
    return parity_index(eta);
}

const char* to_string(DurfeeType t) noexcept { return t == DurfeeType::TypeI ? "I" : "II"; }

}  // namespace partlab
