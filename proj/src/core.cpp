#include "partlab/core.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace partlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw DomainError("partition parts must be positive, got " + std::to_string(parts_[i]));
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be non-increasing: " + std::to_string(parts_[i - 1])
                              + " precedes " + std::to_string(parts_[i]));
        }
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

long long size(const Partition& p) noexcept
{
    return std::accumulate(p.parts().begin(), p.parts().end(), 0LL);
}

int length(const Partition& p) noexcept { return static_cast<int>(p.parts().size()); }

int multiplicity(const Partition& p, int j)
{
    if (j < 1) {
        throw DomainError("multiplicity is defined for positive part values only");
    }
    return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), j));
}

int distinct_parts(const Partition& p) noexcept
{
    const auto parts = p.parts();
    int count = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0 || parts[i] != parts[i - 1]) {
            ++count;
        }
    }
    return count;
}

bool is_strict(const Partition& p) noexcept
{
    const auto parts = p.parts();
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

bool is_odd_parts(const Partition& p) noexcept
{
    return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 1; });
}

bool is_even_parts(const Partition& p) noexcept
{
    return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
}

void require_strict(const Partition& p, std::string_view what)
{
    const auto parts = p.parts();
    const auto it = std::adjacent_find(parts.begin(), parts.end());
    if (it != parts.end()) {
        throw DomainError(std::string(what) + " requires a strict partition; part " + std::to_string(*it)
                          + " is repeated in " + to_string(p));
    }
}

void require_odd_parts(const Partition& p, std::string_view what)
{
    for (int v : p.parts()) {
        if (v % 2 == 0) {
            throw DomainError(std::string(what) + " requires odd parts; part " + std::to_string(v)
                              + " is even in " + to_string(p));
        }
    }
}

void require_even_parts(const Partition& p, std::string_view what)
{
    for (int v : p.parts()) {
        if (v % 2 != 0) {
            throw DomainError(std::string(what) + " requires even parts; part " + std::to_string(v)
                              + " is odd in " + to_string(p));
        }
    }
}

std::vector<std::vector<int>> runs(const Partition& p)
{
    require_strict(p, "runs");
    std::vector<std::vector<int>> out;
    for (int v : p.parts()) {
        if (out.empty() || out.back().back() != v + 1) {
            out.emplace_back();
        }
        out.back().push_back(v);
    }
    return out;
}

int sol(const Partition& p)
{
    const auto blocks = runs(p);
    return static_cast<int>(
        std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() % 2 == 1; }));
}

int k_measure(const Partition& p, int k)
{
    if (k < 1) {
        throw DomainError("k-measure requires k >= 1");
    }
    int count = 0;
    long long last_taken = 0;
    bool taken_any = false;
    for (int v : p.parts()) {
        if (!taken_any || last_taken - v >= k) {
            last_taken = v;
            taken_any = true;
            ++count;
        }
    }
    return count;
}

Partition partition_union(const Partition& p, const Partition& r)
{
    std::vector<int> merged;
    merged.reserve(p.parts().size() + r.parts().size());
    std::merge(p.parts().begin(), p.parts().end(), r.parts().begin(), r.parts().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition(std::move(merged));
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int v : p.parts()) {
        for (int j = 0; j < v; ++j) {
            ++out[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(out));
}

int parity_index(std::span<const int> s) noexcept
{
    int switches = 0;
    int previous = 0;
    for (int v : s) {
        if (((v - previous) % 2) != 0) {
            ++switches;
        }
        previous = v;
    }
    return switches;
}

Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        const auto first = s.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            return std::string_view{};
        }
        const auto last = s.find_last_not_of(" \t");
        return s.substr(first, last - first + 1);
    };
    text = trim(text);
    if (text.empty() || text == "0") {
        return {};
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const auto plus = text.find('+', pos);
        const auto token = trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
        int value = 0;
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc() || ptr != end || value < 1) {
            throw DomainError("malformed partition literal '" + std::string(text) + "': bad part '"
                              + std::string(token) + "'");
        }
        parts.push_back(value);
        if (plus == std::string_view::npos) {
            break;
        }
        pos = plus + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::string to_string(const Partition& p)
{
    if (p.empty()) {
        return "0";
    }
    std::string out;
    for (int v : p.parts()) {
        if (!out.empty()) {
            out += '+';
        }
        out += std::to_string(v);
    }
    return out;
}

std::string to_compact_string(const Partition& p)
{
    if (p.empty()) {
        return "ε";
    }
    std::ostringstream os;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        if (i > 0) {
            os << '+';
        }
        os << parts[i];
        if (j - i > 1) {
            os << '^' << (j - i);
        }
        i = j;
    }
    return os.str();
}

}  // namespace partlab
