#include "partlab/maps.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "partlab/shapes.hpp"

namespace partlab {

// ---------------------------------------------------------------------------
// Sylvester and Glaisher

std::vector<HookData> sylvester_hooks(const Partition& p)
{
    require_odd_parts(p, "Sylvester's map");
    if (p.empty()) {
        return {};
    }
    const ModularDiagram diagram = modular2_diagram(p, BorderStyle::RightBorder);
    const auto& rows = diagram.rows;
    const int k = dur2(p);
    std::vector<HookData> hooks;
    for (int h = 0; h < k; ++h) {
        HookData hook;
        const auto pivot = static_cast<std::size_t>(h);
        for (std::size_t c = pivot; c < rows[pivot].size(); ++c) {
            ++hook.cells;
            hook.twos += rows[pivot][c] == 2 ? 1 : 0;
        }
        for (std::size_t r = pivot + 1; r < rows.size() && rows[r].size() > pivot; ++r) {
            ++hook.cells;
            hook.twos += rows[r][pivot] == 2 ? 1 : 0;
        }
        hooks.push_back(hook);
    }
    return hooks;
}

Partition sylvester(const Partition& p)
{
    std::vector<int> image;
    for (const HookData& hook : sylvester_hooks(p)) {
        image.push_back(hook.cells);
        image.push_back(hook.twos);
    }
    if (!image.empty() && image.back() == 0) {
        image.pop_back();
    }
    return Partition(std::move(image));
}

VerificationReport sylvester_stats_check(const Partition& p)
{
    VerificationReport report("SYLVESTER", to_string(p));
    require_odd_parts(p, "Sylvester statistics check");
    Partition image;
    try {
        image = sylvester(p);
    } catch (const DomainError& e) {
        report.fail(std::string("image is not a partition: ") + e.what());
        return report;
    }
    if (!is_strict(image)) {
        report.fail("image " + to_string(image) + " is not strict");
        return report;
    }
    if (size(image) != size(p)) {
        report.fail("size changed: " + to_string(image));
    }
    const int k = dur2(p);
    const int ceil_half = (length(image) + 1) / 2;
    if (k != ceil_half) {
        report.fail("Dur2=" + std::to_string(k) + " but ceil(l/2)=" + std::to_string(ceil_half));
    }
    const int alt = alternating_index(p);
    const int s = sol(image);
    if (alt != s) {
        report.fail("alt=" + std::to_string(alt) + " but sol(S)=" + std::to_string(s));
    }

    // Hook relations, with l_{2i-1} = cells(h_i) and l_{2i} = twos(h_i).
    const auto hooks = sylvester_hooks(p);
    for (int i = 1; i <= k; ++i) {
        const HookData& h = hooks[static_cast<std::size_t>(i - 1)];
        const int f = multiplicity(p, 2 * i - 1);
        const std::string at = " at hook " + std::to_string(i);
        if (i < k) {
            if (h.cells - h.twos - 1 != f) {
                report.fail("l_{2i-1}-l_{2i}-1 != f_{2i-1}" + at);
            }
            const HookData& next = hooks[static_cast<std::size_t>(i)];
            const int half_gap = (p.part(static_cast<std::size_t>(i)) - p.part(static_cast<std::size_t>(i + 1))) / 2;
            if (h.twos - next.cells - 1 != half_gap) {
                report.fail("l_{2i}-l_{2i+1}-1 != (lambda_i-lambda_{i+1})/2" + at);
            }
        } else {
            const bool type_one = p.part(static_cast<std::size_t>(k)) > 2 * k - 1;
            if ((h.twos != 0) != type_one) {
                report.fail("l_{2k} != 0 disagrees with lambda_k > 2k-1");
            }
            if (h.twos != 0 && h.cells - h.twos - 1 != f) {
                report.fail("l_{2k-1}-l_{2k}-1 != f_{2k-1}");
            }
        }
    }
    report.note("image", to_string(image));
    report.note("Dur2", k);
    report.note("alt", alt);
    return report;
}

Partition glaisher(const Partition& p)
{
    require_odd_parts(p, "Glaisher's map");
    std::map<int, int> counts;
    for (int v : p.parts()) {
        ++counts[v];
    }
    std::vector<int> image;
    for (const auto& [value, count] : counts) {
        for (int e = 0; (count >> e) != 0; ++e) {
            if ((count >> e) & 1) {
                image.push_back(value << e);
            }
        }
    }
    return Partition::from_unsorted(std::move(image));
}

// ---------------------------------------------------------------------------
// Labeled partitions

namespace {

bool canonical_before(const LabeledPart& a, const LabeledPart& b)
{
    if (a.value != b.value) {
        return a.value > b.value;
    }
    return a.label == Label::X && b.label == Label::Y;
}

}  // namespace

LabeledPartition::LabeledPartition(std::vector<LabeledPart> parts) : parts_(std::move(parts))
{
    for (const auto& part : parts_) {
        if (part.value < 1) {
            throw DomainError("labeled parts must be positive");
        }
    }
    std::stable_sort(parts_.begin(), parts_.end(), canonical_before);
}

int LabeledPartition::count(Label l) const noexcept
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [l](const auto& p) { return p.label == l; }));
}

bool LabeledPartition::contains(int value, Label l) const noexcept
{
    return std::find(parts_.begin(), parts_.end(), LabeledPart{value, l}) != parts_.end();
}

bool LabeledPartition::contains_value(int value) const noexcept
{
    return std::any_of(parts_.begin(), parts_.end(), [value](const auto& p) { return p.value == value; });
}

long long LabeledPartition::size() const noexcept
{
    long long total = 0;
    for (const auto& p : parts_) {
        total += p.value;
    }
    return total;
}

Partition LabeledPartition::values() const
{
    std::vector<int> v;
    v.reserve(parts_.size());
    for (const auto& p : parts_) {
        v.push_back(p.value);
    }
    return Partition(std::move(v));
}

bool LabeledPartition::is_valid() const noexcept
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label != Label::X) {
            continue;
        }
        // In canonical order the predecessor of an X part must be at least 2 larger.
        if (i > 0 && parts_[i - 1].value - parts_[i].value < 2) {
            return false;
        }
    }
    return true;
}

void LabeledPartition::insert(LabeledPart part)
{
    if (part.value < 1) {
        throw DomainError("labeled parts must be positive");
    }
    parts_.insert(std::upper_bound(parts_.begin(), parts_.end(), part, canonical_before), part);
}

bool LabeledPartition::erase(LabeledPart part)
{
    const auto it = std::find(parts_.begin(), parts_.end(), part);
    if (it == parts_.end()) {
        return false;
    }
    parts_.erase(it);
    return true;
}

LabeledPartition parse_labeled(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    text = text.substr(first, text.find_last_not_of(" \t") - first + 1);
    if (text == "0") {
        return {};
    }
    std::vector<LabeledPart> parts;
    std::size_t pos = 0;
    while (true) {
        const auto plus = text.find('+', pos);
        std::string_view token = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
        Label label = Label::Y;
        if (!token.empty() && token.back() == 'x') {
            label = Label::X;
            token.remove_suffix(1);
        }
        int value = 0;
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc() || ptr != end || value < 1) {
            throw DomainError("malformed labeled partition literal '" + std::string(text) + "'");
        }
        if (!parts.empty() && value > parts.back().value) {
            throw DomainError("labeled partition literal must be non-increasing: '" + std::string(text) + "'");
        }
        parts.push_back({value, label});
        if (plus == std::string_view::npos) {
            break;
        }
        pos = plus + 1;
    }
    return LabeledPartition(std::move(parts));
}

std::string to_string(const LabeledPartition& p)
{
    if (p.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& part : p.parts()) {
        if (!out.empty()) {
            out += '+';
        }
        out += std::to_string(part.value);
        if (part.label == Label::X) {
            out += 'x';
        }
    }
    return out;
}

std::string to_compact_string(const LabeledPartition& p)
{
    if (p.empty()) {
        return "ε";
    }
    std::ostringstream os;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        os << (i > 0 ? "+" : "") << parts[i].value << (parts[i].label == Label::X ? "x" : "");
        if (j - i > 1) {
            os << '^' << (j - i);
        }
        i = j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Signed pairs and the involution

bool SignedPair::is_valid() const noexcept { return is_strict(strict_part) && labeled_part.is_valid(); }

int SignedPair::sign() const noexcept { return labeled_part.count(Label::Y) % 2 == 0 ? 1 : -1; }

Monomial SignedPair::weight() const
{
    return Monomial{1, labeled_part.count(Label::X),
                    length(strict_part) + static_cast<int>(labeled_part.parts().size()),
                    static_cast<int>(size(strict_part) + labeled_part.size())};
}

SignedPair parse_signed_pair(std::string_view text)
{
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw DomainError("signed pair literal needs the form '<strict>|<labeled>'");
    }
    SignedPair pr{parse_partition(text.substr(0, bar)), parse_labeled(text.substr(bar + 1))};
    require_strict(pr.strict_part, "signed pair");
    if (!pr.labeled_part.is_valid()) {
        throw DomainError("labeled partition " + to_string(pr.labeled_part)
                          + " is invalid: an x part needs a gap of at least 2 above it");
    }
    return pr;
}

std::string to_string(const SignedPair& pr)
{
    return to_string(pr.strict_part) + "|" + to_string(pr.labeled_part);
}

std::string to_compact_string(const SignedPair& pr)
{
    return "(" + to_compact_string(pr.strict_part) + ", " + to_compact_string(pr.labeled_part) + ")";
}

PairClass classify_pair(const SignedPair& pr)
{
    PairClass c;
    const auto parts = pr.strict_part.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        // (a-1)_X can only be present when a >= 2; part 0 never occurs.
        if (!pr.labeled_part.contains(*it - 1, Label::X)) {
            c.a = *it;
            break;
        }
    }
    const auto& lp = pr.labeled_part.parts();
    for (auto it = lp.rbegin(); it != lp.rend(); ++it) {
        if (it->label == Label::Y) {
            c.b = it->value;
            break;
        }
    }
    if (c.a == kNoPart && c.b == kNoPart) {
        c.kind = PairCase::Fixed;
    } else if (c.a > c.b) {
        c.kind = PairCase::Case1;
    } else {
        c.kind = PairCase::Case2;
    }
    return c;
}

const char* to_string(PairCase c) noexcept
{
    switch (c) {
    case PairCase::Case1:
        return "CASE1";
    case PairCase::Case2:
        return "CASE2";
    case PairCase::Fixed:
        return "FIXED";
    }
    return "?";
}

SignedPair involution_phi(const SignedPair& pr)
{
    if (!pr.is_valid()) {
        require_strict(pr.strict_part, "involution");
        throw DomainError("labeled side of " + to_string(pr) + " breaks the X-part gap rule");
    }
    const PairClass c = classify_pair(pr);
    SignedPair out = pr;
    switch (c.kind) {
    case PairCase::Fixed:
        return out;
    case PairCase::Case1: {
        // b_Y and (b-1)_X cannot coexist in a valid eta, so b is a candidate
        // for a whenever b is a part of lambda; a > b then rules that out.
        if (std::find(pr.strict_part.parts().begin(), pr.strict_part.parts().end(), c.b)
            != pr.strict_part.parts().end()) {
            throw std::logic_error("involution case 1: b is already a part of lambda in " + to_string(pr));
        }
        out.labeled_part.erase({c.b, Label::Y});
        out.strict_part = partition_union(pr.strict_part, Partition{c.b});
        break;
    }
    case PairCase::Case2: {
        auto rest = pr.strict_part.vec();
        rest.erase(std::find(rest.begin(), rest.end(), c.a));
        out.strict_part = Partition(std::move(rest));
        out.labeled_part.insert({c.a, Label::Y});
        // (a-1)_X is absent by the choice of a, so a Y part at a keeps eta valid.
        if (!out.labeled_part.is_valid()) {
            throw std::logic_error("involution case 2 produced an invalid labeled partition from " + to_string(pr));
        }
        break;
    }
    }
    return out;
}

Partition fixed_to_strict(const SignedPair& pr)
{
    if (classify_pair(pr).kind != PairCase::Fixed) {
        throw DomainError("pair " + to_string(pr) + " is not a fixed point");
    }
    return partition_union(pr.strict_part, pr.labeled_part.values());
}

SignedPair strict_to_fixed(const Partition& t)
{
    SignedPair pr;
    std::vector<int> lambda;
    std::vector<LabeledPart> eta;
    for (const auto& run : runs(t)) {
        // Position counted from the smallest part of the run: even offsets are X.
        for (std::size_t i = 0; i < run.size(); ++i) {
            const std::size_t from_end = run.size() - 1 - i;
            if (from_end % 2 == 0) {
                eta.push_back({run[i], Label::X});
            } else {
                lambda.push_back(run[i]);
            }
        }
    }
    pr.strict_part = Partition(std::move(lambda));
    pr.labeled_part = LabeledPartition(std::move(eta));
    return pr;
}

std::vector<LabeledPartition> labeled_partitions(int n)
{
    std::vector<LabeledPartition> out;
    for_each_partition(n, [&](const Partition& p) {
        std::vector<int> distinct;
        for (int v : p.parts()) {
            if (distinct.empty() || distinct.back() != v) {
                distinct.push_back(v);
            }
        }
        const std::size_t choices = std::size_t{1} << distinct.size();
        for (std::size_t mask = 0; mask < choices; ++mask) {
            std::vector<LabeledPart> parts;
            std::size_t d = 0;
            for (std::size_t i = 0; i < p.parts().size(); ++i) {
                const bool first_copy = i == 0 || p.parts()[i] != p.parts()[i - 1];
                if (i > 0 && first_copy) {
                    ++d;
                }
                const bool x = first_copy && ((mask >> d) & 1U);
                parts.push_back({p.parts()[i], x ? Label::X : Label::Y});
            }
            LabeledPartition candidate(std::move(parts));
            if (candidate.is_valid()) {
                out.push_back(std::move(candidate));
            }
        }
    });
    return out;
}

std::vector<SignedPair> signed_pairs(int n)
{
    std::vector<SignedPair> out;
    for (int s = 0; s <= n; ++s) {
        std::vector<Partition> stricts;
        for_each_partition(s, [&](const Partition& p) {
            if (is_strict(p)) {
                stricts.push_back(p);
            }
        });
        const auto labeled = labeled_partitions(n - s);
        for (const auto& lam : stricts) {
            for (const auto& eta : labeled) {
                out.push_back({lam, eta});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Odd-gap decomposition

OddGapSplit lemma51_decompose(const Partition& p)
{
    std::vector<int> rows = p.vec();
    std::vector<int> sigma;
    for (std::size_t i = rows.size(); i >= 1; --i) {
        const int next = i < rows.size() ? rows[i] : 0;
        if ((rows[i - 1] - next) % 2 != 0) {
            for (std::size_t r = 0; r < i; ++r) {
                --rows[r];
            }
            sigma.push_back(static_cast<int>(i));
        }
    }
    std::erase(rows, 0);
    return {Partition(std::move(sigma)), Partition(std::move(rows))};
}

Partition lemma51_compose(const Partition& sigma, const Partition& tau)
{
    require_strict(sigma, "odd-gap composition");
    require_even_parts(tau, "odd-gap composition");
    return conjugate(partition_union(conjugate(tau), sigma));
}

}  // namespace partlab
