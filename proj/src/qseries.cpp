#include "partlab/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {

using Bucket = MultiSeries::Bucket;

std::optional<int> combine_caps(std::optional<int> a, std::optional<int> b)
{
    if (a && b) {
        return std::min(*a, *b);
    }
    return a ? a : b;
}

void prune(Bucket& b)
{
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
}

// out += a * b, dropping x exponents above the cap.
void accumulate_product(const Bucket& a, const Bucket& b, Bucket& out, std::optional<int> x_cap)
{
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const int x = ka.first + kb.first;
            if (x_cap && x > *x_cap) {
                continue;
            }
            out[{x, ka.second + kb.second}] += ca * cb;
        }
    }
}

// Inverse of the q^0 coefficient, either a unit or (with an x cap) an
// x-polynomial whose constant term is a unit.
Bucket invert_constant(const Bucket& c0, std::optional<int> x_cap)
{
    const auto unit_it = c0.find({0, 0});
    if (unit_it == c0.end() || (unit_it->second != 1 && unit_it->second != -1)) {
        throw DomainError("series is not invertible: constant term is not +-1");
    }
    const BigInt unit = unit_it->second;  // its own inverse
    if (c0.size() == 1) {
        return {{{0, 0}, unit}};
    }
    if (!x_cap) {
        throw DomainError("series is not invertible without an x-degree cap: q^0 coefficient is not a constant");
    }
    std::vector<BigInt> poly(static_cast<std::size_t>(*x_cap) + 1, 0);
    for (const auto& [xy, c] : c0) {
        if (xy.second != 0) {
            throw DomainError("series is not invertible: q^0 coefficient involves y");
        }
        if (xy.first <= *x_cap) {
            poly[static_cast<std::size_t>(xy.first)] = c;
        }
    }
    std::vector<BigInt> inv(poly.size(), 0);
    inv[0] = unit;
    for (std::size_t d = 1; d < poly.size(); ++d) {
        BigInt acc = 0;
        for (std::size_t e = 1; e <= d; ++e) {
            acc += poly[e] * inv[d - e];
        }
        inv[d] = -unit * acc;
    }
    Bucket out;
    for (std::size_t d = 0; d < inv.size(); ++d) {
        if (inv[d] != 0) {
            out[{static_cast<int>(d), 0}] = inv[d];
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MultiSeries

MultiSeries::MultiSeries(int order, std::optional<int> x_order)
    : order_(order), x_order_(x_order), buckets_(static_cast<std::size_t>(order < 0 ? 0 : order) + 1)
{
    if (order < 0) {
        throw DomainError("series order must be nonnegative");
    }
}

MultiSeries MultiSeries::one(int order, std::optional<int> x_order)
{
    MultiSeries s(order, x_order);
    s.add_term(0, 0, 0, 1);
    return s;
}

MultiSeries MultiSeries::monomial(const Monomial& m, int order, std::optional<int> x_order)
{
    MultiSeries s(order, x_order);
    s.add_term(m.q, m.x, m.y, m.coeff);
    return s;
}

BigInt MultiSeries::coeff(int q, int x, int y) const
{
    if (q < 0 || q > order_) {
        return 0;
    }
    const auto& b = buckets_[static_cast<std::size_t>(q)];
    const auto it = b.find({x, y});
    return it == b.end() ? BigInt(0) : it->second;
}

bool MultiSeries::is_zero() const noexcept
{
    return std::all_of(buckets_.begin(), buckets_.end(), [](const Bucket& b) { return b.empty(); });
}

std::size_t MultiSeries::term_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& b : buckets_) {
        n += b.size();
    }
    return n;
}

int MultiSeries::max_y_degree() const noexcept
{
    int best = 0;
    for (const auto& b : buckets_) {
        for (const auto& [xy, c] : b) {
            best = std::max(best, xy.second);
        }
    }
    return best;
}

void MultiSeries::add_term(int q, int x, int y, const BigInt& c)
{
    if (q < 0 || x < 0 || y < 0) {
        throw DomainError("MultiSeries holds nonnegative exponents only");
    }
    if (q > order_ || (x_order_ && x > *x_order_) || c == 0) {
        return;
    }
    auto& b = buckets_[static_cast<std::size_t>(q)];
    auto [it, inserted] = b.try_emplace({x, y}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            b.erase(it);
        }
    }
}

void MultiSeries::require_compatible(const MultiSeries& other) const
{
    if (order_ != other.order_) {
        throw DomainError("series order mismatch: " + std::to_string(order_) + " vs " + std::to_string(other.order_));
    }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other)
{
    require_compatible(other);
    x_order_ = combine_caps(x_order_, other.x_order_);
    for (int q = 0; q <= order_; ++q) {
        for (const auto& [xy, c] : other.buckets_[static_cast<std::size_t>(q)]) {
            add_term(q, xy.first, xy.second, c);
        }
    }
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) { return *this += -other; }

MultiSeries MultiSeries::operator-() const
{
    MultiSeries out = *this;
    for (auto& b : out.buckets_) {
        for (auto& [xy, c] : b) {
            c = -c;
        }
    }
    return out;
}

MultiSeries MultiSeries::times(const Monomial& m) const
{
    MultiSeries out(order_, x_order_);
    if (m.q < 0 || m.x < 0 || m.y < 0) {
        throw DomainError("MultiSeries holds nonnegative exponents only");
    }
    for (int q = 0; q + m.q <= order_; ++q) {
        for (const auto& [xy, c] : buckets_[static_cast<std::size_t>(q)]) {
            out.add_term(q + m.q, xy.first + m.x, xy.second + m.y, c * m.coeff);
        }
    }
    return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
{
    a.require_compatible(b);
    MultiSeries out(a.order_, combine_caps(a.x_order_, b.x_order_));
    for (int qa = 0; qa <= a.order_; ++qa) {
        const auto& ba = a.buckets_[static_cast<std::size_t>(qa)];
        if (ba.empty()) {
            continue;
        }
        for (int qb = 0; qa + qb <= a.order_; ++qb) {
            accumulate_product(ba, b.buckets_[static_cast<std::size_t>(qb)],
                               out.buckets_[static_cast<std::size_t>(qa + qb)], out.x_order_);
        }
    }
    for (auto& bucket : out.buckets_) {
        prune(bucket);
    }
    return out;
}

MultiSeries MultiSeries::truncated(int order) const
{
    if (order > order_) {
        throw DomainError("cannot raise the order of a truncated series");
    }
    MultiSeries out(order, x_order_);
    for (int q = 0; q <= order; ++q) {
        out.buckets_[static_cast<std::size_t>(q)] = buckets_[static_cast<std::size_t>(q)];
    }
    return out;
}

MultiSeries invert(const MultiSeries& a)
{
    const int n = a.order();
    const auto cap = a.x_order();
    const Bucket u = invert_constant(a.bucket(0), cap);

    std::vector<Bucket> b(static_cast<std::size_t>(n) + 1);
    b[0] = u;
    for (int d = 1; d <= n; ++d) {
        Bucket acc;
        for (int k = 1; k <= d; ++k) {
            accumulate_product(a.bucket(k), b[static_cast<std::size_t>(d - k)], acc, cap);
        }
        prune(acc);
        Bucket next;
        accumulate_product(acc, u, next, cap);
        for (auto& [xy, c] : next) {
            c = -c;
        }
        prune(next);
        b[static_cast<std::size_t>(d)] = std::move(next);
    }

    MultiSeries out(n, cap);
    for (int d = 0; d <= n; ++d) {
        for (const auto& [xy, c] : b[static_cast<std::size_t>(d)]) {
            out.add_term(d, xy.first, xy.second, c);
        }
    }
    return out;
}

std::string Discrepancy::describe() const
{
    std::ostringstream os;
    os << "q^" << q << " x^" << x << " y^" << y << ": " << lhs << " != " << rhs;
    return os.str();
}

std::optional<Discrepancy> first_difference(const MultiSeries& a, const MultiSeries& b)
{
    if (a.order() != b.order()) {
        throw DomainError("cannot compare series of different orders");
    }
    for (int q = 0; q <= a.order(); ++q) {
        const auto& ba = a.bucket(q);
        const auto& bb = b.bucket(q);
        if (ba == bb) {
            continue;
        }
        // Smallest (x, y) key present in either bucket with differing coefficients.
        auto ia = ba.begin();
        auto ib = bb.begin();
        while (ia != ba.end() || ib != bb.end()) {
            MultiSeries::XY key;
            if (ib == bb.end() || (ia != ba.end() && ia->first < ib->first)) {
                key = ia->first;
            } else {
                key = ib->first;
            }
            const BigInt ca = (ia != ba.end() && ia->first == key) ? ia->second : BigInt(0);
            const BigInt cb = (ib != bb.end() && ib->first == key) ? ib->second : BigInt(0);
            if (ca != cb) {
                return Discrepancy{q, key.first, key.second, ca, cb};
            }
            if (ia != ba.end() && ia->first == key) {
                ++ia;
            }
            if (ib != bb.end() && ib->first == key) {
                ++ib;
            }
        }
    }
    return std::nullopt;
}

std::string serialize(const MultiSeries& s)
{
    std::ostringstream os;
    for (int q = 0; q <= s.order(); ++q) {
        for (const auto& [xy, c] : s.bucket(q)) {
            os << "q^" << q << " x^" << xy.first << " y^" << xy.second << " : " << c << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(const BigInt& c, int q_exp)
{
    LaurentPoly p;
    p.add(q_exp, c);
    return p;
}

BigInt LaurentPoly::coeff(int q_exp) const
{
    const auto it = terms_.find(q_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add(int q_exp, const BigInt& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(q_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add(e, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add(ea + eb, ca * cb);
        }
    }
    return out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c << "*q^" << e;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Products

MultiSeries pochhammer(const Monomial& a, int step, int n, int order, std::optional<int> x_order)
{
    if (step < 1) {
        throw DomainError("pochhammer step must be a positive power of q");
    }
    if (n < 0) {
        throw DomainError("pochhammer length must be nonnegative");
    }
    if (a.q < 0) {
        throw DomainError("negative q exponents belong in laurent_pochhammer");
    }
    if (n == kInfiniteLength && a.q < 1) {
        throw DomainError("divergent infinite product: (a;q)_inf needs a q exponent >= 1 in a");
    }
    MultiSeries out = MultiSeries::one(order, x_order);
    for (long long k = 0; k < n; ++k) {
        const long long shift = static_cast<long long>(a.q) + static_cast<long long>(step) * k;
        if (shift > order) {
            break;  // every remaining factor is 1 modulo q^{order+1}
        }
        Monomial factor = a;
        factor.q = static_cast<int>(shift);
        out -= out.times(factor);
    }
    return out;
}

LaurentPoly laurent_pochhammer(const BigInt& c, int a_q, int step, int n)
{
    if (n < 0 || n == kInfiniteLength) {
        throw DomainError("laurent_pochhammer needs a finite nonnegative length");
    }
    LaurentPoly out = LaurentPoly::constant(1);
    for (int k = 0; k < n; ++k) {
        out = out * (LaurentPoly::constant(1) - LaurentPoly::monomial(c, a_q + step * k));
    }
    return out;
}

MultiSeries gauss_binomial(int a, int b, int step, std::optional<int> order)
{
    if (a < 0 || b < 0 || step < 1) {
        throw DomainError("gauss_binomial needs a, b >= 0 and step >= 1");
    }
    const int full_degree = b > a ? 0 : step * b * (a - b);
    MultiSeries out(order.value_or(full_degree));
    if (b > a) {
        return out;
    }
    // Pascal rule [r, c] = [r-1, c-1] + q^{step*c} [r-1, c] on coefficient vectors.
    std::vector<std::vector<std::vector<BigInt>>> rows(static_cast<std::size_t>(a) + 1);
    for (int r = 0; r <= a; ++r) {
        auto& row = rows[static_cast<std::size_t>(r)];
        row.resize(static_cast<std::size_t>(r) + 1);
        for (int c = 0; c <= r; ++c) {
            auto& poly = row[static_cast<std::size_t>(c)];
            poly.assign(static_cast<std::size_t>(step * c * (r - c)) + 1, 0);
            if (c == 0 || c == r) {
                poly[0] = 1;
                continue;
            }
            const auto& left = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
            const auto& up = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
            for (std::size_t e = 0; e < left.size(); ++e) {
                poly[e] += left[e];
            }
            for (std::size_t e = 0; e < up.size(); ++e) {
                poly[e + static_cast<std::size_t>(step * c)] += up[e];
            }
        }
    }
    const auto& poly = rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (std::size_t e = 0; e < poly.size(); ++e) {
        out.add_term(static_cast<int>(e), 0, 0, poly[e]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named generating functions

namespace {

struct SeriesName {
    SeriesId id;
    const char* name;
};

constexpr SeriesName kSeriesNames[] = {
    {SeriesId::LhsThm11, "LHS_THM11"},       {SeriesId::RhsThm11, "RHS_THM11"},
    {SeriesId::GfSolLen, "GF_SOL_LEN"},      {SeriesId::GfKMeasure, "GF_KMEASURE"},
    {SeriesId::Gf2MeasureP, "GF_2MEASURE_P"}, {SeriesId::GfATypeI, "GF_A_TYPE_I"},
    {SeriesId::GfATypeII, "GF_A_TYPE_II"},   {SeriesId::GfATypes, "GF_A_TYPES"},
    {SeriesId::GfEvenOdd, "GF_EVEN_ODD"},    {SeriesId::GfB, "GF_B"},
    {SeriesId::GfParity, "GF_PARITY"},
};

// 1/(q^step; q^step)_n, built incrementally and memoised per build.
class DenominatorCache {
public:
    explicit DenominatorCache(int order) : order_(order) {}

    const MultiSeries& inverse(int step, int n)
    {
        auto& chain = chains_[step];
        if (chain.empty()) {
            chain.push_back(MultiSeries::one(order_));
        }
        while (static_cast<int>(chain.size()) <= n) {
            const int k = static_cast<int>(chain.size());
            const long long shift = static_cast<long long>(step) * k;
            if (shift > order_) {
                chain.push_back(chain.back());
                continue;
            }
            // 1/(1 - q^shift) = sum_r q^{r*shift}
            MultiSeries geometric(order_);
            for (long long e = 0; e <= order_; e += shift) {
                geometric.add_term(static_cast<int>(e), 0, 0, 1);
            }
            chain.push_back(chain.back() * geometric);
        }
        return chain[static_cast<std::size_t>(n)];
    }

private:
    int order_;
    std::map<int, std::vector<MultiSeries>> chains_;
};

// x^x y^y q^e / ((q;q)_a (q^2;q^2)_b), the shape of every summand below.
void add_fraction(MultiSeries& acc, DenominatorCache& dens, int x, int y, long long e, int a, int b)
{
    if (e > acc.order()) {
        return;
    }
    const MultiSeries denominators = dens.inverse(1, a) * dens.inverse(2, b);
    acc += denominators.times(Monomial{1, x, y, static_cast<int>(e)});
}

MultiSeries double_sum(int order, bool x_counts_j, bool even_odd_split)
{
    DenominatorCache dens(order);
    MultiSeries acc(order);
    for (int j = 0; 2LL * j * j + j <= order; ++j) {
        for (int i = 0;; ++i) {
            const long long e = 1LL * i * i + 2LL * i * j + 2LL * j * j + j;
            if (e > order) {
                break;
            }
            int x = 0;
            int y = 0;
            if (even_odd_split) {
                x = i % 2 == 0 ? i / 2 : (i - 1) / 2;
                y = (i % 2 == 0 ? i / 2 : (i + 1) / 2) + j;
            } else {
                x = x_counts_j ? i + j : i;
                y = i + 2 * j;
            }
            add_fraction(acc, dens, x, y, e, i, j);
        }
    }
    return acc;
}

MultiSeries k_measure_sum(int order, int k)
{
    if (k < 1) {
        throw DomainError("GF_KMEASURE needs k >= 1");
    }
    MultiSeries sum(order);
    MultiSeries x_poch = MultiSeries::one(order);     // (x; q^k)_n
    MultiSeries q_inv = MultiSeries::one(order);      // 1/(q;q)_n
    DenominatorCache dens(order);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            if (1LL * k * (n - 1) <= order) {
                x_poch -= x_poch.times(Monomial{1, 1, 0, k * (n - 1)});
            }
            q_inv = dens.inverse(1, n);
        }
        sum += (x_poch * q_inv).times(Monomial{n % 2 == 0 ? 1 : -1, 0, n, n});
    }
    return pochhammer(Monomial{-1, 0, 1, 1}, 1, kInfiniteLength, order) * sum;
}

MultiSeries two_measure_all(int order)
{
    MultiSeries sum(order);
    MultiSeries x_poch = MultiSeries::one(order);  // (x; q)_n
    DenominatorCache dens(order);
    for (int n = 0; 1LL * n * (n + 1) / 2 <= order; ++n) {
        if (n > 0) {
            x_poch -= x_poch.times(Monomial{1, 1, 0, n - 1});
        }
        sum += (x_poch * dens.inverse(1, n)).times(Monomial{n % 2 == 0 ? 1 : -1, 0, n, n * (n + 1) / 2});
    }
    return invert(pochhammer(Monomial{1, 0, 1, 1}, 1, kInfiniteLength, order)) * sum;
}

MultiSeries a_type_one(int order)
{
    DenominatorCache dens(order);
    MultiSeries acc(order);
    for (int k = 1; 1LL * k * (2 * k + 1) <= order; ++k) {
        for (int m = 0; m <= k; ++m) {
            add_fraction(acc, dens, m, k, 1LL * m * (2 * m - 1) + 1LL * k * (2 * k + 1), 2 * m, k - m);
        }
    }
    return acc;
}

MultiSeries a_type_two(int order)
{
    DenominatorCache dens(order);
    MultiSeries acc(order);
    for (int k = 1; 1LL * k * (2 * k - 1) <= order; ++k) {
        for (int m = 1; m <= k; ++m) {
            add_fraction(acc, dens, m - 1, k, 1LL * (m - 1) * (2 * m - 1) + 1LL * k * (2 * k - 1), 2 * m - 1, k - m);
        }
    }
    return acc;
}

MultiSeries b_series(int order)
{
    DenominatorCache dens(order);
    MultiSeries acc = MultiSeries::one(order);
    for (int k = 1; 1LL * k * (2 * k - 1) <= order; ++k) {
        // type I: y^k q^{k(2k+1)} x^{2j} q^{C(2j,2)} / ((q;q)_{2j} (q^2;q^2)_{k-j})
        for (int j = 0; j <= k; ++j) {
            add_fraction(acc, dens, 2 * j, k, 2LL * k * k + 2LL * j * j + k - j, 2 * j, k - j);
        }
        // type II: y^k q^{k(2k-1)} x^{2j-1} q^{C(2j-1,2)} / ((q;q)_{2j-1} (q^2;q^2)_{k-j})
        for (int j = 1; j <= k; ++j) {
            add_fraction(acc, dens, 2 * j - 1, k, 1LL * k * (2 * k - 1) + 1LL * (2 * j - 1) * (j - 1), 2 * j - 1,
                         k - j);
        }
    }
    return acc;
}

MultiSeries parity_series(int order, int m)
{
    if (m < 1) {
        throw DomainError("GF_PARITY needs a largest part m >= 1");
    }
    DenominatorCache dens(order);
    MultiSeries acc(order);
    if (m % 2 == 0) {
        const int k = m / 2;
        for (int j = 0; j <= k; ++j) {
            add_fraction(acc, dens, 2 * j, 0, 2LL * k + 1LL * j * (2 * j - 1), 2 * j, k - j);
        }
    } else {
        const int k = (m + 1) / 2;
        for (int j = 1; j <= k; ++j) {
            add_fraction(acc, dens, 2 * j - 1, 0, 2LL * k - 1 + 1LL * (2 * j - 1) * (j - 1), 2 * j - 1, k - j);
        }
    }
    return acc;
}

void assert_y_bounded(const MultiSeries& s, SeriesId id)
{
    for (int q = 0; q <= s.order(); ++q) {
        for (const auto& [xy, c] : s.bucket(q)) {
            if (xy.second > q) {
                throw std::logic_error(to_string(id) + ": y-degree exceeds q-degree at q^" + std::to_string(q));
            }
        }
    }
}

}  // namespace

std::optional<SeriesId> series_id_from_string(std::string_view name)
{
    for (const auto& entry : kSeriesNames) {
        if (name == entry.name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

std::string to_string(SeriesId id)
{
    for (const auto& entry : kSeriesNames) {
        if (entry.id == id) {
            return entry.name;
        }
    }
    return "?";
}

const std::vector<SeriesId>& all_series_ids()
{
    static const std::vector<SeriesId> ids = [] {
        std::vector<SeriesId> v;
        for (const auto& entry : kSeriesNames) {
            v.push_back(entry.id);
        }
        return v;
    }();
    return ids;
}

MultiSeries build(SeriesId id, int order, int param)
{
    MultiSeries out(order);
    switch (id) {
    case SeriesId::LhsThm11:
        out = double_sum(order, true, false);
        break;
    case SeriesId::RhsThm11:
        out = k_measure_sum(order, 2);
        break;
    case SeriesId::GfSolLen:
        out = double_sum(order, false, false);
        break;
    case SeriesId::GfKMeasure:
        out = k_measure_sum(order, param);
        break;
    case SeriesId::Gf2MeasureP:
        out = two_measure_all(order);
        break;
    case SeriesId::GfATypeI:
        out = a_type_one(order);
        break;
    case SeriesId::GfATypeII:
        out = a_type_two(order);
        break;
    case SeriesId::GfATypes:
        out = MultiSeries::one(order) + a_type_one(order) + a_type_two(order);
        break;
    case SeriesId::GfEvenOdd:
        out = double_sum(order, false, true);
        break;
    case SeriesId::GfB:
        out = b_series(order);
        break;
    case SeriesId::GfParity:
        out = parity_series(order, param);
        break;
    }
    assert_y_bounded(out, id);
    return out;
}

// ---------------------------------------------------------------------------
// Finite identities

namespace {

VerificationReport check_qbinom(const FiniteIdentityParams& p)
{
    const int order = p.order;
    const int cap = order;
    std::ostringstream bounds;
    bounds << "a=" << p.a.coeff << "q^" << p.a.q << " order=" << order;
    VerificationReport report("QBINOM", bounds.str());
    if (p.a.x != 0 || p.a.y != 0 || p.a.q < 0) {
        throw DomainError("QBINOM needs a = c q^s with s >= 0");
    }

    // sum_{m <= cap} (a;q)_m / (q;q)_m x^m
    MultiSeries lhs(order, cap);
    MultiSeries a_poch = MultiSeries::one(order, cap);
    MultiSeries q_inv = MultiSeries::one(order, cap);
    for (int m = 0; m <= cap; ++m) {
        if (m > 0) {
            Monomial factor = p.a;
            factor.q += m - 1;
            if (factor.q <= order) {
                a_poch -= a_poch.times(factor);
            }
            MultiSeries geometric(order, cap);
            for (int e = 0; e <= order; e += m) {
                geometric.add_term(e, 0, 0, 1);
            }
            q_inv = q_inv * geometric;
        }
        lhs += (a_poch * q_inv).times(Monomial{1, m, 0, 0});
    }

    // (a x; q)_inf / (x; q)_inf with the q^0 factors split off.
    auto x_product = [&](const BigInt& c, int s) {
        MultiSeries first = MultiSeries::one(order, cap) - MultiSeries::monomial(Monomial{c, 1, 0, s}, order, cap);
        return first * pochhammer(Monomial{c, 1, 0, s + 1}, 1, kInfiniteLength, order, cap);
    };
    const MultiSeries rhs = x_product(p.a.coeff, p.a.q) * invert(x_product(1, 0));

    if (const auto d = first_difference(lhs, rhs)) {
        report.fail(d->describe());
    }
    report.note("terms", lhs.term_count());
    return report;
}

VerificationReport check_xq2(const FiniteIdentityParams& p)
{
    const int n = p.n;
    VerificationReport report("XQ2_EXPANSION", "n=" + std::to_string(n));
    if (n < 0) {
        throw DomainError("XQ2_EXPANSION needs n >= 0");
    }
    const int order = std::max(n * (n - 1), 0);
    const MultiSeries lhs = pochhammer(Monomial{1, 1, 0, 0}, 2, n, order);
    MultiSeries rhs(order);
    for (int i = 0; i <= n; ++i) {
        rhs += gauss_binomial(n, i, 2, order).times(Monomial{i % 2 == 0 ? 1 : -1, i, 0, i * i - i});
    }
    if (const auto d = first_difference(lhs, rhs)) {
        report.fail(d->describe());
    }
    report.note("terms", lhs.term_count());
    return report;
}

VerificationReport check_qchu(const FiniteIdentityParams& p)
{
    const int i = p.i;
    const int j = p.j;
    VerificationReport report("QCHU", "i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (i < 0 || j < 0) {
        throw DomainError("QCHU needs i, j >= 0");
    }
    // Both sides multiplied through by (q;q)_j (-q;q)_j so that everything is
    // a Laurent polynomial; (q;q)_j/(q;q)_n = (q^{n+1};q)_{j-n}, likewise for -q.
    LaurentPoly lhs;
    for (int n = 0; n <= j; ++n) {
        lhs += laurent_pochhammer(-1, i + 1, 1, n) * laurent_pochhammer(1, -j, 1, n) * LaurentPoly::monomial(1, n)
               * laurent_pochhammer(1, n + 1, 1, j - n) * laurent_pochhammer(-1, n + 1, 1, j - n);
    }
    const LaurentPoly rhs = LaurentPoly::monomial(j % 2 == 0 ? 1 : -1, j * (i + 1)) * laurent_pochhammer(1, -i, 1, j)
                            * laurent_pochhammer(1, 1, 1, j);
    if (lhs != rhs) {
        report.fail("lhs " + lhs.to_string() + " != rhs " + rhs.to_string());
    }
    report.note("rhs_vanishes", rhs.is_zero() ? "yes" : "no");
    if (j > i && !rhs.is_zero()) {
        report.fail("right side should vanish for j > i");
    }
    return report;
}

}  // namespace

VerificationReport check_finite_identity(FiniteIdentity id, const FiniteIdentityParams& params)
{
    switch (id) {
    case FiniteIdentity::QBinom:
        return check_qbinom(params);
    case FiniteIdentity::Xq2Expansion:
        return check_xq2(params);
    case FiniteIdentity::QChu:
        return check_qchu(params);
    }
    throw DomainError("unknown finite identity");
}

}  // namespace partlab
