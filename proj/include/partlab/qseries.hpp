#ifndef PARTLAB_QSERIES_HPP
#define PARTLAB_QSERIES_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlab/core.hpp"
#include "partlab/report.hpp"

namespace partlab {

/// c * x^x * y^y * q^q. The q exponent may be negative only when the
/// monomial feeds Laurent arithmetic.
struct Monomial {
    BigInt coeff = 1;
    int x = 0;
    int y = 0;
    int q = 0;
};

/// Truncated formal power series in q (exponents 0..order) whose
/// coefficients are integer polynomials in x and y.
///
/// Terms are bucketed by q exponent; zero coefficients are never stored.
/// An optional x-degree cap turns the coefficient ring into Z[x]/(x^{cap+1})[y],
/// which is what lets series such as 1/(x;q)_inf be inverted.
class MultiSeries {
public:
    using XY = std::pair<int, int>;
    using Bucket = std::map<XY, BigInt>;

    explicit MultiSeries(int order, std::optional<int> x_order = std::nullopt);

    static MultiSeries one(int order, std::optional<int> x_order = std::nullopt);
    static MultiSeries monomial(const Monomial& m, int order, std::optional<int> x_order = std::nullopt);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] std::optional<int> x_order() const noexcept { return x_order_; }
    [[nodiscard]] const Bucket& bucket(int q) const { return buckets_.at(static_cast<std::size_t>(q)); }
    [[nodiscard]] BigInt coeff(int q, int x, int y) const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::size_t term_count() const noexcept;
    [[nodiscard]] int max_y_degree() const noexcept;

    /// Adds c * x^x y^y q^q; silently dropped beyond the truncation.
    void add_term(int q, int x, int y, const BigInt& c);

    MultiSeries& operator+=(const MultiSeries& other);
    MultiSeries& operator-=(const MultiSeries& other);
    [[nodiscard]] MultiSeries operator-() const;
    [[nodiscard]] MultiSeries times(const Monomial& m) const;

    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b) = default;

    /// Same series at a smaller order.
    [[nodiscard]] MultiSeries truncated(int order) const;

    /// Moves every term x^a y^b q^c to x^{a'} y^{b'} q^c with (a',b') = f(a,b).
    template <typename F>
    [[nodiscard]] MultiSeries reindexed(F&& f) const
    {
        MultiSeries out(order_, x_order_);
        for (int q = 0; q <= order_; ++q) {
            for (const auto& [xy, c] : buckets_[static_cast<std::size_t>(q)]) {
                const auto [x, y] = f(xy.first, xy.second);
                out.add_term(q, x, y, c);
            }
        }
        return out;
    }

private:
    void require_compatible(const MultiSeries& other) const;

    int order_;
    std::optional<int> x_order_;
    std::vector<Bucket> buckets_;
};

/// Multiplicative inverse. The q^0 coefficient must be +-1, or, when the
/// series carries an x-degree cap, an x-polynomial with constant term +-1.
[[nodiscard]] MultiSeries invert(const MultiSeries& a);

/// First (q, x, y) exponent, in lexicographic order, where the two series differ.
struct Discrepancy {
    int q = 0;
    int x = 0;
    int y = 0;
    BigInt lhs;
    BigInt rhs;

    [[nodiscard]] std::string describe() const;
};
[[nodiscard]] std::optional<Discrepancy> first_difference(const MultiSeries& a, const MultiSeries& b);

/// One term per line, "q^c x^a y^b : coeff", sorted by (c, a, b).
[[nodiscard]] std::string serialize(const MultiSeries& s);

/// Finitely supported Laurent polynomial in q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const BigInt& c, int q_exp);

    [[nodiscard]] const std::map<int, BigInt>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] BigInt coeff(int q_exp) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void add(int q_exp, const BigInt& c);
    std::map<int, BigInt> terms_;
};

inline constexpr int kInfiniteLength = std::numeric_limits<int>::max();

/// (a; q^step)_n = (1-a)(1-a q^step)...(1-a q^{step(n-1)}) truncated at `order`.
/// n = kInfiniteLength gives the infinite product, which needs a.q >= 1 and step >= 1.
[[nodiscard]] MultiSeries pochhammer(const Monomial& a, int step, int n, int order,
                                     std::optional<int> x_order = std::nullopt);

/// Finite Pochhammer product where `a` = c q^{a_q} may carry a negative exponent.
[[nodiscard]] LaurentPoly laurent_pochhammer(const BigInt& c, int a_q, int step, int n);

/// Gaussian binomial [a choose b] in q^step; zero when b > a. When `order` is
/// omitted the full polynomial degree step*b*(a-b) is kept.
[[nodiscard]] MultiSeries gauss_binomial(int a, int b, int step, std::optional<int> order = std::nullopt);

/// Every displayed generating function the engine knows how to build.
enum class SeriesId {
    LhsThm11,     ///< double sum with x^{i+j} y^{i+2j}
    RhsThm11,     ///< (-yq;q)_inf sum over n with (x;q^2)_n
    GfSolLen,     ///< double sum with x^i y^{i+2j}: strict partitions by (sol, length)
    GfKMeasure,   ///< param k: strict partitions by (k-measure, length)
    Gf2MeasureP,  ///< all partitions by (2-measure, length)
    GfATypeI,     ///< odd partitions of type I by (dur2, Dur2)
    GfATypeII,    ///< odd partitions of type II by (dur2, Dur2)
    GfATypes,     ///< 1 + type I + type II
    GfEvenOdd,    ///< the sol/length double sum split into even and odd i
    GfB,          ///< odd partitions by (alt, Dur2)
    GfParity,     ///< param m: partitions with largest part m by parity index
};

[[nodiscard]] std::optional<SeriesId> series_id_from_string(std::string_view name);
[[nodiscard]] std::string to_string(SeriesId id);
[[nodiscard]] const std::vector<SeriesId>& all_series_ids();

/// Exact truncation at `order` of the named sum. `param` is k for
/// GfKMeasure and m for GfParity, ignored otherwise.
[[nodiscard]] MultiSeries build(SeriesId id, int order, int param = 0);

enum class FiniteIdentity {
    QBinom,        ///< sum (a;q)_m x^m/(q;q)_m = (ax;q)_inf/(x;q)_inf
    Xq2Expansion,  ///< (x;q^2)_n as a sum of q^2-binomials
    QChu,          ///< terminating q-Chu-Vandermonde at (-q^{i+1}, q^{-j}; -q)
};

struct FiniteIdentityParams {
    Monomial a{1, 0, 0, 1};  ///< QBinom: the parameter a (x = y = 0)
    int order = 10;          ///< QBinom: q truncation (x is truncated at the same degree)
    int n = 0;               ///< Xq2Expansion
    int i = 0;               ///< QChu
    int j = 0;               ///< QChu
};

[[nodiscard]] VerificationReport check_finite_identity(FiniteIdentity id, const FiniteIdentityParams& params);

}  // namespace partlab

#endif  // PARTLAB_QSERIES_HPP
