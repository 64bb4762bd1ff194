#include "partlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace partlab {

bool FamilySpec::matches(const Partition& p) const
{
    if (strict && !is_strict(p)) {
        return false;
    }
    if (odd_parts && !is_odd_parts(p)) {
        return false;
    }
    if (max_part && p.largest() != *max_part) {
        return false;
    }
    if (length && partlab::length(p) != *length) {
        return false;
    }
    if (sol && (!is_strict(p) || partlab::sol(p) != *sol)) {
        return false;
    }
    if (dur2 && partlab::dur2(p) != *dur2) {
        return false;
    }
    if (dur2_sub || type) {
        if (p.empty()) {
            return false;
        }
        const SubDurfee s = partlab::dur2_sub(p);
        if ((dur2_sub && s.side != *dur2_sub) || (type && s.type != *type)) {
            return false;
        }
    }
    if (alt && (!is_odd_parts(p) || alternating_index(p) != *alt)) {
        return false;
    }
    return true;
}

std::vector<Partition> enumerate(const FamilySpec& spec)
{
    std::vector<Partition> out;
    if (spec.n < 0) {
        return out;
    }
    for_each_partition(
        spec.n,
        [&](const Partition& p) {
            if (spec.matches(p)) {
                out.push_back(p);
            }
        },
        spec.max_part.value_or(std::numeric_limits<int>::max()));
    return out;
}

long long count_D(int n, int k, int m)
{
    FamilySpec s;
    s.n = n;
    s.strict = true;
    s.length = k;
    s.sol = m;
    return static_cast<long long>(enumerate(s).size());
}

namespace {

long long count_A(int n, int k, int m, DurfeeType t)
{
    FamilySpec s;
    s.n = n;
    s.odd_parts = true;
    s.dur2 = k;
    s.dur2_sub = m;
    s.type = t;
    return static_cast<long long>(enumerate(s).size());
}

}  // namespace

long long count_A1(int n, int k, int m) { return count_A(n, k, m, DurfeeType::TypeI); }
long long count_A2(int n, int k, int m) { return count_A(n, k, m, DurfeeType::TypeII); }

long long count_B(int n, int k, int m)
{
    FamilySpec s;
    s.n = n;
    s.odd_parts = true;
    s.dur2 = k;
    s.alt = m;
    return static_cast<long long>(enumerate(s).size());
}

// ---------------------------------------------------------------------------
// Checkers

namespace {

std::string n_bound(int n) { return "n<=" + std::to_string(n); }
std::string order_bound(int order) { return "order=" + std::to_string(order); }

void compare_series(VerificationReport& r, const std::string& what, const MultiSeries& lhs, const MultiSeries& rhs)
{
    if (const auto d = first_difference(lhs, rhs)) {
        r.fail(what + ": " + d->describe());
    }
}

bool is_odd(const Partition& p) { return is_odd_parts(p); }

// (length, sol) histogram of strict partitions and (type, dur2, dur2_sub)
// and (dur2, alt) histograms of odd partitions, for one n.
struct Histograms {
    std::map<std::pair<int, int>, long long> d;
    std::map<std::tuple<DurfeeType, int, int>, long long> a;
    std::map<std::pair<int, int>, long long> b;
    std::map<int, long long> strict_by_length;
    std::map<int, long long> odd_by_dur2;
    std::map<std::pair<DurfeeType, int>, long long> odd_by_type_dur2;
};

Histograms histograms(int n)
{
    Histograms h;
    for_each_partition(n, [&](const Partition& p) {
        if (is_strict(p)) {
            ++h.d[{length(p), sol(p)}];
            ++h.strict_by_length[length(p)];
        }
        if (is_odd_parts(p) && !p.empty()) {
            const SubDurfee s = dur2_sub(p);
            const int k = dur2(p);
            ++h.a[{s.type, k, s.side}];
            ++h.b[{k, alternating_index(p)}];
            ++h.odd_by_dur2[k];
            ++h.odd_by_type_dur2[{s.type, k}];
        }
    });
    return h;
}

template <typename Map, typename Key>
long long lookup(const Map& m, const Key& key)
{
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

VerificationReport check_prop_2measure(const Bounds& b)
{
    const int nmax = b.nmax.value_or(40);
    VerificationReport r("PROP_2MEASURE", n_bound(nmax));
    long long checked = 0;
    for (int n = 0; n <= nmax && r.passed; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            if (!is_strict(p)) {
                return;
            }
            ++checked;
            if (2 * k_measure(p, 2) != length(p) + sol(p)) {
                r.fail(to_string(p) + ": 2*mu2=" + std::to_string(2 * k_measure(p, 2))
                       + " l+sol=" + std::to_string(length(p) + sol(p)));
            }
        });
    }
    r.note("strict_partitions", checked);
    return r;
}

VerificationReport check_thm11(const Bounds& b)
{
    const int order = b.order.value_or(30);
    VerificationReport r("THM11", order_bound(order));
    const MultiSeries lhs = build(SeriesId::LhsThm11, order);
    const MultiSeries rhs = build(SeriesId::RhsThm11, order);
    compare_series(r, "LHS vs RHS", lhs, rhs);
    r.note("terms", lhs.term_count());
    return r;
}

VerificationReport check_eq11(const Bounds& b)
{
    const int order = b.order.value_or(25);
    VerificationReport r("EQ11", order_bound(order));
    const auto enumerated = enumeration_series(
        order, [](const Partition& p) { return is_strict(p); }, [](const Partition& p) { return sol(p); },
        [](const Partition& p) { return length(p); });
    compare_series(r, "double sum vs enumeration", build(SeriesId::GfSolLen, order), enumerated);
    // The 2-measure form of the same double sum.
    const auto by_measure = enumeration_series(
        order, [](const Partition& p) { return is_strict(p); }, [](const Partition& p) { return k_measure(p, 2); },
        [](const Partition& p) { return length(p); });
    compare_series(r, "x^{i+j} double sum vs 2-measure enumeration", build(SeriesId::LhsThm11, order), by_measure);
    r.note("terms", enumerated.term_count());
    return r;
}

VerificationReport check_eq31(const Bounds& b)
{
    const int order = b.order.value_or(22);
    std::vector<int> ks = b.k ? std::vector<int>{*b.k} : std::vector<int>{1, 2, 3};
    std::string ks_text;
    for (int k : ks) {
        ks_text += (ks_text.empty() ? "" : ",") + std::to_string(k);
    }
    VerificationReport r("EQ31", order_bound(order) + " k=" + ks_text);
    for (int k : ks) {
        const auto enumerated = enumeration_series(
            order, [](const Partition& p) { return is_strict(p); },
            [k](const Partition& p) { return k_measure(p, k); }, [](const Partition& p) { return length(p); });
        compare_series(r, "k=" + std::to_string(k), build(SeriesId::GfKMeasure, order, k), enumerated);
    }
    return r;
}

VerificationReport check_eq_2measure_p(const Bounds& b)
{
    const int order = b.order.value_or(20);
    VerificationReport r("EQ_2MEASURE_P", order_bound(order));
    const auto enumerated = enumeration_series(
        order, [](const Partition&) { return true; }, [](const Partition& p) { return k_measure(p, 2); },
        [](const Partition& p) { return length(p); });
    compare_series(r, "product form vs enumeration", build(SeriesId::Gf2MeasureP, order), enumerated);
    return r;
}

VerificationReport check_thm12(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("THM12", n_bound(nmax));
    long long cells = 0;
    for (int n = 1; n <= nmax; ++n) {
        const Histograms h = histograms(n);
        for (int k = 1; k <= n; ++k) {
            for (int m = 0; m <= k; ++m) {
                ++cells;
                const long long a1 = lookup(h.a, std::tuple{DurfeeType::TypeI, k, m});
                const long long a2 = lookup(h.a, std::tuple{DurfeeType::TypeII, k, m});
                const long long d_even = lookup(h.d, std::pair{2 * k, 2 * m});
                const long long d_odd = lookup(h.d, std::pair{2 * k - 1, 2 * m + 1});
                if (a1 != d_even) {
                    r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m)
                           + ": A1=" + std::to_string(a1) + " D(n,2k,2m)=" + std::to_string(d_even));
                }
                if (a2 != d_odd) {
                    r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m)
                           + ": A2=" + std::to_string(a2) + " D(n,2k-1,2m+1)=" + std::to_string(d_odd));
                }
            }
        }
        for (const auto& [km, count] : h.d) {
            if ((km.first - km.second) % 2 != 0 && count != 0) {
                r.fail("n=" + std::to_string(n) + ": D cell with k, m of different parity is nonzero");
            }
        }
    }
    r.note("cells", cells);
    if (nmax >= 16) {
        r.note("A1(16,2,1)", count_A1(16, 2, 1));
        r.note("D(16,4,2)", count_D(16, 4, 2));
    }
    if (nmax >= 15) {
        r.note("A2(15,2,0)", count_A2(15, 2, 0));
        r.note("D(15,3,1)", count_D(15, 3, 1));
    }
    return r;
}

VerificationReport check_thm13(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("THM13", n_bound(nmax));
    long long cells = 0;
    for (int n = 1; n <= nmax; ++n) {
        const Histograms h = histograms(n);
        for (int k = 1; k <= n; ++k) {
            // D(n,k,m) vanishes unless k and m share parity, and both k = 2K-1
            // and k = 2K feed B(n,K,.), so the identity lives on matching parities.
            for (int m = k % 2; m <= k; m += 2) {
                ++cells;
                const long long bb = lookup(h.b, std::pair{(k + 1) / 2, m});
                const long long d = lookup(h.d, std::pair{k, m});
                if (bb != d) {
                    r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m)
                           + ": B(n,ceil(k/2),m)=" + std::to_string(bb) + " D(n,k,m)=" + std::to_string(d));
                }
            }
        }
        for (const auto& [km, count] : h.b) {
            const auto [big_k, m] = km;
            const long long d = lookup(h.d, std::pair{2 * big_k - 1, m}) + lookup(h.d, std::pair{2 * big_k, m});
            if (count != d) {
                r.fail("n=" + std::to_string(n) + ": B(n," + std::to_string(big_k) + "," + std::to_string(m)
                       + ") is not covered by D");
            }
        }
    }
    r.note("cells", cells);
    if (nmax >= 16) {
        r.note("B(16,2,2)", count_B(16, 2, 2));
    }
    if (nmax >= 15) {
        r.note("B(15,2,1)", count_B(15, 2, 1));
    }
    return r;
}

// Counts exactly as worded: strict partitions with k parts against odd
// partitions with 2-modular Durfee side ceil(k/2), nothing else fixed.
VerificationReport check_corollary(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("COROLLARY", n_bound(nmax));
    for (int n = 1; n <= nmax; ++n) {
        const Histograms h = histograms(n);
        for (int k = 1; k <= n; ++k) {
            const long long strict = lookup(h.strict_by_length, k);
            const long long odd = lookup(h.odd_by_dur2, (k + 1) / 2);
            if (strict != odd) {
                r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": #strict with k parts="
                       + std::to_string(strict) + " #odd with Dur2=ceil(k/2)=" + std::to_string(odd));
            }
        }
    }
    return r;
}

// The form that follows from summing either refinement over m: the 2-modular
// type records the parity of the length.
VerificationReport check_corollary_typed(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("COROLLARY_TYPED", n_bound(nmax));
    for (int n = 1; n <= nmax; ++n) {
        const Histograms h = histograms(n);
        for (int k = 1; k <= n; ++k) {
            const long long strict = lookup(h.strict_by_length, k);
            const DurfeeType t = k % 2 == 0 ? DurfeeType::TypeI : DurfeeType::TypeII;
            const long long odd = lookup(h.odd_by_type_dur2, std::pair{t, (k + 1) / 2});
            if (strict != odd) {
                r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": #strict=" + std::to_string(strict)
                       + " #odd of type " + to_string(t) + "=" + std::to_string(odd));
            }
            const long long both = lookup(h.strict_by_length, 2 * ((k + 1) / 2) - 1)
                                   + lookup(h.strict_by_length, 2 * ((k + 1) / 2));
            if (both != lookup(h.odd_by_dur2, (k + 1) / 2)) {
                r.fail("n=" + std::to_string(n) + " K=" + std::to_string((k + 1) / 2)
                       + ": #odd with Dur2=K differs from #strict with 2K-1 or 2K parts");
            }
        }
    }
    return r;
}

VerificationReport check_gf4(const Bounds& b)
{
    const int order = b.order.value_or(25);
    VerificationReport r("GF4", order_bound(order));
    auto odd_of_type = [](DurfeeType t) {
        return [t](const Partition& p) { return is_odd(p) && !p.empty() && dur2_sub(p).type == t; };
    };
    auto sub_side = [](const Partition& p) { return p.empty() ? 0 : dur2_sub(p).side; };
    auto durfee2 = [](const Partition& p) { return dur2(p); };

    compare_series(r, "type I", build(SeriesId::GfATypeI, order),
                   enumeration_series(order, odd_of_type(DurfeeType::TypeI), sub_side, durfee2));
    compare_series(r, "type II", build(SeriesId::GfATypeII, order),
                   enumeration_series(order, odd_of_type(DurfeeType::TypeII), sub_side, durfee2));
    const MultiSeries combined = build(SeriesId::GfATypes, order);
    compare_series(r, "combined vs enumeration", combined, enumeration_series(order, is_odd, sub_side, durfee2));
    compare_series(r, "combined vs even/odd split", combined, build(SeriesId::GfEvenOdd, order));
    const MultiSeries reindexed = build(SeriesId::GfSolLen, order).reindexed([](int sol_exp, int len_exp) {
        return std::pair{sol_exp / 2, (len_exp + 1) / 2};
    });
    compare_series(r, "combined vs reindexed sol/length series", combined, reindexed);
    r.note("terms", combined.term_count());
    return r;
}

VerificationReport check_gf5(const Bounds& b)
{
    const int order = b.order.value_or(25);
    VerificationReport r("GF5", order_bound(order));
    const MultiSeries gf = build(SeriesId::GfB, order);
    compare_series(r, "B vs enumeration", gf,
                   enumeration_series(
                       order, is_odd, [](const Partition& p) { return alternating_index(p); },
                       [](const Partition& p) { return dur2(p); }));
    const MultiSeries reindexed = build(SeriesId::GfSolLen, order).reindexed([](int sol_exp, int len_exp) {
        return std::pair{sol_exp, (len_exp + 1) / 2};
    });
    compare_series(r, "B vs reindexed sol/length series", gf, reindexed);
    const MultiSeries folded = gf.reindexed([](int alt_exp, int k) { return std::pair{alt_exp / 2, k}; });
    compare_series(r, "B folded onto A", folded, build(SeriesId::GfATypes, order));
    r.note("terms", gf.term_count());
    return r;
}

VerificationReport check_sylvester(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("SYLVESTER", n_bound(nmax));
    long long checked = 0;
    for (int n = 0; n <= nmax; ++n) {
        std::set<Partition> images;
        long long odd_count = 0;
        long long strict_count = 0;
        for_each_partition(n, [&](const Partition& p) {
            if (is_strict(p)) {
                ++strict_count;
            }
            if (!is_odd_parts(p)) {
                return;
            }
            ++odd_count;
            ++checked;
            const VerificationReport one = sylvester_stats_check(p);
            if (!one.passed) {
                r.fail(to_string(p) + ": " + one.witness);
                return;
            }
            images.insert(sylvester(p));
        });
        if (static_cast<long long>(images.size()) != odd_count) {
            r.fail("n=" + std::to_string(n) + ": Sylvester's map is not injective");
        }
        if (odd_count != strict_count) {
            r.fail("n=" + std::to_string(n) + ": odd and strict counts differ");
        }
    }
    const Partition example{9, 7, 7, 5, 1, 1};
    if (sylvester(example) != Partition{10, 7, 5, 4, 3, 1}) {
        r.fail("S(9+7+7+5+1+1) = " + to_string(sylvester(example)));
    }
    r.note("odd_partitions", checked);
    return r;
}

std::vector<SignedPair> expected_fixed_n6()
{
    return {
        parse_signed_pair("0|6x"),
        parse_signed_pair("0|5x+1x"),
        parse_signed_pair("0|4x+2x"),
        parse_signed_pair("2|3x+1x"),
    };
}

VerificationReport check_involution(const Bounds& b)
{
    const int nmax = b.nmax.value_or(12);
    VerificationReport r("INVOLUTION", n_bound(nmax));
    const MultiSeries rhs = build(SeriesId::RhsThm11, nmax);
    long long pairs_checked = 0;
    for (int n = 0; n <= nmax; ++n) {
        std::map<std::pair<int, int>, long long> signed_sum;
        std::map<std::pair<int, int>, long long> fixed_sum;
        std::vector<SignedPair> fixed;
        for (const SignedPair& pr : signed_pairs(n)) {
            ++pairs_checked;
            const std::string who = to_string(pr);
            const Monomial w = pr.weight();
            signed_sum[{w.x, w.y}] += pr.sign();
            const PairClass c = classify_pair(pr);
            SignedPair image;
            try {
                image = involution_phi(pr);
            } catch (const std::exception& e) {
                r.fail(who + ": " + e.what());
                continue;
            }
            if (!image.is_valid()) {
                r.fail(who + ": image is not a valid pair");
            }
            if (involution_phi(image) != pr) {
                r.fail(who + ": phi(phi(p)) != p");
            }
            const Monomial wi = image.weight();
            if (wi.x != w.x || wi.y != w.y || wi.q != w.q) {
                r.fail(who + ": weight changed");
            }
            if (c.kind == PairCase::Fixed) {
                if (image != pr) {
                    r.fail(who + ": fixed point moved");
                }
                fixed.push_back(pr);
                fixed_sum[{w.x, w.y}] += pr.sign();
                const Partition tau = fixed_to_strict(pr);
                if (strict_to_fixed(tau) != pr) {
                    r.fail(who + ": union with the fixed point does not invert");
                }
                if (w.x != k_measure(tau, 2) || w.y != length(tau)) {
                    r.fail(who + ": fixed-point weight disagrees with (mu2, length) of the union");
                }
                continue;
            }
            if (image.sign() != -pr.sign()) {
                r.fail(who + ": sign not reversed");
            }
            const PairCase image_case = classify_pair(image).kind;
            if ((c.kind == PairCase::Case1) != (image_case == PairCase::Case2)) {
                r.fail(who + ": case 1 and case 2 are not exchanged");
            }
        }
        std::map<std::pair<int, int>, long long> strict_sum;
        for_each_partition(n, [&](const Partition& t) {
            if (is_strict(t)) {
                ++strict_sum[{k_measure(t, 2), length(t)}];
                if (fixed_to_strict(strict_to_fixed(t)) != t) {
                    r.fail(to_string(t) + ": strict_to_fixed does not invert");
                }
            }
        });
        std::erase_if(signed_sum, [](const auto& kv) { return kv.second == 0; });
        if (signed_sum != fixed_sum) {
            r.fail("n=" + std::to_string(n) + ": signed sum does not telescope to the fixed points");
        }
        if (fixed_sum != strict_sum) {
            r.fail("n=" + std::to_string(n) + ": fixed-point sum differs from the strict (mu2, length) sum");
        }
        for (const auto& [xy, c] : signed_sum) {
            if (rhs.coeff(n, xy.first, xy.second) != c) {
                r.fail("n=" + std::to_string(n) + ": signed sum differs from the product-side coefficient");
            }
        }
        if (n == 6) {
            auto expected = expected_fixed_n6();
            auto by_text = [](const SignedPair& a, const SignedPair& b2) { return to_string(a) < to_string(b2); };
            std::sort(expected.begin(), expected.end(), by_text);
            std::sort(fixed.begin(), fixed.end(), by_text);
            if (fixed != expected) {
                r.fail("n=6: fixed points differ from (ε,6x), (ε,5x+1x), (ε,4x+2x), (2,3x+1x)");
            }
            r.note("fixed_points_n6", fixed.size());
        }
    }
    r.note("pairs", pairs_checked);
    return r;
}

VerificationReport check_lemma51(const Bounds& b)
{
    const int mmax = b.nmax.value_or(10);
    const int order = b.order.value_or(30);
    VerificationReport r("LEMMA51", "m<=" + std::to_string(mmax) + " " + order_bound(order));
    for (int m = 1; m <= mmax; ++m) {
        MultiSeries enumerated(order);
        for (int n = m; n <= order; ++n) {
            for_each_partition(
                n,
                [&](const Partition& p) {
                    if (p.largest() != m) {
                        return;
                    }
                    std::vector<int> ascending(p.vec().rbegin(), p.vec().rend());
                    enumerated.add_term(n, parity_index(ascending), 0, 1);
                },
                m);
        }
        compare_series(r, "m=" + std::to_string(m), build(SeriesId::GfParity, order, m), enumerated);
    }
    const OddGapSplit sample = lemma51_decompose(Partition{8, 5, 5, 2, 2, 2, 1});
    if (sample.sigma != Partition{7, 6, 3, 1} || sample.tau != Partition{4, 2, 2}) {
        r.fail("8+5+5+2+2+2+1 split as " + to_string(sample.sigma) + " / " + to_string(sample.tau));
    }
    const int round_trip_n = 14;
    for (int n = 0; n <= round_trip_n; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            const OddGapSplit s = lemma51_decompose(p);
            std::vector<int> ascending(p.vec().rbegin(), p.vec().rend());
            if (!is_strict(s.sigma) || !is_even_parts(s.tau) || size(s.sigma) + size(s.tau) != size(p)
                || length(s.sigma) != parity_index(ascending)) {
                r.fail(to_string(p) + ": decomposition invariants fail");
            }
            if (lemma51_compose(s.sigma, s.tau) != p) {
                r.fail(to_string(p) + ": composition does not invert");
            }
        });
    }
    r.note("round_trip", n_bound(round_trip_n));
    return r;
}

VerificationReport check_glaisher(const Bounds& b)
{
    const int nmax = b.nmax.value_or(26);
    VerificationReport r("GLAISHER_COUNTEREX", n_bound(nmax));
    const Partition lambda{11, 3, 1};
    const Partition image = glaisher(lambda);
    if (image != lambda) {
        r.fail("glaisher(11+3+1) = " + to_string(image));
    }
    if (!(dur2_sub(lambda) == SubDurfee{DurfeeType::TypeII, 0}) || dur2(lambda) != 2) {
        r.fail("11+3+1 is not in A^II(15,2,0)");
    }
    FamilySpec d15;
    d15.n = 15;
    d15.strict = true;
    d15.length = 3;
    d15.sol = 1;
    if (d15.matches(image)) {
        r.fail("glaisher(11+3+1) lies in D(15,3,1)");
    }
    r.note("image", to_string(image));
    r.note("image_length", length(image));
    r.note("image_sol", sol(image));
    for (int n = 0; n <= nmax; ++n) {
        std::set<Partition> images;
        long long odd_count = 0;
        for_each_partition(n, [&](const Partition& p) {
            if (!is_odd_parts(p)) {
                return;
            }
            ++odd_count;
            const Partition g = glaisher(p);
            if (!is_strict(g) || size(g) != n) {
                r.fail(to_string(p) + ": glaisher image " + to_string(g) + " is not a strict partition of n");
            }
            images.insert(g);
        });
        if (static_cast<long long>(images.size()) != odd_count) {
            r.fail("n=" + std::to_string(n) + ": glaisher is not injective");
        }
    }
    return r;
}

VerificationReport check_euler(const Bounds& b)
{
    const int nmax = b.nmax.value_or(30);
    VerificationReport r("EULER", n_bound(nmax));
    for (int n = 0; n <= nmax; ++n) {
        FamilySpec strict{.n = n, .strict = true};
        FamilySpec odd{.n = n, .odd_parts = true};
        if (enumerate(strict).size() != enumerate(odd).size()) {
            r.fail("n=" + std::to_string(n) + ": strict and odd counts differ");
        }
    }
    return r;
}

VerificationReport check_qbinom_all(const Bounds& b)
{
    const int order = b.order.value_or(15);
    VerificationReport r("QBINOM", order_bound(order) + " a in {q,q^2,-q}");
    for (const Monomial& a : {Monomial{1, 0, 0, 1}, Monomial{1, 0, 0, 2}, Monomial{-1, 0, 0, 1}}) {
        const auto one = check_finite_identity(FiniteIdentity::QBinom, {.a = a, .order = order});
        if (!one.passed) {
            r.fail(one.bounds + ": " + one.witness);
        }
    }
    return r;
}

VerificationReport check_xq2_all(const Bounds& b)
{
    const int nmax = b.nmax.value_or(8);
    VerificationReport r("XQ2_EXPANSION", n_bound(nmax));
    for (int n = 0; n <= nmax; ++n) {
        const auto one = check_finite_identity(FiniteIdentity::Xq2Expansion, {.n = n});
        if (!one.passed) {
            r.fail(one.bounds + ": " + one.witness);
        }
    }
    return r;
}

VerificationReport check_qchu_all(const Bounds& b)
{
    const int nmax = b.nmax.value_or(6);
    VerificationReport r("QCHU", "i,j<=" + std::to_string(nmax));
    long long vanishing = 0;
    for (int i = 0; i <= nmax; ++i) {
        for (int j = 0; j <= nmax; ++j) {
            const auto one = check_finite_identity(FiniteIdentity::QChu, {.i = i, .j = j});
            if (!one.passed) {
                r.fail(one.bounds + ": " + one.witness);
            }
            vanishing += j > i ? 1 : 0;
        }
    }
    r.note("vanishing_cases", vanishing);
    return r;
}

using Checker = std::function<VerificationReport(const Bounds&)>;

const std::vector<std::pair<std::string, Checker>>& registry()
{
    static const std::vector<std::pair<std::string, Checker>> checkers = {
        {"PROP_2MEASURE", check_prop_2measure},
        {"THM11", check_thm11},
        {"EQ11", check_eq11},
        {"EQ31", check_eq31},
        {"EQ_2MEASURE_P", check_eq_2measure_p},
        {"THM12", check_thm12},
        {"THM13", check_thm13},
        {"COROLLARY", check_corollary},
        {"COROLLARY_TYPED", check_corollary_typed},
        {"GF4", check_gf4},
        {"GF5", check_gf5},
        {"SYLVESTER", check_sylvester},
        {"INVOLUTION", check_involution},
        {"LEMMA51", check_lemma51},
        {"GLAISHER_COUNTEREX", check_glaisher},
        {"EULER", check_euler},
        {"QBINOM", check_qbinom_all},
        {"XQ2_EXPANSION", check_xq2_all},
        {"QCHU", check_qchu_all},
    };
    return checkers;
}

unsigned worker_count(unsigned requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("PARTITION_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

const std::vector<std::string>& checker_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) {
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

VerificationReport verify(std::string_view name, const Bounds& bounds)
{
    for (const auto& [checker_name, fn] : registry()) {
        if (checker_name == name) {
            return fn(bounds);
        }
    }
    throw DomainError("unknown checker '" + std::string(name) + "'");
}

std::vector<VerificationReport> verify_all(unsigned threads)
{
    const auto& checkers = registry();
    std::vector<VerificationReport> reports(checkers.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checkers.size(); i = next++) {
            reports[i] = checkers[i].second(Bounds{});
        }
    };
    const unsigned n = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(checkers.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    return reports;
}

// ---------------------------------------------------------------------------
// Example sets and the involution table

ExampleSets example_sets(std::string_view preset)
{
    ExampleSets out;
    FamilySpec a{.odd_parts = true};
    FamilySpec b{.odd_parts = true};
    FamilySpec d{.strict = true};
    if (preset == "16-4-2") {
        a.n = b.n = d.n = 16;
        a.dur2 = 2;
        a.dur2_sub = 1;
        a.type = DurfeeType::TypeI;
        b.dur2 = 2;
        b.alt = 2;
        d.length = 4;
        d.sol = 2;
        out.a_name = "A^I(16,2,1)";
        out.b_name = "B(16,2,2)";
        out.d_name = "D(16,4,2)";
    } else if (preset == "15-3-1") {
        a.n = b.n = d.n = 15;
        a.dur2 = 2;
        a.dur2_sub = 0;
        a.type = DurfeeType::TypeII;
        b.dur2 = 2;
        b.alt = 1;
        d.length = 3;
        d.sol = 1;
        out.a_name = "A^II(15,2,0)";
        out.b_name = "B(15,2,1)";
        out.d_name = "D(15,3,1)";
    } else {
        throw DomainError("unknown example preset '" + std::string(preset) + "' (expected 16-4-2 or 15-3-1)");
    }
    out.a = enumerate(a);
    out.b = enumerate(b);
    out.d = enumerate(d);
    return out;
}

std::vector<SignedPair> involution_fixed_points(int n)
{
    std::vector<SignedPair> fixed;
    for (const SignedPair& pr : signed_pairs(n)) {
        if (classify_pair(pr).kind == PairCase::Fixed) {
            fixed.push_back(pr);
        }
    }
    return fixed;
}

std::vector<std::string> involution_table(int n)
{
    std::vector<std::pair<SignedPair, SignedPair>> rows;
    for (const SignedPair& pr : signed_pairs(n)) {
        if (pr.sign() < 0 && classify_pair(pr).kind != PairCase::Fixed) {
            rows.emplace_back(pr, involution_phi(pr));
        }
    }
    auto key = [](const SignedPair& pr) {
        const auto& parts = pr.strict_part.vec();
        return std::tuple{length(pr.strict_part), std::vector<int>(parts.rbegin(), parts.rend()),
                          to_string(pr.labeled_part)};
    };
    std::sort(rows.begin(), rows.end(), [&](const auto& l, const auto& r) {
        return key(l.first) < key(r.first);
    });
    std::vector<std::string> out{"- | +"};
    for (const auto& [neg, pos] : rows) {
        out.push_back(to_compact_string(neg) + " | " + to_compact_string(pos));
    }
    return out;
}

}  // namespace partlab
