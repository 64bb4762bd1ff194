// Acceptance suite: one verdict line per criterion.
//
//   acceptance        run all criteria
//   acceptance N      run criterion N only (exit status reflects it)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "partlab/verify.hpp"

using namespace partlab;

namespace {

struct Outcome {
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }

    void require(const VerificationReport& r)
    {
        if (r.passed) {
            notes.push_back(r.verdict_line());
        } else {
            failures.push_back(r.verdict_line() + ": " + r.witness);
        }
    }
    void require(bool ok, const std::string& what) { (ok ? notes : failures).push_back(what); }

    [[nodiscard]] std::string detail() const
    {
        std::string out;
        for (const auto& s : failures.empty() ? notes : failures) {
            out += (out.empty() ? "" : "; ") + s;
        }
        return out;
    }
};

std::vector<Partition> sorted_literals(const std::vector<std::string>& literals)
{
    std::vector<Partition> out;
    for (const auto& s : literals) {
        out.push_back(parse_partition(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> sorted(std::vector<Partition> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<std::string> kA16 = {"5+5+3+1+1+1", "5+5+1+1+1+1+1+1", "7+5+3+1", "7+5+1+1+1+1", "9+5+1+1", "7+7+1+1"};
const std::vector<std::string> kB16 = {"5+5+3+3", "5+5+3+1+1+1", "5+5+1+1+1+1+1+1", "7+5+1+1+1+1", "9+5+1+1", "7+7+1+1"};
const std::vector<std::string> kD16 = {"10+3+2+1", "9+4+2+1", "8+5+2+1", "8+4+3+1", "7+4+3+2", "6+5+4+1"};
const std::vector<std::string> kA15 = {"11+3+1", "9+3+1+1+1", "7+3+1+1+1+1+1", "5+3+1+1+1+1+1+1+1", "3+3+1+1+1+1+1+1+1+1+1"};
const std::vector<std::string> kB15 = {"9+3+3", "3+3+3+3+3", "3+3+3+3+1+1+1", "3+3+3+1+1+1+1+1+1", "3+3+1+1+1+1+1+1+1+1+1"};
const std::vector<std::string> kD15 = {"12+2+1", "10+3+2", "8+4+3", "7+6+2", "6+5+4"};

Outcome c1()
{
    Outcome o;
    o.require(verify("THM11", {.order = 30}));
    return o;
}

Outcome c2()
{
    Outcome o;
    o.require(verify("EQ11", {.order = 25}));
    return o;
}

Outcome c3()
{
    Outcome o;
    o.require(verify("PROP_2MEASURE", {.nmax = 40}));
    return o;
}

Outcome c4()
{
    Outcome o;
    o.require(verify("THM12", {.nmax = 26}));
    o.require(count_A1(16, 2, 1) == 6 && count_D(16, 4, 2) == 6, "A1(16,2,1)=D(16,4,2)=6");
    o.require(count_A2(15, 2, 0) == 5 && count_D(15, 3, 1) == 5, "A2(15,2,0)=D(15,3,1)=5");
    const ExampleSets s16 = example_sets("16-4-2");
    const ExampleSets s15 = example_sets("15-3-1");
    o.require(sorted(s16.a) == sorted_literals(kA16) && sorted(s16.d) == sorted_literals(kD16),
              "16-4-2 A and D sets match elementwise");
    o.require(sorted(s15.a) == sorted_literals(kA15) && sorted(s15.d) == sorted_literals(kD15),
              "15-3-1 A and D sets match elementwise");
    return o;
}

Outcome c5()
{
    Outcome o;
    o.require(verify("THM13", {.nmax = 26}));
    o.require(count_B(16, 2, 2) == 6, "B(16,2,2)=6");
    o.require(count_B(15, 2, 1) == 5, "B(15,2,1)=5");
    o.require(sorted(example_sets("16-4-2").b) == sorted_literals(kB16), "16-4-2 B set matches elementwise");
    o.require(sorted(example_sets("15-3-1").b) == sorted_literals(kB15), "15-3-1 B set matches elementwise");
    return o;
}

Outcome c6()
{
    Outcome o;
    // Checked exactly as worded. The typed form is reported alongside.
    o.require(verify("COROLLARY", {.nmax = 26}));
    const auto typed = verify("COROLLARY_TYPED", {.nmax = 26});
    o.notes.push_back("typed form: " + typed.verdict_line());
    if (!o.passed()) {
        o.failures.push_back("typed form: " + typed.verdict_line());
    }
    return o;
}

Outcome c7()
{
    Outcome o;
    o.require(verify("SYLVESTER", {.nmax = 26}));
    return o;
}

Outcome c8()
{
    Outcome o;
    o.require(verify("INVOLUTION", {.nmax = 12}));
    o.require(involution_fixed_points(6).size() == 4, "4 fixed points at n=6");
    std::ifstream in(PARTLAB_GOLDEN_DIR "/involution_n6.txt");
    std::vector<std::string> expected;
    for (std::string line; std::getline(in, line);) {
        expected.push_back(line);
    }
    std::vector<std::string> got = involution_table(6);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    o.require(!expected.empty() && got == expected, "n=6 table matches the 43-row golden file");
    return o;
}

Outcome c9()
{
    Outcome o;
    o.require(verify("EQ31", {.order = 22}));
    o.require(verify("EQ_2MEASURE_P", {.order = 20}));
    return o;
}

Outcome c10()
{
    Outcome o;
    o.require(verify("GF4", {.order = 25}));
    o.require(verify("GF5", {.order = 25}));
    return o;
}

Outcome c11()
{
    Outcome o;
    o.require(verify("LEMMA51", {.nmax = 10, .order = 30}));
    return o;
}

Outcome c12()
{
    Outcome o;
    o.require(verify("XQ2_EXPANSION", {.nmax = 8}));
    o.require(verify("QCHU", {.nmax = 6}));
    o.require(verify("QBINOM", {.order = 15}));
    return o;
}

Outcome c13()
{
    Outcome o;
    o.require(verify("GLAISHER_COUNTEREX", {.nmax = 26}));
    const Partition p{11, 3, 1};
    o.require(glaisher(p) == p, "glaisher(11+3+1)=11+3+1");
    o.require(sol(glaisher(p)) == 3 && count_D(15, 3, 1) == 5
                  && !FamilySpec{.n = 15, .strict = true, .length = 3, .sol = 1}.matches(glaisher(p)),
              "image has sol 3, not in D(15,3,1)");
    return o;
}

struct Criterion {
    const char* label;
    std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {"double sum equals product side, order 30", c1},
    {"sol/length double sum equals enumeration, order 25", c2},
    {"2*mu2 = length + sol on strict partitions, n<=40", c3},
    {"A1/A2 cells equal D cells, n<=26, with example sets", c4},
    {"B cells equal D cells, n<=26, with example sets", c5},
    {"strict by length vs odd by Dur2, n<=26", c6},
    {"Sylvester bijection and hook relations, n<=26", c7},
    {"sign-reversing involution, n<=12, n=6 table", c8},
    {"k-measure series k=1,2,3 and 2-measure over all partitions", c9},
    {"A and B generating functions, order 25", c10},
    {"parity-index series m<=10 and odd-gap decomposition", c11},
    {"finite q-identities", c12},
    {"Glaisher image of 11+3+1", c13},
};

}  // namespace

int main(int argc, char** argv)
{
    std::size_t first = 1;
    std::size_t last = kCriteria.size();
    if (argc > 1) {
        const int which = std::atoi(argv[1]);
        if (which < 1 || which > static_cast<int>(kCriteria.size())) {
            std::cerr << "usage: acceptance [1-" << kCriteria.size() << "]\n";
            return 2;
        }
        first = last = static_cast<std::size_t>(which);
    }
    bool all = true;
    for (std::size_t i = first; i <= last; ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = kCriteria[i - 1].run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.passed() ? "PASS" : "FAIL") << " criterion " << i << " (" << kCriteria[i - 1].label
                  << ") [" << timing << "] " << o.detail() << '\n';
        all = all && o.passed();
    }
    return all ? 0 : 1;
}
