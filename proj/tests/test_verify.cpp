#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "partlab/verify.hpp"

using namespace partlab;

namespace {

std::vector<Partition> parse_all(const std::vector<std::string>& literals)
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

}  // namespace

TEST_CASE("family filters")
{
    FamilySpec strict6{.n = 6, .strict = true};
    CHECK(enumerate(strict6) == std::vector<Partition>{{6}, {5, 1}, {4, 2}, {3, 2, 1}});
    FamilySpec odd5{.n = 5, .odd_parts = true};
    CHECK(enumerate(odd5) == std::vector<Partition>{{5}, {3, 1, 1}, {1, 1, 1, 1, 1}});
    FamilySpec d{.n = 16, .strict = true, .length = 4, .sol = 2};
    CHECK(sorted(enumerate(d)) == parse_all({"10+3+2+1", "9+4+2+1", "8+5+2+1", "8+4+3+1", "7+4+3+2", "6+5+4+1"}));
    FamilySpec capped{.n = 6, .max_part = 3};
    CHECK(enumerate(capped).size() == 3);
    FamilySpec none{.n = -1};
    CHECK(enumerate(none).empty());
}

TEST_CASE("cell counts")
{
    CHECK(count_A1(16, 2, 1) == 6);
    CHECK(count_B(16, 2, 2) == 6);
    CHECK(count_D(16, 4, 2) == 6);
    CHECK(count_A2(15, 2, 0) == 5);
    CHECK(count_B(15, 2, 1) == 5);
    CHECK(count_D(15, 3, 1) == 5);
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= k; ++m) {
                if ((k - m) % 2 != 0) {
                    REQUIRE(count_D(n, k, m) == 0);
                }
            }
        }
    }
}

TEST_CASE("example sets match the listed members")
{
    const ExampleSets a = example_sets("16-4-2");
    CHECK(sorted(a.a) == parse_all({"5+5+3+1+1+1", "5+5+1+1+1+1+1+1", "7+5+3+1", "7+5+1+1+1+1", "9+5+1+1", "7+7+1+1"}));
    CHECK(sorted(a.b) == parse_all({"5+5+3+3", "5+5+3+1+1+1", "5+5+1+1+1+1+1+1", "7+5+1+1+1+1", "9+5+1+1", "7+7+1+1"}));
    CHECK(sorted(a.d) == parse_all({"10+3+2+1", "9+4+2+1", "8+5+2+1", "8+4+3+1", "7+4+3+2", "6+5+4+1"}));

    const ExampleSets b = example_sets("15-3-1");
    CHECK(sorted(b.a) == parse_all({"11+3+1", "9+3+1+1+1", "7+3+1+1+1+1+1", "5+3+1+1+1+1+1+1+1", "3+3+1+1+1+1+1+1+1+1+1"}));
    CHECK(sorted(b.b) == parse_all({"9+3+3", "3+3+3+3+3", "3+3+3+3+1+1+1", "3+3+3+1+1+1+1+1+1", "3+3+1+1+1+1+1+1+1+1+1"}));
    CHECK(sorted(b.d) == parse_all({"12+2+1", "10+3+2", "8+4+3", "7+6+2", "6+5+4"}));

    for (const auto& s : {a, b}) {
        CHECK(s.a.size() == s.b.size());
        CHECK(s.b.size() == s.d.size());
    }
    CHECK_THROWS_AS((void)example_sets("1-2-3"), DomainError);
}

TEST_CASE("involution table and fixed points at n = 6")
{
    const auto fixed = involution_fixed_points(6);
    CHECK(fixed.size() == 4);
    const auto rows = involution_table(6);
    REQUIRE(rows.size() == 44);
    CHECK(rows.front() == "- | +");

    std::ifstream golden(PARTLAB_GOLDEN_DIR "/involution_n6.txt");
    REQUIRE(golden.good());
    std::vector<std::string> expected;
    for (std::string line; std::getline(golden, line);) {
        expected.push_back(line);
    }
    std::vector<std::string> got = rows;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}

TEST_CASE("checkers at small bounds")
{
    CHECK(verify("THM11", {.order = 0}).passed);
    CHECK(verify("THM12", {.nmax = 16}).passed);
    const auto inv = verify("INVOLUTION", {.nmax = 6});
    CHECK(inv.passed);
    const auto has_four = std::find(inv.summary.begin(), inv.summary.end(),
                                    std::pair<std::string, std::string>{"fixed_points_n6", "4"});
    CHECK(has_four != inv.summary.end());
    CHECK(verify("EQ31", {.order = 12, .k = 4}).passed);
    CHECK_THROWS_AS((void)verify("NOPE"), DomainError);
}

TEST_CASE("the untyped length/Durfee count differs already at n = 2")
{
    const auto r = verify("COROLLARY", {.nmax = 4});
    CHECK_FALSE(r.passed);
    CHECK(r.witness.find("n=2 k=2") != std::string::npos);
    CHECK(verify("COROLLARY_TYPED", {.nmax = 26}).passed);
}

TEST_CASE("verify_all is deterministic across thread counts")
{
    const auto one = verify_all(1);
    const auto three = verify_all(3);
    REQUIRE(one.size() == checker_names().size());
    REQUIRE(three.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].name == checker_names()[i]);
        CHECK(one[i].to_json() == three[i].to_json());
    }
}

TEST_CASE("report rendering")
{
    VerificationReport r("THM12", "n<=26");
    CHECK(r.verdict_line() == "THM12 n<=26 PASS");
    r.note("cells", 3);
    r.fail("first");
    r.fail("second");
    CHECK(r.witness == "first");
    CHECK(r.verdict_line() == "THM12 n<=26 FAIL");
    CHECK(r.to_text() == "THM12 n<=26 FAIL\n  witness: first\n  cells: 3\n");
    CHECK(r.to_json().dump() == R"({"name":"THM12","bounds":"n<=26","status":"FAIL","witness":"first","summary":{"cells":"3"}})");
}
