// partlab: command-line front end over the partlab library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partlab/core.hpp"
#include "partlab/maps.hpp"
#include "partlab/qseries.hpp"
#include "partlab/shapes.hpp"
#include "partlab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace partlab;

enum class Format { Text, Json };

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Key/value rows shared by the text and JSON renderings of `stats`.
using Fields = std::vector<std::pair<std::string, json>>;

Fields stats_fields(const Partition& p)
{
    Fields f;
    f.emplace_back("partition", to_string(p));
    f.emplace_back("size", size(p));
    f.emplace_back("length", length(p));
    if (is_strict(p)) {
        f.emplace_back("sol", sol(p));
    }
    f.emplace_back("mu1", k_measure(p, 1));
    f.emplace_back("mu3", k_measure(p, 3));
    f.emplace_back("Dur", durfee_side(p));
    if (!p.empty()) {
        const SubDurfee s = sub_durfee_side(p);
        f.emplace_back("dur", s.side);
        f.emplace_back("type", to_string(s.type));
        f.emplace_back("type2", to_string(dur2_sub(p).type));
    }
    f.emplace_back("Dur2", dur2(p));
    if (!p.empty()) {
        f.emplace_back("dur2", dur2_sub(p).side);
    }
    f.emplace_back("mu2", k_measure(p, 2));
    if (is_odd_parts(p)) {
        f.emplace_back("alt", alternating_index(p));
    }
    return f;
}

void print_fields(const Fields& f, Format fmt)
{
    if (fmt == Format::Json) {
        json j = json::object();
        for (const auto& [k, v] : f) {
            j[k] = v;
        }
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::string line;
    for (const auto& [k, v] : f) {
        if (k == "partition") {
            continue;
        }
        if (!line.empty()) {
            line += ' ';
        }
        line += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    std::cout << line << '\n';
}

int run_stats(const std::string& literal, bool diagram, Format fmt)
{
    const Partition p = parse_partition(literal);
    Fields f = stats_fields(p);
    if (diagram) {
        f.emplace_back("diagram", modular2_diagram(p, BorderStyle::LastCell).render());
    }
    if (fmt == Format::Json || !diagram) {
        print_fields(f, fmt);
        return kExitOk;
    }
    const std::string picture = f.back().second.get<std::string>();
    f.pop_back();
    print_fields(f, fmt);
    std::cout << picture << (picture.ends_with('\n') ? "" : "\n");
    return kExitOk;
}

int run_map(const std::string& which, const std::string& literal, Format fmt)
{
    json j;
    j["map"] = which;
    j["input"] = literal;
    std::string text;
    if (which == "sylvester" || which == "glaisher") {
        const Partition p = parse_partition(literal);
        require_odd_parts(p, which);
        const Partition image = which == "sylvester" ? sylvester(p) : glaisher(p);
        j["output"] = to_string(image);
        text = to_string(image);
    } else if (which == "phi") {
        const SignedPair pr = parse_signed_pair(literal);
        const SignedPair image = involution_phi(pr);
        j["output"] = to_string(image);
        j["case"] = to_string(classify_pair(pr).kind);
        j["sign"] = pr.sign();
        j["image_sign"] = image.sign();
        text = to_string(image) + " " + to_string(classify_pair(pr).kind);
    } else {
        throw DomainError("unknown map '" + which + "' (expected sylvester, glaisher or phi)");
    }
    if (fmt == Format::Json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text << '\n';
    }
    return kExitOk;
}

int run_series(const std::string& name, int order, std::optional<int> k, std::optional<int> m, Format fmt)
{
    const auto id = series_id_from_string(name);
    if (!id) {
        std::string known;
        for (SeriesId s : all_series_ids()) {
            known += (known.empty() ? "" : ", ") + to_string(s);
        }
        throw DomainError("unknown series '" + name + "' (known: " + known + ")");
    }
    const int param = k ? *k : m.value_or(0);
    const MultiSeries s = build(*id, order, param);
    if (fmt == Format::Text) {
        std::cout << serialize(s);
        return kExitOk;
    }
    json j;
    j["name"] = to_string(*id);
    j["order"] = order;
    if (k || m) {
        j["param"] = param;
    }
    json terms = json::array();
    for (int q = 0; q <= s.order(); ++q) {
        for (const auto& [xy, c] : s.bucket(q)) {
            terms.push_back({{"q", q}, {"x", xy.first}, {"y", xy.second}, {"coeff", c.str()}});
        }
    }
    j["terms"] = std::move(terms);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

void print_report(const VerificationReport& r, Format fmt)
{
    if (fmt == Format::Json) {
        std::cout << r.to_json().dump(2) << '\n';
    } else {
        std::cout << r.to_text();
    }
}

int run_verify(const std::string& checker, const Bounds& bounds, const std::string& profile, Format fmt)
{
    if (checker != "all") {
        const VerificationReport r = verify(checker, bounds);
        print_report(r, fmt);
        return r.passed ? kExitOk : kExitFail;
    }
    if (profile != "desk") {
        throw DomainError("unknown profile '" + profile + "' (expected desk)");
    }
    const auto reports = verify_all();
    bool all_passed = true;
    json arr = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        if (fmt == Format::Json) {
            arr.push_back(r.to_json());
        } else {
            std::cout << r.verdict_line() << '\n';
            if (!r.passed) {
                std::cout << "  witness: " << r.witness << '\n';
            }
        }
    }
    if (fmt == Format::Json) {
        std::cout << json{{"profile", profile}, {"status", all_passed ? "PASS" : "FAIL"}, {"reports", arr}}.dump(2)
                  << '\n';
    }
    return all_passed ? kExitOk : kExitFail;
}

int run_table(const std::string& which, int n, Format fmt)
{
    if (which != "involution") {
        throw DomainError("unknown table '" + which + "' (expected involution)");
    }
    const auto rows = involution_table(n);
    if (fmt == Format::Json) {
        json j;
        j["table"] = which;
        j["n"] = n;
        json fixed = json::array();
        for (const SignedPair& pr : involution_fixed_points(n)) {
            fixed.push_back(to_compact_string(pr));
        }
        j["fixed_points"] = std::move(fixed);
        json pairs = json::array();
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto bar = rows[i].find(" | ");
            pairs.push_back({{"-", rows[i].substr(0, bar)}, {"+", rows[i].substr(bar + 3)}});
        }
        j["rows"] = std::move(pairs);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& row : rows) {
        std::cout << row << '\n';
    }
    return kExitOk;
}

int run_examples(const std::string& preset, Format fmt)
{
    const ExampleSets sets = example_sets(preset);
    const std::vector<std::pair<const std::string&, const std::vector<Partition>&>> groups = {
        {sets.a_name, sets.a}, {sets.b_name, sets.b}, {sets.d_name, sets.d}};
    if (fmt == Format::Json) {
        json j;
        j["preset"] = preset;
        json arr = json::array();
        for (const auto& [name, parts] : groups) {
            json members = json::array();
            for (const auto& p : parts) {
                members.push_back(to_string(p));
            }
            arr.push_back({{"name", name}, {"count", parts.size()}, {"members", members}});
        }
        j["sets"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& [name, parts] : groups) {
        std::cout << name << " count=" << parts.size() << '\n';
        for (const auto& p : parts) {
            std::cout << "  " << to_string(p) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact partition statistics, bijections, q-series and identity checks"};
    app.require_subcommand(1, 1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string literal;
    bool diagram = false;
    auto* stats = app.add_subcommand("stats", "Statistics of one partition");
    stats->add_option("partition", literal, "Partition literal, e.g. 7+6+6+5+1+1")->required();
    stats->add_flag("--diagram", diagram, "Also draw the 2-modular diagram");

    std::string map_name;
    std::string map_arg;
    auto* map = app.add_subcommand("map", "Apply sylvester, glaisher or phi");
    map->add_option("name", map_name, "sylvester | glaisher | phi")
        ->required()
        ->check(CLI::IsMember({"sylvester", "glaisher", "phi"}));
    map->add_option("input", map_arg, "Partition literal, or \"<strict>|<labeled>\" for phi")->required();

    std::string series_name;
    int order = 0;
    std::optional<int> k;
    std::optional<int> m;
    auto* series = app.add_subcommand("series", "Serialize a truncated generating function");
    series->add_option("name", series_name, "Series name, e.g. GF_SOL_LEN")->required();
    series->add_option("--order", order, "Truncation order")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--k", k, "k for GF_KMEASURE")->check(CLI::PositiveNumber);
    series->add_option("--m", m, "m for GF_PARITY")->check(CLI::PositiveNumber);

    std::string checker;
    std::string profile = "desk";
    Bounds bounds;
    auto* ver = app.add_subcommand("verify", "Run a checker, or all of them");
    ver->add_option("checker", checker, "Checker name or 'all'")->required();
    ver->add_option("--nmax", bounds.nmax, "Enumeration bound")->check(CLI::NonNegativeNumber);
    ver->add_option("--order", bounds.order, "Series truncation order")->check(CLI::NonNegativeNumber);
    ver->add_option("--k", bounds.k, "Single k for EQ31")->check(CLI::PositiveNumber);
    ver->add_option("--profile", profile, "Bounds profile for 'all'")->check(CLI::IsMember({"desk"}));

    std::string table_name;
    int table_n = 6;
    auto* table = app.add_subcommand("table", "Emit a pairing table");
    table->add_option("name", table_name, "involution")->required()->check(CLI::IsMember({"involution"}));
    table->add_option("--n", table_n, "Total size")->capture_default_str()->check(CLI::NonNegativeNumber);

    std::string preset;
    auto* examples = app.add_subcommand("examples", "Emit the equinumerous example sets");
    examples->add_option("preset", preset, "16-4-2 | 15-3-1")->required()->check(CLI::IsMember({"16-4-2", "15-3-1"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format fmt = format == "json" ? Format::Json : Format::Text;
    try {
        if (*stats) {
            return run_stats(literal, diagram, fmt);
        }
        if (*map) {
            return run_map(map_name, map_arg, fmt);
        }
        if (*series) {
            return run_series(series_name, order, k, m, fmt);
        }
        if (*ver) {
            return run_verify(checker, bounds, profile, fmt);
        }
        if (*table) {
            return run_table(table_name, table_n, fmt);
        }
        if (*examples) {
            return run_examples(preset, fmt);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
