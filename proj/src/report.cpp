#include "partlab/report.hpp"

namespace partlab {

std::string VerificationReport::verdict_line() const
{
    std::string line = name;
    if (!bounds.empty()) {
        line += ' ' + bounds;
    }
    line += passed ? " PASS" : " FAIL";
    return line;
}

std::string VerificationReport::to_text() const
{
    std::string out = verdict_line() + '\n';
    if (!passed) {
        out += "  witness: " + witness + '\n';
    }
    for (const auto& [key, value] : summary) {
        out += "  " + key + ": " + value + '\n';
    }
    return out;
}

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["bounds"] = bounds;
    j["status"] = passed ? "PASS" : "FAIL";
    j["witness"] = passed ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(witness);
    auto& s = j["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : summary) {
        s[key] = value;
    }
    return j;
}

}  // namespace partlab
