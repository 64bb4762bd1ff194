#ifndef PARTLAB_REPORT_HPP
#define PARTLAB_REPORT_HPP

#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"

namespace partlab {

/// Outcome of one exact check. A failed report always carries the first
/// witness that broke it, so the failure can be reproduced by hand.
struct VerificationReport {
    std::string name;
    std::string bounds;
    bool passed = true;
    std::string witness;
    std::vector<std::pair<std::string, std::string>> summary;

    VerificationReport() = default;
    VerificationReport(std::string name_, std::string bounds_)
        : name(std::move(name_)), bounds(std::move(bounds_))
    {
    }

    /// Records the first failure; later failures are ignored.
    void fail(std::string why)
    {
        if (passed) {
            passed = false;
            witness = std::move(why);
        }
    }

    template <typename T>
    void note(std::string key, const T& value)
    {
        if constexpr (std::is_convertible_v<T, std::string>) {
            summary.emplace_back(std::move(key), std::string(value));
        } else if constexpr (std::is_arithmetic_v<T>) {
            summary.emplace_back(std::move(key), std::to_string(value));
        } else {
            std::ostringstream os;
            os << value;
            summary.emplace_back(std::move(key), os.str());
        }
    }

    /// "THM12 n<=26 PASS"
    [[nodiscard]] std::string verdict_line() const;
    /// Verdict line plus witness and summary, one item per line.
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

}  // namespace partlab

#endif  // PARTLAB_REPORT_HPP
