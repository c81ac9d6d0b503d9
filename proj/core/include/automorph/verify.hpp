#ifndef AUTOMORPH_VERIFY_HPP
#define AUTOMORPH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace automorph::verify
{

enum class Suite { all, holomorphy, automorphy, ledger, oracle, span };

// Throws std::invalid_argument for an unknown suite name.
Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

struct CheckRow {
    std::string suite;
    std::string check;
    double measured = 0.0;
    // "<", "<=", ">=", "==" relating measured to threshold.
    std::string relation;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckRow> rows;
    std::vector<std::string> notes;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::size_t failures() const;
};

struct Options {
    // Empty means every registered group.
    std::vector<std::string> groups;
    // Even weights in [k_min, k_max]; suite defaults apply when unset.
    std::optional<int> k_min;
    std::optional<int> k_max;
    // Terms used in numeric evaluation.
    std::int64_t terms = 80;
    // Exact window for symbolic checks.
    std::int64_t window = 50;
};

// Rows come back in a fixed order whatever the scheduling of the checks.
Report run(Suite suite, const Options &opts);

} // namespace automorph::verify

#endif
