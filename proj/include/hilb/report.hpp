#pragma once

/**
 * @file report.hpp
 * @brief Verification reports and a deterministic parallel check runner.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hilb {

struct CheckFailure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    int maxdeg = 0;
    long checks = 0;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }

    /// Appends another report's counts and failures.
    void merge(const Report& o) {
        checks += o.checks;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

/// Runs fn(0..count-1) across hardware threads; results land in index order,
/// so aggregation is deterministic regardless of scheduling.
std::vector<std::optional<CheckFailure>> run_checks(
    std::size_t count, const std::function<std::optional<CheckFailure>(std::size_t)>& fn);

}  // namespace hilb
