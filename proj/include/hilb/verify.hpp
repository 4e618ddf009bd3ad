#pragma once

/**
 * @file verify.hpp
 * @brief Named suites of exact identity checks over bounded degrees.
 *
 * Each suite enumerates its checks up front and runs them through the
 * parallel runner; failures aggregate in enumeration order.  The seed feeds
 * the randomized linearity spot checks only; every algebraic identity is
 * deterministic and exact.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hilb/report.hpp"

namespace hilb {

/// Suites: heisenberg, virasoro, lehn, norm, pieri, localization, nested,
/// triangularity.  "all" runs every suite and merges the reports.
const std::vector<std::string>& suite_names();

/// Runs one suite at the given degree bound.  Throws std::invalid_argument
/// for an unknown name.
Report verify_suite(const std::string& name, int maxdeg, std::uint64_t seed);

}  // namespace hilb
