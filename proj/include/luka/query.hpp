// Rendering of query results for the command line.
#pragma once

#include <optional>
#include <string>

#include "luka/core.hpp"

namespace luka {

struct QueryResult {
  std::string exact;    // always "p/q"
  std::string decimal;  // exact when the expansion terminates, else "~" + 6 places
  std::optional<bool> crisp;

  /// "p/q (decimal)"
  std::string format() const { return exact + " (" + decimal + ")"; }
};

QueryResult make_query_result(const TruthValue& v);

/// Shortest terminating decimal, or nullopt if the expansion does not terminate.
std::optional<std::string> exact_decimal(const Rational& r);

}  // namespace luka
