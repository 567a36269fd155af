#pragma once

#include <iosfwd>

#include "luka/model.hpp"

namespace luka::cli {

/// Line-oriented announcement session over `m`. Returns the process exit code.
int run_repl(const Model& m, std::istream& in, std::ostream& out, bool prompt);

}  // namespace luka::cli
