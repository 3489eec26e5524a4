#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anticlique::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, usage = 2, refused = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace anticlique::cli
