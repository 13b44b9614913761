#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace six {

/// Runs one `six` subcommand.  `args` excludes the program name.
/// Returns 0 on logical success, 1 on logical failure (invalid query,
/// countermodel, failed audit, rejected proof) and 2 on usage, parse or
/// budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace six
