#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eumin {

/// Command-line front door. Exit codes: 0 yes/success, 1 no/absent,
/// 2 parse error, 3 precondition or budget failure (the violated condition
/// is named on stderr).
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

} // namespace eumin
