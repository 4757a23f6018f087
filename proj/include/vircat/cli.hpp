#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vircat {

/// Runs one CLI command.  argv excludes the program name.  Returns the
/// process exit code: 0 success, 1 usage/domain error, 2 mathematical
/// verification failure.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace vircat
