#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypvol::cli {

enum ExitCode { kSuccess = 0, kInvalidInput = 2, kNotApplicable = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hypvol::cli
