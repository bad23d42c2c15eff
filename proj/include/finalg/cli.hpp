#pragma once

// Command-line entry point. Exit status encodes tool health (parse or
// semantic errors), never the mathematical verdict; verdicts live in the
// report.

#include <iosfwd>
#include <string>
#include <vector>

namespace finalg::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace finalg::cli
