#pragma once

// Command-line front end. Exit codes: 0 success, 1 parse or domain error,
// 2 budget exceeded, 3 lemma check failed.

#include <ostream>
#include <string>
#include <vector>

namespace wormlab::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kBudget = 2, kLemmaFailed = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wormlab::cli
