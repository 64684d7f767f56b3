#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace forms {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 usage or input
// error, 2 negative mathematical outcome (inconclusive refutation, failed
// identity, undecided psd check).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forms
