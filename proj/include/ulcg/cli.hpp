#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ulcg {

// Exit codes: 0 decided success, 1 usage or parse error, 2 undecided (budget).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulcg
