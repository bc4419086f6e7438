#pragma once

#include <string>
#include <vector>

namespace cia {

// Exit contract: 0 = ran and passed; 1 = ran and the math says no
// (infeasible, violations, failed simulation); 2 = usage, IO, schema, or
// budget trouble.
int cli_main(const std::vector<std::string>& args);
int cli_main(int argc, const char* const* argv);

}  // namespace cia
