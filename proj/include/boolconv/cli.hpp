#ifndef BOOLCONV_CLI_HPP
#define BOOLCONV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace boolconv {

// Batch front-end. Exit codes: 0 success, 1 internal invariant violation,
// 2 configuration errors. Output is deterministic for a fixed command line
// and seed. BOOLCONV_DEPTH_CAP in the environment lowers the depth cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boolconv

#endif
