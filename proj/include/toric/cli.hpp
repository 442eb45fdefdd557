#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

// One CLI invocation; args excludes the program name.  Exit codes: 0 for
// success, 1 when the math refuses the input, 2 for malformed input or
// usage errors.  JSON envelopes go to out, usage text to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace toric
