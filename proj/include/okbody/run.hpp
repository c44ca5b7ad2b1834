#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace okbody {

// Executes one CLI invocation. Returns the process exit code: 0 on success,
// 2 on parse/validation errors, 3 on computational failures (with retry
// guidance on stderr). Artifacts are written under --outdir.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace okbody
