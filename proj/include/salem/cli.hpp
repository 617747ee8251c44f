#pragma once

namespace salem {

/// Full command-line front end. Returns the process exit code:
/// 0 success (including --help), 2 usage error, 1 computation error.
int run_cli(int argc, const char* const* argv);

} // namespace salem
