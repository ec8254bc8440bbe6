#pragma once

namespace firerisk::cli {

// Full command-line front end. Returns the process exit status:
// 0 success, 1 usage error, 2 data error.
int run(int argc, const char* const* argv);

}  // namespace firerisk::cli
