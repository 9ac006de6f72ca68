#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mayerkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;

// Environment variable naming the directory for relative --output paths.
inline constexpr const char* kOutputDirEnv = "MAYERKIT_OUTPUT_DIR";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mayerkit::cli
