/// @file cli.h
/// Entry point of the mpmcs command-line tool, callable in-process.
#ifndef MPMCS_TOOLS_CLI_H_
#define MPMCS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mpmcs::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kNotProven = 2;
inline constexpr int kOracleMismatch = 3;

/// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mpmcs::cli

#endif  // MPMCS_TOOLS_CLI_H_
