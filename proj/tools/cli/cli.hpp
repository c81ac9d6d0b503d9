#ifndef AUTOMORPH_TOOLS_CLI_HPP
#define AUTOMORPH_TOOLS_CLI_HPP

#include <complex>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace automorph::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses "a+bi", "a-bi" or "bi" with b > 0; throws std::invalid_argument.
std::complex<double> parse_tau(std::string_view text);

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace automorph::cli

#endif
