#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idcert::cli {

inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs the command line `args` (without the program name). Input "-" reads `in`.
/// Returns 0 when every certificate is Certified (or the bound holds), 2 when some
/// result is Inconclusive, 1 on usage, parse or resource errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace idcert::cli
