#ifndef LIEFORGE_CLI_HPP
#define LIEFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lieforge {

inline constexpr const char* kCliVersion = "lieforge 1.0.0";

// Full command-line front end. Exit status: 0 on success, 1 when a
// requested check fails, 2 on input errors. Diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieforge

#endif
