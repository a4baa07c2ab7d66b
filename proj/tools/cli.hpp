#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qedccr/state.hpp"

namespace qedccr::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kDomainError = 3, kVerificationFailure = 4 };

//! Malformed flags, config files or value syntax.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Plain decimal, or a multiple of pi: "pi", "pi/2", "0.25pi", "-3pi/4".
double parse_angle(std::string_view text);

//! RR | RL | LR | LL
//! bell:<phi+|phi-|psi+|psi->
//! family:<phi+|...>:<angle>
//! product:<alpha>,<beta>[,<xi>,<eta>]
//! general:<alpha>,<beta>,<chi>[,<xi>,<eta>,<tau>]
//! eight reals a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im (normalized on read)
TwoQubitState parse_initial_state(std::string_view text);

//! Geometric sweep "start:stop:count", both ends included.
std::vector<double> parse_log_sweep(std::string_view text);

//! Lines "key = value"; '#' starts a comment. Keys mirror long flag names.
std::vector<std::pair<std::string, std::string>> read_config_file(std::string const& path);

//! \p args excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qedccr::cli
