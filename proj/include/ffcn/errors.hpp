#ifndef FFCN_ERRORS_HPP
#define FFCN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffcn {

// Error taxonomy.  Every throwing path in the library uses one of these so
// that callers (in particular the CLI) can map failures onto exit codes:
//
//   domain_error  — a mathematical precondition was violated (bad input
//                   value for an otherwise well-formed request).
//   config_error  — a malformed request: unparsable polynomial, invalid
//                   level data, resource ceiling exceeded, bad flag combos.
//   oracle_error  — a brute-force oracle could not stabilize its answer at
//                   the configured bound/precision; the message names the
//                   knob to raise.  Oracles never return a guess.
//
// The CLI maps domain_error/config_error -> exit 2 and verification
// failures -> exit 1.

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

class config_error : public error {
 public:
  explicit config_error(const std::string& what) : error(what) {}
};

class oracle_error : public error {
 public:
  explicit oracle_error(const std::string& what) : error(what) {}
};

}  // namespace ffcn

#endif  // FFCN_ERRORS_HPP
