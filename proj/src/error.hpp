#ifndef FUZZYMLN_ERROR_HPP
#define FUZZYMLN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fuzzymln {

// Two failure classes, mirrored by the process exit codes and the C API
// status values: bad input (files, syntax, unknown symbols) and failures
// that arise during computation (caps exceeded, divergence).
enum class ErrorKind { input, compute };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(std::string msg) {
  return Error(ErrorKind::input, std::move(msg));
}

inline Error compute_error(std::string msg) {
  return Error(ErrorKind::compute, std::move(msg));
}

}  // namespace fuzzymln

#endif
