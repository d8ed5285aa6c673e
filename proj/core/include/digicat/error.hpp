#pragma once

#include <stdexcept>
#include <string>

namespace digicat {

enum class ErrorKind {
  invalid_argument,  // semantically invalid input (bad spec, bad dimension, ...)
  parse,             // unreadable input (spec string, scenario, JSON)
  verification,      // a construction failed its own consistency checks
  cap_exceeded,      // an oracle cap or search budget refused the problem
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorKind::invalid_argument, what);
}
[[noreturn]] inline void throw_parse(const std::string& what) {
  throw Error(ErrorKind::parse, what);
}
[[noreturn]] inline void throw_verification(const std::string& what) {
  throw Error(ErrorKind::verification, what);
}
[[noreturn]] inline void throw_cap(const std::string& what) {
  throw Error(ErrorKind::cap_exceeded, what);
}

}  // namespace digicat
