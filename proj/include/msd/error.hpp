#pragma once

#include <stdexcept>
#include <string>

namespace msd {

enum class ErrorKind {
  invalid_digraph,
  arc_not_present,
  not_strongly_connected,
  not_msd,
  invalid_cycle,
  invalid_config,
  realization_failed,
  internal_inconsistency,
  precondition,
  parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace msd
