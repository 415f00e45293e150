#pragma once

#include <stdexcept>
#include <string>

namespace tsq
{

enum class ErrorKind
{
  Structural,
  InvalidArgument,
  Parse,
  NotNormal,
  LimitExceeded,
  BoundExceeded,
  IncompleteTable,
  ActionInconsistent,
  ExtensionFailed,
  NotClosed,
  SubgroupViolation
};

char const *to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what),
    _kind(kind)
  {}

  ErrorKind kind() const { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace tsq
