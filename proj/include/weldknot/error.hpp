#ifndef WELDKNOT_ERROR_HPP
#define WELDKNOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weldknot {

enum class ErrorCode {
  MalformedToken,
  LabelCountMismatch,
  SignMismatch,
  UnknownChord,
  InapplicableMove,
  ForbiddenMove,
  NotRemovable,
  NotClassical,
  InvalidPD,
  EmptyDiagram,
  LimitsExceeded,
  OracleInconsistency,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace weldknot

#endif
