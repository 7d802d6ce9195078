#ifndef UPT_ERRORS_HPP
#define UPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace upt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (at " + std::to_string(line_) + ":" + std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

struct LevelKindViolation : Error { using Error::Error; };
struct NotALevel : Error { using Error::Error; };
struct UnboundVariable : Error { using Error::Error; };
struct UnknownConstant : Error { using Error::Error; };
struct FuelExhausted : Error { using Error::Error; };
struct TypeError : Error { using Error::Error; };
struct InferenceFailure : Error { using Error::Error; };
struct NotUnifiableStructure : Error { using Error::Error; };
struct IllFormedSpec : Error { using Error::Error; };
struct UnsupportedConstruct : Error { using Error::Error; };

} // namespace upt

#endif
