#pragma once

#include <stdexcept>
#include <string>

namespace gwa {

// Exit-code families used by the CLI: parse 2, validation 3, math 4.
enum class ErrorFamily { Parse, Validation, Math, Internal };

class GwaError : public std::runtime_error {
 public:
  GwaError(ErrorFamily fam, std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), family_(fam), name_(std::move(name)) {}
  ErrorFamily family() const { return family_; }
  const std::string& name() const { return name_; }

 private:
  ErrorFamily family_;
  std::string name_;
};

struct ParseError : GwaError {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : GwaError(ErrorFamily::Parse, "ParseError", "at offset " + std::to_string(off) + ": " + msg),
        offset(off) {}
};

inline GwaError validation_error(const std::string& name, const std::string& msg) {
  return GwaError(ErrorFamily::Validation, name, msg);
}

inline GwaError math_error(const std::string& name, const std::string& msg) {
  return GwaError(ErrorFamily::Math, name, msg);
}

inline GwaError internal_error(const std::string& msg) {
  return GwaError(ErrorFamily::Internal, "InternalError", msg);
}

}  // namespace gwa
