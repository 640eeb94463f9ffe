#pragma once

#include <stdexcept>
#include <string>

namespace g2bundle {

/// Raised when an argument violates an operation's precondition
/// (bad generator index, malformed word text, search cap exceeded, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed twist-word text. `token()` is the offending token.
class ParseError : public InputError {
public:
  ParseError(const std::string& message, std::string token)
      : InputError(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

private:
  std::string token_;
};

}  // namespace g2bundle
