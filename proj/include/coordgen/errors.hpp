#ifndef COORDGEN_ERRORS_HPP
#define COORDGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coordgen {

// Malformed input document (carries a byte offset when the JSON layer knows one).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed JSON that violates the proposition/lexicon schema.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A concept or inflection the lexicon cannot supply.
struct LexiconError : std::runtime_error {
  explicit LexiconError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an operation's precondition.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace coordgen

#endif  // COORDGEN_ERRORS_HPP
