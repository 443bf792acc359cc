#ifndef SSNFORGE_ERRORS_H_
#define SSNFORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ssnforge {

// Raised by every text parser in the project (Turtle, N-Triples, N-Quads,
// queries, metadata files). Line and column are 1-based; column is 0 when
// only the line is known.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

class UndefinedPrefixError : public std::runtime_error {
 public:
  explicit UndefinedPrefixError(std::string prefix);

  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

// A value that violates an RDF term invariant (bad IRI, bad blank label...).
class InvalidTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ssnforge

#endif  // SSNFORGE_ERRORS_H_
