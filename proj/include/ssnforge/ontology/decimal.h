#ifndef SSNFORGE_ONTOLOGY_DECIMAL_H_
#define SSNFORGE_ONTOLOGY_DECIMAL_H_

#include <optional>
#include <string>
#include <string_view>

namespace ssnforge::ontology {

// A finite number that remembers the exact lexical form it was given, so
// generated literals reproduce the user's spelling byte for byte.
class Decimal {
 public:
  // Accepts [+-]? (digits ('.' digits*)? | '.' digits) ([eE] [+-]? digits)?
  static std::optional<Decimal> parse(std::string_view lexical);
  // Shortest round-trip decimal form of `value` (must be finite).
  static Decimal from_double(double value);

  const std::string& lexical() const { return lexical_; }
  double value() const { return value_; }
  // True when lexical() is what from_double(value()) would produce.
  bool is_shortest_form() const;

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.lexical_ == b.lexical_;
  }

 private:
  Decimal(std::string lexical, double value)
      : lexical_(std::move(lexical)), value_(value) {}

  std::string lexical_;
  double value_;
};

}  // namespace ssnforge::ontology

#endif  // SSNFORGE_ONTOLOGY_DECIMAL_H_
