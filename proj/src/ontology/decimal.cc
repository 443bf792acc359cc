#include "ssnforge/ontology/decimal.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ssnforge::ontology {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool matches_grammar(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++frac_digits;
  }
  if (int_digits == 0 && frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view lexical) {
  if (!matches_grammar(lexical)) return std::nullopt;
  std::string_view body = lexical;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return Decimal(std::string(lexical), v);
}

Decimal Decimal::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return Decimal(std::string(buf, ptr), value);
}

bool Decimal::is_shortest_form() const {
  return from_double(value_).lexical_ == lexical_;
}

}  // namespace ssnforge::ontology
