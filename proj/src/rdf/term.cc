#include "ssnforge/rdf/term.h"

#include <cctype>
#include <cstdio>
#include <utility>

namespace ssnforge {

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : std::runtime_error(
          column > 0 ? "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message
                     : "line " + std::to_string(line) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

UndefinedPrefixError::UndefinedPrefixError(std::string prefix)
    : std::runtime_error("undefined prefix '" + prefix + ":'"),
      prefix_(std::move(prefix)) {}

}  // namespace ssnforge

namespace ssnforge::rdf {
namespace {

bool is_forbidden_iri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7f) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

}  // namespace

bool Iri::is_valid(std::string_view value) {
  if (value.empty()) return false;
  for (unsigned char c : value) {
    if (is_forbidden_iri_char(c)) return false;
  }
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  if (!std::isalpha(static_cast<unsigned char>(value[0]))) return false;
  for (std::size_t i = 1; i < value.size(); ++i) {
    unsigned char c = value[i];
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw InvalidTerm("invalid IRI: '" + value_ + "'");
}

Literal::Literal(std::string lexical)
    : Literal(std::move(lexical), Iri(std::string(kXsdString)), std::nullopt) {}

Literal::Literal(std::string lexical, Iri datatype)
    : Literal(std::move(lexical), std::move(datatype), std::nullopt) {}

Literal::Literal(std::string lexical, Iri datatype,
                 std::optional<std::string> lang)
    : lexical_(std::move(lexical)),
      datatype_(std::move(datatype)),
      lang_(std::move(lang)) {
  bool lang_typed = datatype_.str() == kRdfLangString;
  if (lang_typed != lang_.has_value()) {
    throw InvalidTerm(lang_typed ? "rdf:langString literal needs a language tag"
                                 : "language tag requires rdf:langString");
  }
}

bool Literal::is_valid_lang_tag(std::string_view tag) {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::size_t i = 0;
  std::size_t n = 0;
  while (i < tag.size() && std::isalpha(static_cast<unsigned char>(tag[i]))) {
    ++i;
    ++n;
  }
  if (n == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    n = 0;
    while (i < tag.size() && std::isalnum(static_cast<unsigned char>(tag[i]))) {
      ++i;
      ++n;
    }
    if (n == 0) return false;
  }
  return true;
}

Literal Literal::lang_string(std::string lexical, std::string_view lang) {
  if (!is_valid_lang_tag(lang)) {
    throw InvalidTerm("invalid language tag: '" + std::string(lang) + "'");
  }
  std::string lower(lang);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return Literal(std::move(lexical), Iri(std::string(kRdfLangString)),
                 std::move(lower));
}

bool BlankNode::is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (unsigned char c : label) {
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) {
    throw InvalidTerm("invalid blank node label: '" + label_ + "'");
  }
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string to_ntriples(const Iri& iri) { return "<" + iri.str() + ">"; }

std::string to_ntriples(const Literal& literal) {
  std::string out = "\"" + escape_string(literal.lexical()) + "\"";
  if (literal.lang()) {
    out += "@" + *literal.lang();
  } else if (!literal.is_plain_string()) {
    out += "^^" + to_ntriples(literal.datatype());
  }
  return out;
}

Term::Term(Iri iri) : value_(std::move(iri)) {
  canonical_ = to_ntriples(std::get<Iri>(value_));
}

Term::Term(Literal literal) : value_(std::move(literal)) {
  canonical_ = to_ntriples(std::get<Literal>(value_));
}

Term::Term(BlankNode blank) : value_(std::move(blank)) {
  canonical_ = "_:" + std::get<BlankNode>(value_).label();
}

}  // namespace ssnforge::rdf
