#ifndef SSNFORGE_RDF_TERM_H_
#define SSNFORGE_RDF_TERM_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ssnforge/errors.h"

namespace ssnforge::rdf {

inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Absolute IRI: scheme ":" rest, no whitespace, no characters that would
// need escaping inside <...>.
class Iri {
 public:
  // Throws InvalidTerm.
  explicit Iri(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

class Literal {
 public:
  // Plain string literal (xsd:string).
  explicit Literal(std::string lexical);
  // Typed literal. Passing rdf:langString without a tag throws InvalidTerm.
  Literal(std::string lexical, Iri datatype);

  // Language-tagged string; the tag is normalized to lower case.
  static Literal lang_string(std::string lexical, std::string_view lang);
  static bool is_valid_lang_tag(std::string_view tag);

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }
  const std::optional<std::string>& lang() const { return lang_; }
  bool is_plain_string() const { return datatype_.str() == kXsdString; }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> lang);

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> lang_;
};

class BlankNode {
 public:
  // Label must match [A-Za-z0-9_]+. Throws InvalidTerm.
  explicit BlankNode(std::string label);

  static bool is_valid_label(std::string_view label);

  const std::string& label() const { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

// Any RDF node. Equality and ordering follow the N-Triples serialization of
// the node, which is also the order every serializer sorts by.
class Term {
 public:
  Term(Iri iri);            // NOLINT(google-explicit-constructor)
  Term(Literal literal);    // NOLINT(google-explicit-constructor)
  Term(BlankNode blank);    // NOLINT(google-explicit-constructor)

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }
  bool is_blank() const { return std::holds_alternative<BlankNode>(value_); }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }

  // N-Triples form of this term.
  const std::string& canonical() const { return canonical_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.canonical_ == b.canonical_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  std::variant<Iri, Literal, BlankNode> value_;
  std::string canonical_;
};

// Escapes a literal's lexical form for a double-quoted Turtle/N-Triples
// string (without the surrounding quotes).
std::string escape_string(std::string_view text);

std::string to_ntriples(const Iri& iri);
std::string to_ntriples(const Literal& literal);

}  // namespace ssnforge::rdf

#endif  // SSNFORGE_RDF_TERM_H_
