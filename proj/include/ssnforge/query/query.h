#ifndef SSNFORGE_QUERY_QUERY_H_
#define SSNFORGE_QUERY_QUERY_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssnforge/rdf/graph.h"

namespace ssnforge::query {

inline constexpr std::size_t kMaxPatterns = 8;

struct Variable {
  std::string name;  // without the leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Variable, rdf::Iri, rdf::Literal>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;  // Variable or Iri
  PatternTerm object;
};

enum class FilterOp { kEqual, kNotEqual };

struct Filter {
  std::string variable;
  FilterOp op;
  rdf::Term value;
};

struct Query {
  std::map<std::string, rdf::Iri> prefixes;
  // For SELECT * this holds every pattern variable in order of first use.
  std::vector<std::string> select;
  bool select_all = false;
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
};

// Well-formed text that breaks a query invariant (unknown projected
// variable, too many patterns...).
class QueryValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grammar:
//   (PREFIX pname: <iri>)*
//   SELECT (?v+ | *) [WHERE] { tp (. tp)* [.] (FILTER(?v (=|!=) term))* }
// Keywords are case-insensitive; `a` stands for rdf:type.
// Throws SyntaxError, UndefinedPrefixError or QueryValidationError.
Query parse_query(std::string_view text);

// Rows hold one term per entry of `vars`, rows are unique and sorted by the
// N-Triples form of their terms.
struct BindingSet {
  std::vector<std::string> vars;
  std::vector<std::vector<rdf::Term>> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  // Column index of `var`; throws std::out_of_range if not projected.
  std::size_t column(std::string_view var) const;
};

// Basic graph pattern semantics: patterns are joined left to right by
// nested loops propagating bindings, filters run on complete solutions,
// projection is deduplicated.
BindingSet evaluate(const Query& query, const rdf::Graph& graph);
// Evaluates over the union of all named graphs.
BindingSet evaluate(const Query& query, const rdf::Dataset& dataset);

}  // namespace ssnforge::query

#endif  // SSNFORGE_QUERY_QUERY_H_
