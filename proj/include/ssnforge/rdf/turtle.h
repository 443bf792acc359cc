#ifndef SSNFORGE_RDF_TURTLE_H_
#define SSNFORGE_RDF_TURTLE_H_

#include <string>
#include <string_view>

#include "ssnforge/rdf/graph.h"

namespace ssnforge::rdf {

// Deterministic Turtle: prefix directives sorted by short name, then one
// block per subject in N-Triples order with ';' and ',' grouping. IRIs are
// written as prefixed names when a bound namespace is a prefix and the rest
// is a valid local name (longest namespace wins).
std::string serialize_turtle(const Graph& graph);

// Parses the Turtle subset: @prefix/@base (and SPARQL-style PREFIX/BASE),
// IRIs, prefixed names, `_:` blank nodes, `a`, ';' and ',' lists, quoted
// strings with language tag or datatype, and integer/decimal/double/boolean
// shorthand. Throws SyntaxError or UndefinedPrefixError.
Graph parse_turtle(std::string_view document);

// True if `local` can follow "prefix:" unescaped.
bool is_valid_local_name(std::string_view local);

}  // namespace ssnforge::rdf

#endif  // SSNFORGE_RDF_TURTLE_H_
