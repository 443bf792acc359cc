#ifndef SSNFORGE_RDF_NTRIPLES_H_
#define SSNFORGE_RDF_NTRIPLES_H_

#include <string>
#include <string_view>

#include "ssnforge/rdf/graph.h"

namespace ssnforge::rdf {

// Canonical N-Triples: one LF-terminated line per triple, lines sorted
// bytewise. Prefixes are not represented.
std::string serialize_ntriples(const Graph& graph);
// Accepts lines in any order, blank lines and '#' comment lines.
// Throws SyntaxError carrying the line number.
Graph parse_ntriples(std::string_view document);

// Canonical N-Quads: as N-Triples with the graph IRI as fourth term.
std::string serialize_nquads(const Dataset& dataset);
// Every statement must name a graph IRI (no default graph).
Dataset parse_nquads(std::string_view document);

}  // namespace ssnforge::rdf

#endif  // SSNFORGE_RDF_NTRIPLES_H_
