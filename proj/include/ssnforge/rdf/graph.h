#ifndef SSNFORGE_RDF_GRAPH_H_
#define SSNFORGE_RDF_GRAPH_H_

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "ssnforge/rdf/term.h"

namespace ssnforge::rdf {

class Triple {
 public:
  // Throws InvalidTerm if the subject is a literal.
  Triple(Term subject, Iri predicate, Term object);

  const Term& subject() const { return subject_; }
  const Iri& predicate() const { return predicate_.iri(); }
  const Term& predicate_term() const { return predicate_; }
  const Term& object() const { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

// "S P O ." without the trailing newline.
std::string to_ntriples(const Triple& triple);

class Graph {
 public:
  using TripleSet = std::set<Triple>;
  using PrefixMap = std::map<std::string, Iri>;

  // Returns false when the triple was already present.
  bool insert(Triple triple);
  bool insert(Term subject, Iri predicate, Term object) {
    return insert(Triple(std::move(subject), std::move(predicate),
                         std::move(object)));
  }
  bool contains(const Triple& triple) const;
  bool erase(const Triple& triple);

  // Short names are empty or [A-Za-z][A-Za-z0-9_-]*. Re-binding a name
  // replaces its namespace.
  void set_prefix(const std::string& name, Iri ns);
  static bool is_valid_prefix_name(std::string_view name);

  const TripleSet& triples() const { return triples_; }
  const PrefixMap& prefixes() const { return prefixes_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  // Adds every triple of `other`; prefixes of `other` are added when the
  // short name is not already bound.
  void merge(const Graph& other);

  // Exact equality of triples (label-for-label) and prefixes.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  TripleSet triples_;
  PrefixMap prefixes_;
};

// True iff the triple sets are equal up to a bijection between blank nodes.
// Prefix maps are ignored. Ground comparison is tried first; the bijection
// search is only needed for graphs whose blank labels were re-minted.
bool graph_equal(const Graph& a, const Graph& b);

// Named graphs only; there is no default graph.
class Dataset {
 public:
  using GraphMap = std::map<Iri, Graph>;

  // Inserts or replaces the graph stored under `name`.
  void put(Iri name, Graph graph);
  bool erase(const Iri& name);
  const Graph* find(const Iri& name) const;
  Graph& at_or_create(const Iri& name);

  const GraphMap& graphs() const { return graphs_; }
  std::size_t size() const { return graphs_.size(); }
  bool empty() const { return graphs_.empty(); }
  std::size_t quad_count() const;

  // Union of all named graphs.
  Graph union_graph() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  GraphMap graphs_;
};

}  // namespace ssnforge::rdf

#endif  // SSNFORGE_RDF_GRAPH_H_
