#include "ssnforge/rdf/graph.h"

#include <cctype>
#include <utility>

namespace ssnforge::rdf {

Triple::Triple(Term subject, Iri predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
  if (subject_.is_literal()) {
    throw InvalidTerm("triple subject cannot be a literal: " +
                      subject_.canonical());
  }
}

std::string to_ntriples(const Triple& triple) {
  return triple.subject().canonical() + " " +
         triple.predicate_term().canonical() + " " +
         triple.object().canonical() + " .";
}

bool Graph::insert(Triple triple) {
  return triples_.insert(std::move(triple)).second;
}

bool Graph::contains(const Triple& triple) const {
  return triples_.count(triple) != 0;
}

bool Graph::erase(const Triple& triple) { return triples_.erase(triple) != 0; }

bool Graph::is_valid_prefix_name(std::string_view name) {
  if (name.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (unsigned char c : name.substr(1)) {
    if (!std::isalnum(c) && c != '_' && c != '-') return false;
  }
  return true;
}

void Graph::set_prefix(const std::string& name, Iri ns) {
  if (!is_valid_prefix_name(name)) {
    throw InvalidTerm("invalid prefix name: '" + name + "'");
  }
  prefixes_.insert_or_assign(name, std::move(ns));
}

void Graph::merge(const Graph& other) {
  for (const auto& t : other.triples_) triples_.insert(t);
  for (const auto& [name, ns] : other.prefixes_) prefixes_.emplace(name, ns);
}

void Dataset::put(Iri name, Graph graph) {
  graphs_.insert_or_assign(std::move(name), std::move(graph));
}

bool Dataset::erase(const Iri& name) { return graphs_.erase(name) != 0; }

const Graph* Dataset::find(const Iri& name) const {
  auto it = graphs_.find(name);
  return it == graphs_.end() ? nullptr : &it->second;
}

Graph& Dataset::at_or_create(const Iri& name) { return graphs_[name]; }

std::size_t Dataset::quad_count() const {
  std::size_t n = 0;
  for (const auto& [name, g] : graphs_) n += g.size();
  return n;
}

Graph Dataset::union_graph() const {
  Graph out;
  for (const auto& [name, g] : graphs_) out.merge(g);
  return out;
}

}  // namespace ssnforge::rdf
