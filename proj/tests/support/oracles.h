#ifndef SSNFORGE_TESTS_SUPPORT_ORACLES_H_
#define SSNFORGE_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "ssnforge/ontology/model.h"
#include "ssnforge/query/query.h"
#include "ssnforge/rdf/graph.h"

namespace ssnforge::testing {

// Number of triples the mapping rules emit, counted rule by rule from the
// definition alone.
std::size_t expected_type_triples(const ontology::SensorType& type);
std::size_t expected_instance_triples(const ontology::SensorInstance& instance);

// Enumerates every assignment of graph triples to patterns (|G|^k), keeps the
// consistent ones, applies filters and projects. Rows are N-Triples strings,
// deduplicated and sorted.
std::vector<std::vector<std::string>> brute_force_select(const query::Query& query,
                                                         const rdf::Graph& graph);

std::vector<std::vector<std::string>> rows_as_strings(const query::BindingSet& set);

}  // namespace ssnforge::testing

#endif  // SSNFORGE_TESTS_SUPPORT_ORACLES_H_
