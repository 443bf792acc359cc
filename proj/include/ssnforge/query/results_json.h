#ifndef SSNFORGE_QUERY_RESULTS_JSON_H_
#define SSNFORGE_QUERY_RESULTS_JSON_H_

#include "json.hpp"
#include "ssnforge/query/query.h"

namespace ssnforge::query {

// {"type": "iri"|"literal"|"bnode", "value": ..., "datatype"?, "lang"?}
// Plain xsd:string literals carry no datatype member.
nlohmann::json term_to_json(const rdf::Term& term);

// {"vars": [...], "rows": [{var: term}, ...]}
nlohmann::json to_json(const BindingSet& results);

}  // namespace ssnforge::query

#endif  // SSNFORGE_QUERY_RESULTS_JSON_H_
