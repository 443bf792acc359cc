#include "ssnforge/query/results_json.h"

namespace ssnforge::query {

nlohmann::json term_to_json(const rdf::Term& term) {
  if (term.is_iri()) return {{"type", "iri"}, {"value", term.iri().str()}};
  if (term.is_blank()) return {{"type", "bnode"}, {"value", term.blank().label()}};
  const rdf::Literal& lit = term.literal();
  nlohmann::json j{{"type", "literal"}, {"value", lit.lexical()}};
  if (lit.lang()) {
    j["lang"] = *lit.lang();
  } else if (!lit.is_plain_string()) {
    j["datatype"] = lit.datatype().str();
  }
  return j;
}

nlohmann::json to_json(const BindingSet& results) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : results.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < results.vars.size(); ++i) {
      r[results.vars[i]] = term_to_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  return {{"vars", results.vars}, {"rows", std::move(rows)}};
}

}  // namespace ssnforge::query
