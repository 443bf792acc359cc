#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "ssnforge/query/query.h"

namespace ssnforge::query {
namespace {

using Solution = std::vector<std::optional<rdf::Term>>;

// Pattern position resolved against the variable table.
struct Slot {
  std::optional<rdf::Term> constant;
  std::size_t var = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const Query& q) : q_(q) {
    for (const auto& tp : q.patterns) {
      compiled_.push_back({slot(tp.subject), slot(tp.predicate), slot(tp.object)});
    }
  }

  BindingSet run(const rdf::Graph& g) {
    std::vector<Solution> solutions{Solution(names_.size())};
    for (const auto& pattern : compiled_) {
      std::vector<Solution> next;
      for (const auto& sol : solutions) {
        for (const auto& t : g.triples()) {
          Solution ext = sol;
          if (bind(pattern[0], t.subject(), ext) &&
              bind(pattern[1], t.predicate_term(), ext) &&
              bind(pattern[2], t.object(), ext)) {
            next.push_back(std::move(ext));
          }
        }
      }
      solutions = std::move(next);
      if (solutions.empty()) break;
    }

    std::vector<std::size_t> projection;
    for (const auto& v : q_.select) projection.push_back(index_of(v));

    std::set<std::vector<rdf::Term>> rows;
    for (const auto& sol : solutions) {
      if (!passes_filters(sol)) continue;
      std::vector<rdf::Term> row;
      row.reserve(projection.size());
      for (std::size_t i : projection) row.push_back(*sol[i]);
      rows.insert(std::move(row));
    }
    return BindingSet{q_.select, {rows.begin(), rows.end()}};
  }

 private:
  Slot slot(const PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) return {std::nullopt, intern(v->name)};
    if (const auto* i = std::get_if<rdf::Iri>(&t)) return {rdf::Term(*i), 0};
    return {rdf::Term(std::get<rdf::Literal>(t)), 0};
  }

  std::size_t intern(const std::string& name) {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it != names_.end()) return static_cast<std::size_t>(it - names_.begin());
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::size_t index_of(const std::string& name) const {
    return static_cast<std::size_t>(std::find(names_.begin(), names_.end(), name) -
                                    names_.begin());
  }

  static bool bind(const Slot& s, const rdf::Term& value, Solution& sol) {
    if (s.constant) return *s.constant == value;
    auto& cell = sol[s.var];
    if (cell) return *cell == value;
    cell = value;
    return true;
  }

  bool passes_filters(const Solution& sol) const {
    for (const auto& f : q_.filters) {
      const auto& v = sol[index_of(f.variable)];
      bool equal = v && *v == f.value;
      if ((f.op == FilterOp::kEqual) != equal) return false;
    }
    return true;
  }

  const Query& q_;
  std::vector<std::string> names_;
  std::vector<std::array<Slot, 3>> compiled_;
};

}  // namespace

BindingSet evaluate(const Query& query, const rdf::Graph& graph) {
  return Evaluator(query).run(graph);
}

BindingSet evaluate(const Query& query, const rdf::Dataset& dataset) {
  return evaluate(query, dataset.union_graph());
}

}  // namespace ssnforge::query
