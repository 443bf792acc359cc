#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ssnforge/rdf/graph.h"

namespace ssnforge::rdf {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Blank nodes of one graph with the triples they occur in and a colour
// obtained by iterated neighbourhood refinement.
struct BlankIndex {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> slot;
  std::vector<std::vector<const Triple*>> occurrences;
  std::vector<std::size_t> colour;

  explicit BlankIndex(const Graph& g) {
    for (const auto& t : g.triples()) {
      for (const Term* term : {&t.subject(), &t.object()}) {
        if (!term->is_blank()) continue;
        auto [it, fresh] = slot.emplace(term->blank().label(), labels.size());
        if (fresh) {
          labels.push_back(term->blank().label());
          occurrences.emplace_back();
        }
        auto& occ = occurrences[it->second];
        if (occ.empty() || occ.back() != &t) occ.push_back(&t);
      }
    }
    colour.assign(labels.size(), 0);
  }

  std::size_t term_colour(const Term& term, const std::vector<std::size_t>& c) const {
    if (term.is_blank()) return mix(1, c[slot.at(term.blank().label())]);
    return std::hash<std::string>{}(term.canonical());
  }

  void refine_once() {
    std::vector<std::size_t> next(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::vector<std::size_t> parts;
      for (const Triple* t : occurrences[i]) {
        bool subj = t->subject().is_blank() && t->subject().blank().label() == labels[i];
        bool obj = t->object().is_blank() && t->object().blank().label() == labels[i];
        std::size_t h = std::hash<std::string>{}(t->predicate().str());
        h = mix(h, subj ? 11 : term_colour(t->subject(), colour));
        h = mix(h, obj ? 13 : term_colour(t->object(), colour));
        parts.push_back(h);
      }
      std::sort(parts.begin(), parts.end());
      std::size_t h = colour[i];
      for (auto p : parts) h = mix(h, p);
      next[i] = h;
    }
    colour = std::move(next);
  }
};

class Matcher {
 public:
  Matcher(const Graph& b, const BlankIndex& ia, const BlankIndex& ib)
      : b_(b), ia_(ia), ib_(ib),
        mapping_(ia.labels.size(), kUnmapped),
        used_(ib.labels.size(), false) {
    order_.resize(ia.labels.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    // Most constrained nodes first.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return ia.occurrences[x].size() > ia.occurrences[y].size();
    });
  }

  bool solve(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    std::size_t node = order_[depth];
    for (std::size_t cand = 0; cand < ib_.labels.size(); ++cand) {
      if (used_[cand] || ib_.colour[cand] != ia_.colour[node]) continue;
      if (ib_.occurrences[cand].size() != ia_.occurrences[node].size()) continue;
      mapping_[node] = cand;
      used_[cand] = true;
      if (consistent(node) && solve(depth + 1)) return true;
      used_[cand] = false;
      mapping_[node] = kUnmapped;
    }
    return false;
  }

 private:
  static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

  // Every triple touching `node` whose blank nodes are all mapped must have
  // an image in b.
  bool consistent(std::size_t node) const {
    for (const Triple* t : ia_.occurrences[node]) {
      auto image = [&](const Term& term, bool& ready) -> Term {
        if (!term.is_blank()) return term;
        std::size_t m = mapping_[ia_.slot.at(term.blank().label())];
        if (m == kUnmapped) {
          ready = false;
          return term;
        }
        return BlankNode(ib_.labels[m]);
      };
      bool ready = true;
      Term s = image(t->subject(), ready);
      Term o = image(t->object(), ready);
      if (!ready) continue;
      if (!b_.contains(Triple(s, t->predicate(), o))) return false;
    }
    return true;
  }

  const Graph& b_;
  const BlankIndex& ia_;
  const BlankIndex& ib_;
  std::vector<std::size_t> mapping_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

bool graph_equal(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  if (a.triples() == b.triples()) return true;

  BlankIndex ia(a);
  BlankIndex ib(b);
  if (ia.labels.size() != ib.labels.size() || ia.labels.empty()) return false;

  // Ground triples must agree exactly.
  for (const auto& t : a.triples()) {
    if (!t.subject().is_blank() && !t.object().is_blank() && !b.contains(t)) {
      return false;
    }
  }

  std::size_t last_distinct = 0;
  for (std::size_t round = 0; round <= ia.labels.size(); ++round) {
    ia.refine_once();
    ib.refine_once();
    auto ca = ia.colour;
    auto cb = ib.colour;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    // Stop once the number of distinct colours no longer grows.
    std::size_t distinct = std::unique(ca.begin(), ca.end()) - ca.begin();
    if (distinct == ia.labels.size()) break;
    if (distinct == last_distinct) break;
    last_distinct = distinct;
  }

  Matcher matcher(b, ia, ib);
  return matcher.solve();
}

}  // namespace ssnforge::rdf
