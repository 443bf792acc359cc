#include "generators.h"

#include <algorithm>
#include <set>
#include <vector>

namespace ssnforge::testing {
namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::size_t below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

const std::vector<std::string> kNamespaces = {
    "http://a.example/", "http://b.example/ns#", "urn:x:", "http://c.example/path/",
    "https://d.example/v1/"};

std::string random_local(Rng& rng) {
  static const std::string chars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-.~()%!$&*+,;=";
  std::string out;
  std::size_t len = below(rng, 10);
  for (std::size_t i = 0; i < len; ++i) out += chars[below(rng, coin(rng, 0.8) ? 62 : chars.size())];
  return out;
}

std::string random_decimal_lexical(Rng& rng, bool positive) {
  static const std::vector<std::string> forms = {"0.5", "1", "12", "0.001", "1e-3", "2.50",
                                                 "100.0", "3.14159", "7E2", "+4.5", ".25"};
  std::string s = pick(rng, forms);
  if (!positive && coin(rng, 0.3)) s = "-" + (s[0] == '+' ? s.substr(1) : s);
  return s;
}

std::string random_slug(Rng& rng) {
  static const std::string chars = "abcdefghijklmnopqrstuvwxyz0123456789-";
  std::string out(1, "abcdefghij"[below(rng, 10)]);
  std::size_t len = below(rng, 12);
  for (std::size_t i = 0; i < len; ++i) out += chars[below(rng, chars.size())];
  return out;
}

}  // namespace

std::string random_text(Rng& rng, std::size_t max_len) {
  static const std::vector<std::string> atoms = {
      "a", "b", "Z", "0", " ", "\"", "'", "\\", "\n", "\t", "\r", "\x01", "\x7f", "=", ":",
      "#", "@", "^^", ".", ";", ",", "<", ">", "\xc3\xa9", "\xe6\xb8\xa9",
      "\xf0\x9f\x8c\xa1", "\\u0041", "word"};
  std::string out;
  std::size_t len = below(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out += pick(rng, atoms);
  return out;
}

rdf::Iri random_iri(Rng& rng) { return rdf::Iri(pick(rng, kNamespaces) + random_local(rng)); }

rdf::Graph random_graph(Rng& rng, std::size_t max_triples) {
  rdf::Graph g;
  const std::vector<std::string> names = {"", "a", "ex", "x-y", "ns2"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (coin(rng, 0.6)) g.set_prefix(names[i], rdf::Iri(kNamespaces[i]));
  }
  std::vector<rdf::Iri> predicates;
  for (int i = 0; i < 4; ++i) predicates.push_back(random_iri(rng));
  predicates.emplace_back(std::string(rdf::kRdfType));
  std::vector<rdf::Iri> nodes;
  for (int i = 0; i < 6; ++i) nodes.push_back(random_iri(rng));

  auto node = [&]() -> rdf::Term {
    if (coin(rng, 0.25)) return rdf::BlankNode("b" + std::to_string(below(rng, 5)));
    return pick(rng, nodes);
  };
  auto object = [&]() -> rdf::Term {
    switch (below(rng, 6)) {
      case 0: return rdf::Literal(random_text(rng, 6));
      case 1: return rdf::Literal::lang_string(random_text(rng, 4), coin(rng) ? "en" : "de-CH");
      case 2: return rdf::Literal(coin(rng) ? "1" : "01",
                                  rdf::Iri("http://www.w3.org/2001/XMLSchema#integer"));
      case 3: return rdf::Literal(random_text(rng, 3), random_iri(rng));
      default: return node();
    }
  };
  std::size_t n = below(rng, max_triples + 1);
  for (std::size_t i = 0; i < n; ++i) g.insert(node(), pick(rng, predicates), object());
  return g;
}

ontology::SensorType random_sensor_type(Rng& rng, const std::string& id) {
  ontology::SensorType t;
  t.id = id;
  t.name = random_text(rng, 8);
  std::size_t n = 1 + below(rng, 4);
  std::vector<int> ks = {1, 2, 3, 4, 5, 6, 7, 8};
  std::shuffle(ks.begin(), ks.end(), rng);
  static const std::vector<std::string> prop_ns = {"http://openiot.eu/ontology/ns/",
                                                   "http://example.com/props#",
                                                   "urn:props:"};
  static const std::vector<std::string> units = {
      "http://qudt.org/vocab/unit#Kelvin", "http://qudt.org/vocab/unit#DegreeCelsius",
      "http://qudt.org/vocab/unit#Percent", "http://qudt.org/vocab/unit#Hertz"};
  for (std::size_t i = 0; i < n; ++i) {
    rdf::Iri iri(pick(rng, prop_ns) + "Property" + std::to_string(ks[i]));
    std::optional<std::string> label;
    if (coin(rng)) label = random_text(rng, 5);
    t.observes.push_back({iri, label});
    if (coin(rng, 0.7)) {
      ontology::MeasurementCapability cap{iri, std::nullopt, std::nullopt};
      if (coin(rng, 0.7)) {
        std::string lex = random_decimal_lexical(rng, true);
        cap.accuracy = ontology::Measurement{*ontology::Decimal::parse(lex), rdf::Iri(pick(rng, units))};
      }
      if (coin(rng, 0.7)) {
        std::string lex = random_decimal_lexical(rng, true);
        cap.frequency = ontology::Measurement{*ontology::Decimal::parse(lex), rdf::Iri(pick(rng, units))};
      }
      t.capabilities.push_back(std::move(cap));
    }
  }
  std::shuffle(t.capabilities.begin(), t.capabilities.end(), rng);
  return t;
}

ontology::SensorInstance random_sensor_instance(Rng& rng, const ontology::SensorType& type,
                                                const std::string& id) {
  static const std::vector<std::string> lats = {"0", "-90", "90", "45.5", "-12.25", "1e1", "89.999999"};
  static const std::vector<std::string> lons = {"0", "-180", "180", "6.5668", "-122.4194", "1.5E2"};
  std::vector<ontology::PropertyBinding> bindings;
  std::size_t f = 0;
  for (const auto& p : type.observes) {
    bindings.push_back({p.iri, random_iri(rng), "f" + std::to_string(f++) + (coin(rng) ? "_x" : "")});
  }
  std::shuffle(bindings.begin(), bindings.end(), rng);
  std::optional<std::string> owner;
  if (coin(rng)) owner = random_text(rng, 6);
  std::optional<std::string> description;
  if (coin(rng)) description = random_text(rng, 10);
  return ontology::SensorInstance{
      id,
      random_text(rng, 6),
      type.id,
      owner,
      description,
      *ontology::Decimal::parse(pick(rng, lats)),
      *ontology::Decimal::parse(pick(rng, lons)),
      coin(rng) ? random_slug(rng) : random_iri(rng).str(),
      std::move(bindings),
  };
}

metadata::MetadataConfig random_metadata_config(Rng& rng) {
  static const std::string key_chars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-";
  metadata::MetadataConfig c;
  std::set<std::string> used;
  std::size_t n = below(rng, 12);
  for (std::size_t i = 0; i < n; ++i) {
    std::string key;
    std::size_t len = 1 + below(rng, 10);
    for (std::size_t k = 0; k < len; ++k) key += key_chars[below(rng, key_chars.size())];
    if (!used.insert(key).second) continue;
    c.add(key, random_text(rng, 12));
  }
  return c;
}

query::Query random_query(Rng& rng, const rdf::Graph& graph, std::size_t max_patterns) {
  std::vector<rdf::Term> terms;
  std::vector<rdf::Iri> preds;
  for (const auto& t : graph.triples()) {
    terms.push_back(t.subject());
    terms.push_back(t.object());
    preds.push_back(t.predicate());
  }
  if (preds.empty()) preds.push_back(rdf::Iri("http://a.example/p"));
  if (terms.empty()) terms.emplace_back(rdf::Iri("http://a.example/s"));
  const std::vector<std::string> vars = {"a", "b", "c", "d"};

  auto constant = [&](bool allow_literal) -> query::PatternTerm {
    for (;;) {
      const rdf::Term& t = pick(rng, terms);
      if (t.is_iri()) return t.iri();
      if (t.is_literal() && allow_literal) return t.literal();
      if (t.is_blank()) return rdf::Iri("http://a.example/unmatched");
    }
  };
  query::Query q;
  std::size_t n = 1 + below(rng, max_patterns);
  for (std::size_t i = 0; i < n; ++i) {
    query::TriplePattern tp{
        coin(rng, 0.7) ? query::PatternTerm(query::Variable{pick(rng, vars)}) : constant(false),
        coin(rng, 0.5) ? query::PatternTerm(query::Variable{pick(rng, vars)})
                       : query::PatternTerm(pick(rng, preds)),
        coin(rng, 0.6) ? query::PatternTerm(query::Variable{pick(rng, vars)}) : constant(true)};
    q.patterns.push_back(std::move(tp));
  }
  std::vector<std::string> used;
  for (const auto& tp : q.patterns) {
    for (const auto* t : {&tp.subject, &tp.predicate, &tp.object}) {
      if (const auto* v = std::get_if<query::Variable>(t)) {
        if (std::find(used.begin(), used.end(), v->name) == used.end()) used.push_back(v->name);
      }
    }
  }
  if (used.empty()) {
    q.patterns.front().subject = query::Variable{"a"};
    used.push_back("a");
  }
  if (coin(rng, 0.3)) {
    q.select_all = true;
    q.select = used;
  } else {
    for (const auto& v : used) {
      if (coin(rng, 0.6)) q.select.push_back(v);
    }
    if (q.select.empty()) q.select.push_back(used.front());
  }
  if (coin(rng, 0.3)) {
    q.filters.push_back({pick(rng, used),
                         coin(rng) ? query::FilterOp::kEqual : query::FilterOp::kNotEqual,
                         pick(rng, terms)});
  }
  return q;
}

}  // namespace ssnforge::testing
