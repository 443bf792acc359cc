#include "ssnforge/rdf/ntriples.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "ssnforge/rdf/text_scanner.h"

namespace ssnforge::rdf {
namespace {

std::string join_sorted(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

Iri iri_term(TextScanner& in) {
  std::string value = in.read_iriref();
  if (!Iri::is_valid(value)) in.fail("not an absolute IRI: <" + value + ">");
  return Iri(value);
}

Term node(TextScanner& in, bool allow_literal, const char* role) {
  char c = in.peek();
  if (c == '<') return iri_term(in);
  if (c == '_' && in.peek(1) == ':') {
    in.get();
    in.get();
    return BlankNode(in.read_blank_label());
  }
  if (c == '"' && allow_literal) {
    std::string lexical = in.read_quoted_string();
    if (in.consume('@')) return Literal::lang_string(lexical, in.read_lang_tag());
    if (in.peek() == '^' && in.peek(1) == '^') {
      in.get();
      in.get();
      Iri dt = iri_term(in);
      if (dt.str() == kRdfLangString) in.fail("rdf:langString requires a language tag");
      return Literal(lexical, dt);
    }
    return Literal(lexical);
  }
  in.fail_expected(std::string(role));
}

// Parses the statement on one line. Returns nullopt for blank/comment lines.
struct Statement {
  Triple triple;
  std::optional<Iri> graph;
};

std::optional<Statement> parse_line(std::string_view line, int line_no,
                                    bool quads) {
  TextScanner in(line, line_no);
  in.skip_inline_space();
  if (in.at_end() || in.peek() == '#' || in.peek() == '\r') {
    return std::nullopt;
  }
  Term s = node(in, false, "IRI or blank node as subject");
  in.skip_inline_space();
  if (in.peek() != '<') in.fail_expected("IRI as predicate");
  Iri p = iri_term(in);
  in.skip_inline_space();
  Term o = node(in, true, "IRI, blank node or literal as object");
  in.skip_inline_space();
  std::optional<Iri> g;
  if (quads) {
    if (in.peek() != '<') in.fail_expected("graph IRI");
    g = iri_term(in);
    in.skip_inline_space();
  }
  in.expect('.', "'.' ending the statement");
  in.skip_inline_space();
  in.consume('\r');
  if (in.peek() == '#') return Statement{Triple(s, p, o), g};
  if (!in.at_end()) in.fail_expected("end of line");
  return Statement{Triple(std::move(s), std::move(p), std::move(o)), std::move(g)};
}

template <typename Fn>
void for_each_line(std::string_view doc, Fn fn) {
  int line_no = 1;
  std::size_t start = 0;
  while (start < doc.size()) {
    std::size_t end = doc.find('\n', start);
    if (end == std::string_view::npos) end = doc.size();
    fn(doc.substr(start, end - start), line_no);
    start = end + 1;
    ++line_no;
  }
}

}  // namespace

std::string serialize_ntriples(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto& t : graph.triples()) lines.push_back(to_ntriples(t));
  return join_sorted(std::move(lines));
}

Graph parse_ntriples(std::string_view document) {
  Graph g;
  for_each_line(document, [&](std::string_view line, int n) {
    if (auto st = parse_line(line, n, false)) g.insert(std::move(st->triple));
  });
  return g;
}

std::string serialize_nquads(const Dataset& dataset) {
  std::vector<std::string> lines;
  lines.reserve(dataset.quad_count());
  for (const auto& [name, graph] : dataset.graphs()) {
    std::string g = " " + to_ntriples(name) + " .";
    for (const auto& t : graph.triples()) {
      std::string line = to_ntriples(t);
      line.replace(line.size() - 2, 2, g);
      lines.push_back(std::move(line));
    }
  }
  return join_sorted(std::move(lines));
}

Dataset parse_nquads(std::string_view document) {
  Dataset d;
  for_each_line(document, [&](std::string_view line, int n) {
    if (auto st = parse_line(line, n, true)) {
      d.at_or_create(*st->graph).insert(std::move(st->triple));
    }
  });
  return d;
}

}  // namespace ssnforge::rdf
