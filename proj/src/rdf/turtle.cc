#include "ssnforge/rdf/turtle.h"

#include <map>
#include <optional>
#include <utility>

#include "ssnforge/rdf/text_scanner.h"

namespace ssnforge::rdf {
namespace {

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

bool is_alnum_or_underscore(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph::PrefixMap& prefixes)
      : prefixes_(prefixes) {}

  std::string iri(const Iri& value) const {
    const std::string* best_name = nullptr;
    std::size_t best_len = 0;
    for (const auto& [name, ns] : prefixes_) {
      const std::string& s = ns.str();
      if (s.size() <= value.str().size() &&
          value.str().compare(0, s.size(), s) == 0 &&
          (best_name == nullptr || s.size() > best_len) &&
          is_valid_local_name(std::string_view(value.str()).substr(s.size()))) {
        best_name = &name;
        best_len = s.size();
      }
    }
    if (best_name == nullptr) return to_ntriples(value);
    return *best_name + ":" + value.str().substr(best_len);
  }

  std::string term(const Term& t) const {
    if (t.is_iri()) return iri(t.iri());
    if (t.is_blank()) return t.canonical();
    const Literal& lit = t.literal();
    std::string out = "\"" + escape_string(lit.lexical()) + "\"";
    if (lit.lang()) {
      out += "@" + *lit.lang();
    } else if (!lit.is_plain_string()) {
      out += "^^" + iri(lit.datatype());
    }
    return out;
  }

  std::string predicate(const Iri& p) const {
    return p.str() == kRdfType ? "a" : iri(p);
  }

 private:
  const Graph::PrefixMap& prefixes_;
};

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view doc) : in_(doc) {}

  Graph parse() {
    for (;;) {
      in_.skip_space();
      if (in_.at_end()) break;
      if (in_.peek() == '@') {
        directive();
      } else if (in_.consume_word("PREFIX", true)) {
        prefix_body(false);
      } else if (in_.consume_word("BASE", true)) {
        base_body(false);
      } else {
        triples();
        in_.skip_space();
        in_.expect('.', "'.' ending the statement");
      }
    }
    return std::move(graph_);
  }

 private:
  void directive() {
    in_.get();  // '@'
    if (in_.consume_word("prefix")) {
      prefix_body(true);
    } else if (in_.consume_word("base")) {
      base_body(true);
    } else {
      in_.fail_expected("'@prefix' or '@base'");
    }
  }

  void prefix_body(bool needs_dot) {
    in_.skip_space();
    std::string name = in_.read_name_chars();
    if (!Graph::is_valid_prefix_name(name)) in_.fail("invalid prefix name '" + name + "'");
    in_.expect(':', "':' after prefix name");
    in_.skip_space();
    Iri ns = resolve(in_.read_iriref());
    prefixes_.insert_or_assign(name, ns);
    graph_.set_prefix(name, ns);
    if (needs_dot) {
      in_.skip_space();
      in_.expect('.', "'.' ending the @prefix directive");
    }
  }

  void base_body(bool needs_dot) {
    in_.skip_space();
    base_ = resolve(in_.read_iriref()).str();
    if (needs_dot) {
      in_.skip_space();
      in_.expect('.', "'.' ending the @base directive");
    }
  }

  Iri resolve(const std::string& ref) {
    std::string full = ref;
    if (!Iri::is_valid(ref)) {
      if (!base_) in_.fail("relative IRI <" + ref + "> without @base");
      full = *base_ + ref;
    }
    if (!Iri::is_valid(full)) in_.fail("invalid IRI <" + full + ">");
    return Iri(full);
  }

  Iri prefixed_name() {
    std::string prefix = in_.read_name_chars();
    in_.expect(':', "':' in prefixed name");
    std::string local = in_.read_name_chars();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw UndefinedPrefixError(prefix);
    std::string full = it->second.str() + local;
    if (!Iri::is_valid(full)) in_.fail("prefixed name expands to an invalid IRI");
    return Iri(full);
  }

  Iri iri_or_pname(const char* role) {
    if (in_.peek() == '<') return resolve(in_.read_iriref());
    if (TextScanner::is_name_char(in_.peek()) || in_.peek() == ':') {
      return prefixed_name();
    }
    in_.fail_expected(std::string("IRI or prefixed name as ") + role);
  }

  Term subject() {
    if (in_.peek() == '_' && in_.peek(1) == ':') return blank();
    return iri_or_pname("subject");
  }

  Term blank() {
    in_.get();
    in_.get();
    return BlankNode(in_.read_blank_label());
  }

  Iri verb() {
    if (in_.consume_word("a")) return Iri(std::string(kRdfType));
    if (in_.peek() == '_' && in_.peek(1) == ':') {
      in_.fail("blank node cannot be a predicate");
    }
    return iri_or_pname("predicate");
  }

  Term object() {
    char c = in_.peek();
    if (c == '"' || c == '\'') return literal();
    if (c == '_' && in_.peek(1) == ':') return blank();
    if (c == '+' || c == '-' || (c >= '0' && c <= '9') ||
        (c == '.' && in_.peek(1) >= '0' && in_.peek(1) <= '9')) {
      std::string type;
      std::string lexical = in_.read_number(type);
      return Literal(lexical, Iri(std::string(kXsd) + type));
    }
    if (in_.consume_word("true")) return Literal("true", Iri(std::string(kXsd) + "boolean"));
    if (in_.consume_word("false")) return Literal("false", Iri(std::string(kXsd) + "boolean"));
    if (c == '<' || TextScanner::is_name_char(c) || c == ':') {
      return iri_or_pname("object");
    }
    in_.fail_expected("IRI, prefixed name, blank node or literal as object");
  }

  Term literal() {
    std::string lexical = in_.read_quoted_string(/*allow_long=*/true);
    if (in_.consume('@')) {
      return Literal::lang_string(std::move(lexical), in_.read_lang_tag());
    }
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.get();
      in_.get();
      Iri dt = iri_or_pname("datatype");
      if (dt.str() == kRdfLangString) in_.fail("rdf:langString requires a language tag");
      return Literal(std::move(lexical), std::move(dt));
    }
    return Literal(std::move(lexical));
  }

  void triples() {
    Term s = subject();
    in_.skip_space();
    for (;;) {
      Iri p = verb();
      for (;;) {
        in_.skip_space();
        Term o = object();
        graph_.insert(s, p, std::move(o));
        in_.skip_space();
        if (!in_.consume(',')) break;
      }
      if (!in_.consume(';')) return;
      // Repeated or trailing ';' is allowed.
      for (;;) {
        in_.skip_space();
        if (!in_.consume(';')) break;
      }
      if (in_.peek() == '.' || in_.at_end()) return;
    }
  }

  TextScanner in_;
  Graph graph_;
  std::map<std::string, Iri> prefixes_;
  std::optional<std::string> base_;
};

}  // namespace

bool is_valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (!is_alnum_or_underscore(local.front())) return false;
  if (local.back() == '.') return false;
  for (char c : local) {
    if (!is_alnum_or_underscore(c) && c != '-' && c != '.') return false;
  }
  return true;
}

std::string serialize_turtle(const Graph& graph) {
  std::string out;
  for (const auto& [name, ns] : graph.prefixes()) {
    out += "@prefix " + name + ": " + to_ntriples(ns) + " .\n";
  }
  if (graph.empty()) return out;
  if (!out.empty()) out += "\n";

  TurtleWriter w(graph.prefixes());
  const auto& triples = graph.triples();
  auto it = triples.begin();
  bool first_block = true;
  while (it != triples.end()) {
    const Term& subject = it->subject();
    if (!first_block) out += "\n";
    first_block = false;
    out += w.term(subject);
    bool first_pred = true;
    while (it != triples.end() && it->subject() == subject) {
      const Iri& pred = it->predicate();
      out += first_pred ? " " : " ;\n    ";
      first_pred = false;
      out += w.predicate(pred) + " ";
      bool first_obj = true;
      while (it != triples.end() && it->subject() == subject &&
             it->predicate() == pred) {
        if (!first_obj) out += ", ";
        first_obj = false;
        out += w.term(it->object());
        ++it;
      }
    }
    out += " .\n";
  }
  return out;
}

Graph parse_turtle(std::string_view document) {
  return TurtleParser(document).parse();
}

}  // namespace ssnforge::rdf
