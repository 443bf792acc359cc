#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "ssnforge/query/query.h"
#include "ssnforge/rdf/text_scanner.h"

namespace ssnforge::query {
namespace {

using rdf::TextScanner;

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : in_(text) {}

  Query parse() {
    prologue();
    in_.skip_space();
    if (!in_.consume_word("SELECT", true)) in_.fail_expected("PREFIX or SELECT");
    projection();
    in_.skip_space();
    in_.consume_word("WHERE", true);
    in_.skip_space();
    in_.expect('{', "'{' opening the WHERE block");
    group();
    in_.skip_space();
    if (!in_.at_end()) in_.fail_expected("end of query");
    validate();
    return std::move(q_);
  }

 private:
  void prologue() {
    for (;;) {
      in_.skip_space();
      if (!in_.consume_word("PREFIX", true)) return;
      in_.skip_space();
      std::string name = in_.read_name_chars();
      if (!rdf::Graph::is_valid_prefix_name(name)) {
        in_.fail("invalid prefix name '" + name + "'");
      }
      in_.expect(':', "':' after prefix name");
      in_.skip_space();
      q_.prefixes.insert_or_assign(name, absolute(in_.read_iriref()));
    }
  }

  void projection() {
    in_.skip_space();
    if (in_.consume('*')) {
      q_.select_all = true;
      return;
    }
    while (in_.peek() == '?' || in_.peek() == '$') {
      std::string name = variable();
      if (std::find(q_.select.begin(), q_.select.end(), name) != q_.select.end()) {
        throw QueryValidationError("variable ?" + name + " is selected twice");
      }
      q_.select.push_back(name);
      in_.skip_space();
    }
    if (q_.select.empty()) in_.fail_expected("'*' or a variable after SELECT");
  }

  void group() {
    bool need_separator = false;
    for (;;) {
      in_.skip_space();
      if (in_.consume('}')) break;
      if (in_.consume_word("FILTER", true)) {
        filter();
        need_separator = false;
        continue;
      }
      if (need_separator) in_.fail_expected("'.', FILTER or '}'");
      q_.patterns.push_back(pattern());
      in_.skip_space();
      need_separator = !in_.consume('.');
    }
    if (q_.patterns.empty()) {
      throw SyntaxError(in_.line(), in_.column(),
                        "expected at least one triple pattern in the WHERE block");
    }
  }

  TriplePattern pattern() {
    PatternTerm s = term("subject");
    in_.skip_space();
    PatternTerm p = in_.consume_word("a") ? PatternTerm(rdf::Iri(std::string(rdf::kRdfType)))
                                          : term("predicate");
    if (std::holds_alternative<rdf::Literal>(p)) {
      in_.fail("a literal cannot be used as predicate");
    }
    in_.skip_space();
    PatternTerm o = term("object");
    return {std::move(s), std::move(p), std::move(o)};
  }

  void filter() {
    in_.skip_space();
    in_.expect('(', "'(' after FILTER");
    in_.skip_space();
    if (in_.peek() != '?' && in_.peek() != '$') in_.fail_expected("variable in FILTER");
    std::string var = variable();
    in_.skip_space();
    FilterOp op;
    if (in_.consume('=')) {
      op = FilterOp::kEqual;
    } else if (in_.peek() == '!' && in_.peek(1) == '=') {
      in_.get();
      in_.get();
      op = FilterOp::kNotEqual;
    } else {
      in_.fail_expected("'=' or '!='");
    }
    in_.skip_space();
    PatternTerm value = term("FILTER operand");
    if (std::holds_alternative<Variable>(value)) {
      in_.fail("FILTER compares a variable with a constant term");
    }
    in_.skip_space();
    in_.expect(')', "')' closing FILTER");
    rdf::Term constant = std::holds_alternative<rdf::Iri>(value)
                             ? rdf::Term(std::get<rdf::Iri>(value))
                             : rdf::Term(std::get<rdf::Literal>(value));
    q_.filters.push_back({var, op, std::move(constant)});
  }

  std::string variable() {
    in_.get();  // '?' or '$'
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(in_.peek())) || in_.peek() == '_') {
      name += in_.get();
    }
    if (name.empty()) in_.fail_expected("variable name");
    return name;
  }

  rdf::Iri absolute(const std::string& iri) {
    if (!rdf::Iri::is_valid(iri)) in_.fail("not an absolute IRI: <" + iri + ">");
    return rdf::Iri(iri);
  }

  PatternTerm term(const char* role) {
    char c = in_.peek();
    if (c == '?' || c == '$') return Variable{variable()};
    if (c == '<') return absolute(in_.read_iriref());
    if (c == '"' || c == '\'') return literal();
    if (c == '_' && in_.peek(1) == ':') in_.fail("blank nodes are not supported in queries");
    if (c == '+' || c == '-' || (c >= '0' && c <= '9')) {
      std::string type;
      std::string lexical = in_.read_number(type);
      return rdf::Literal(lexical, rdf::Iri(std::string(kXsd) + type));
    }
    if (in_.consume_word("true")) return rdf::Literal("true", rdf::Iri(std::string(kXsd) + "boolean"));
    if (in_.consume_word("false")) return rdf::Literal("false", rdf::Iri(std::string(kXsd) + "boolean"));
    if (TextScanner::is_name_char(c) || c == ':') return prefixed_name();
    in_.fail_expected(std::string("variable, IRI, prefixed name or literal as ") + role);
  }

  rdf::Iri prefixed_name() {
    std::string prefix = in_.read_name_chars();
    in_.expect(':', "':' in prefixed name");
    std::string local = in_.read_name_chars();
    auto it = q_.prefixes.find(prefix);
    if (it == q_.prefixes.end()) throw UndefinedPrefixError(prefix);
    return absolute(it->second.str() + local);
  }

  rdf::Literal literal() {
    std::string lexical = in_.read_quoted_string();
    if (in_.consume('@')) return rdf::Literal::lang_string(lexical, in_.read_lang_tag());
    if (in_.peek() == '^' && in_.peek(1) == '^') {
      in_.get();
      in_.get();
      rdf::Iri dt = in_.peek() == '<' ? absolute(in_.read_iriref()) : prefixed_name();
      if (dt.str() == rdf::kRdfLangString) in_.fail("rdf:langString requires a language tag");
      return rdf::Literal(lexical, dt);
    }
    return rdf::Literal(lexical);
  }

  void validate() {
    if (q_.patterns.size() > kMaxPatterns) {
      throw QueryValidationError("at most " + std::to_string(kMaxPatterns) +
                                 " triple patterns are supported, got " +
                                 std::to_string(q_.patterns.size()));
    }
    std::vector<std::string> seen;
    for (const auto& tp : q_.patterns) {
      for (const PatternTerm* t : {&tp.subject, &tp.predicate, &tp.object}) {
        if (const auto* v = std::get_if<Variable>(t)) {
          if (std::find(seen.begin(), seen.end(), v->name) == seen.end()) {
            seen.push_back(v->name);
          }
        }
      }
    }
    auto bound = [&](const std::string& v) {
      return std::find(seen.begin(), seen.end(), v) != seen.end();
    };
    if (q_.select_all) {
      q_.select = seen;
    } else {
      for (const auto& v : q_.select) {
        if (!bound(v)) {
          throw QueryValidationError("selected variable ?" + v +
                                     " does not appear in any triple pattern");
        }
      }
    }
    for (const auto& f : q_.filters) {
      if (!bound(f.variable)) {
        throw QueryValidationError("FILTER variable ?" + f.variable +
                                   " does not appear in any triple pattern");
      }
    }
  }

  TextScanner in_;
  Query q_;
};

}  // namespace

Query parse_query(std::string_view text) { return QueryParser(text).parse(); }

std::size_t BindingSet::column(std::string_view var) const {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == var) return i;
  }
  throw std::out_of_range("variable not projected: " + std::string(var));
}

}  // namespace ssnforge::query
