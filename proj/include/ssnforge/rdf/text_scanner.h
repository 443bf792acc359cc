#ifndef SSNFORGE_RDF_TEXT_SCANNER_H_
#define SSNFORGE_RDF_TEXT_SCANNER_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "ssnforge/errors.h"

namespace ssnforge::rdf {

// Cursor over UTF-8 text with 1-based line/column tracking and the lexical
// productions shared by the Turtle, N-Triples and query parsers.
class TextScanner {
 public:
  explicit TextScanner(std::string_view text, int first_line = 1);

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get();
  bool consume(char c);
  // Consumes `word` if it is next and is not followed by a name character.
  bool consume_word(std::string_view word, bool ignore_case = false);
  std::size_t position() const { return pos_; }
  int line() const { return line_; }
  int column() const { return column_; }

  // Skips spaces, tabs, newlines and '#' comments.
  void skip_space();
  // Skips spaces and tabs only (line-oriented formats).
  void skip_inline_space();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_expected(const std::string& what) const;
  void expect(char c, const std::string& what);

  // Reads "<...>" and returns the decoded contents (UCHAR escapes applied).
  std::string read_iriref();
  // Reads a '"' or '\'' delimited string and returns its decoded value.
  // With allow_long, also """...""" and '''...''' which may span lines.
  std::string read_quoted_string(bool allow_long = false);
  // After '@': [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::string read_lang_tag();
  // After "_:": [A-Za-z0-9_]+
  std::string read_blank_label();
  // Name characters usable in prefixes and local names: [A-Za-z0-9_-.];
  // a trailing '.' is left unconsumed.
  std::string read_name_chars();
  // [+-]? digits with optional fraction/exponent. Returns the lexical form
  // and sets `datatype` to the matching xsd local name.
  std::string read_number(std::string& datatype);

  static bool is_name_char(char c);

 private:
  void append_uchar(std::string& out, int digits);

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
};

// Appends the UTF-8 encoding of `cp`.
void append_utf8(std::string& out, char32_t cp);

}  // namespace ssnforge::rdf

#endif  // SSNFORGE_RDF_TEXT_SCANNER_H_
