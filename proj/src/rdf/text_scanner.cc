#include "ssnforge/rdf/text_scanner.h"

#include <cctype>

namespace ssnforge::rdf {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string describe(char c) {
  if (c == '\0') return "end of input";
  if (c == '\n') return "end of line";
  return std::string("'") + c + "'";
}

}  // namespace

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

TextScanner::TextScanner(std::string_view text, int first_line)
    : text_(text), line_(first_line) {}

char TextScanner::get() {
  if (at_end()) return '\0';
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
    ++column_;  // count code points, not continuation bytes
  }
  return c;
}

bool TextScanner::consume(char c) {
  if (peek() != c) return false;
  get();
  return true;
}

bool TextScanner::is_name_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.';
}

bool TextScanner::consume_word(std::string_view word, bool ignore_case) {
  if (text_.size() - pos_ < word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char a = text_[pos_ + i];
    char b = word[i];
    if (ignore_case) {
      a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
      b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
    }
    if (a != b) return false;
  }
  char after = peek(word.size());
  if (is_name_char(after) || after == ':') return false;
  for (std::size_t i = 0; i < word.size(); ++i) get();
  return true;
}

void TextScanner::skip_space() {
  while (!at_end()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      get();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n') get();
    } else {
      break;
    }
  }
}

void TextScanner::skip_inline_space() {
  while (peek() == ' ' || peek() == '\t') get();
}

void TextScanner::fail(const std::string& message) const {
  throw SyntaxError(line_, column_, message);
}

void TextScanner::fail_expected(const std::string& what) const {
  fail("expected " + what + ", found " + describe(peek()));
}

void TextScanner::expect(char c, const std::string& what) {
  if (!consume(c)) fail_expected(what);
}

void TextScanner::append_uchar(std::string& out, int digits) {
  char32_t cp = 0;
  for (int i = 0; i < digits; ++i) {
    char c = peek();
    int v;
    if (is_digit(c)) v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else fail_expected("hexadecimal digit");
    cp = cp * 16 + static_cast<char32_t>(v);
    get();
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    fail("escape does not denote a Unicode scalar value");
  }
  append_utf8(out, cp);
}

std::string TextScanner::read_iriref() {
  expect('<', "'<' starting an IRI");
  std::string out;
  for (;;) {
    char c = peek();
    if (at_end() || c == '\n') fail_expected("'>' closing the IRI");
    if (c == '>') {
      get();
      return out;
    }
    if (c == '\\') {
      get();
      if (consume('u')) append_uchar(out, 4);
      else if (consume('U')) append_uchar(out, 8);
      else fail_expected("'u' or 'U' after '\\' in IRI");
      continue;
    }
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
        c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
      fail(std::string("character not allowed in IRI: ") + describe(c));
    }
    out += get();
  }
}

std::string TextScanner::read_quoted_string(bool allow_long) {
  char quote = peek();
  if (quote != '"' && quote != '\'') fail_expected("string literal");
  bool long_form = allow_long && peek(1) == quote && peek(2) == quote;
  get();
  if (long_form) {
    get();
    get();
  }
  std::string out;
  for (;;) {
    char c = peek();
    if (at_end() || (!long_form && (c == '\n' || c == '\r'))) {
      fail_expected(std::string("closing ") + quote);
    }
    get();
    if (c == quote) {
      if (!long_form) return out;
      if (peek() == quote && peek(1) == quote && peek(2) != quote) {
        get();
        get();
        return out;
      }
      out += c;
      continue;
    }
    if (c != '\\') {
      out += c;
      continue;
    }
    char e = get();
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': append_uchar(out, 4); break;
      case 'U': append_uchar(out, 8); break;
      default: fail("unknown escape sequence in string literal");
    }
  }
}

std::string TextScanner::read_lang_tag() {
  std::string out;
  while (is_alpha(peek())) out += get();
  if (out.empty()) fail_expected("language tag");
  while (peek() == '-' && (is_alpha(peek(1)) || is_digit(peek(1)))) {
    out += get();
    while (is_alpha(peek()) || is_digit(peek())) out += get();
  }
  return out;
}

std::string TextScanner::read_blank_label() {
  std::string out;
  while (is_alpha(peek()) || is_digit(peek()) || peek() == '_') out += get();
  if (out.empty()) fail_expected("blank node label");
  return out;
}

std::string TextScanner::read_name_chars() {
  std::string out;
  while (is_name_char(peek())) {
    if (peek() == '.' && !is_name_char(peek(1))) break;
    out += get();
  }
  return out;
}

std::string TextScanner::read_number(std::string& datatype) {
  std::string out;
  if (peek() == '+' || peek() == '-') out += get();
  bool int_digits = false;
  while (is_digit(peek())) {
    out += get();
    int_digits = true;
  }
  datatype = "integer";
  if (peek() == '.' && is_digit(peek(1))) {
    out += get();
    while (is_digit(peek())) out += get();
    datatype = "decimal";
  } else if (!int_digits) {
    fail_expected("number");
  }
  if (peek() == 'e' || peek() == 'E') {
    out += get();
    if (peek() == '+' || peek() == '-') out += get();
    if (!is_digit(peek())) fail_expected("exponent digits");
    while (is_digit(peek())) out += get();
    datatype = "double";
  }
  return out;
}

}  // namespace ssnforge::rdf
