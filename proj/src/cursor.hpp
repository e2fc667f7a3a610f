// Copyright 2026 The semverb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Character cursor shared by the Turtle, Manchester and SPARQL parsers.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "semverb/error.hpp"
#include "semverb/model.hpp"

namespace semverb::detail {

inline bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

inline bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || u >= 0x80;
}

inline bool is_local_char(char c) { return is_name_char(c) || c == ':' || c == '%'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  std::size_t pos() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() noexcept { return at_end() ? '\0' : text_[pos_++]; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }
  std::string_view slice(std::size_t from, std::size_t to) const { return text_.substr(from, to - from); }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  /// Skips whitespace and `#` line comments.
  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  /// Case-insensitive keyword match that requires a non-name character after it.
  bool peek_keyword(std::string_view word) const {
    if (text_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
          std::tolower(static_cast<unsigned char>(word[i]))) {
        return false;
      }
    }
    const char after = pos_ + word.size() < text_.size() ? text_[pos_ + word.size()] : '\0';
    return !is_name_char(after) && after != ':';
  }

  bool consume_keyword(std::string_view word) {
    if (!peek_keyword(word)) return false;
    pos_ += word.size();
    return true;
  }

  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++column;
      }
    }
    return {line, column};
  }

  std::string describe_here() const {
    if (at_end()) return "end of input";
    std::size_t end = pos_;
    while (end < text_.size() && end - pos_ < 24 && !std::isspace(static_cast<unsigned char>(text_[end]))) {
      ++end;
      if (end == pos_ + 1 && !is_local_char(text_[pos_])) break;
    }
    return "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
  }

  [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& expected) const {
    const auto [line, column] = location(at);
    Cursor probe(text_);
    probe.pos_ = at;
    throw ParseError(line, column, expected, probe.describe_here());
  }

  [[noreturn]] void unsupported(const std::string& construct) const { unsupported_at(pos_, construct); }

  [[noreturn]] void unsupported_at(std::size_t at, const std::string& construct) const {
    const auto [line, column] = location(at);
    throw Unsupported(construct, line, column);
  }

  void expect(char c, const std::string& what) {
    skip_space();
    if (!consume(c)) fail(what);
  }

  // --- lexical pieces -----------------------------------------------------

  /// `<...>`; the cursor is on '<'.
  Iri read_iriref() {
    const std::size_t start = pos_;
    ++pos_;
    std::string value;
    while (!at_end() && peek() != '>') {
      const char c = get();
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') fail_at(pos_ - 1, "'>' closing IRI");
      value += c;
    }
    if (!consume('>')) fail("'>' closing IRI");
    try {
      return Iri(std::move(value));
    } catch (const InvalidTerm&) {
      fail_at(start, "absolute IRI");
    }
  }

  /// `prefix:local`; returns the raw text. Trailing dots belong to the
  /// enclosing statement, not the local part.
  std::optional<std::string> read_prefixed_name() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && is_name_start(text_[p])) {
      while (p < text_.size() && is_name_char(text_[p])) ++p;
    }
    if (p >= text_.size() || text_[p] != ':') return std::nullopt;
    ++p;
    while (p < text_.size() && is_local_char(text_[p])) ++p;
    while (p > start && text_[p - 1] == '.') --p;
    pos_ = p;
    return std::string(text_.substr(start, p - start));
  }

  Iri expand(const std::string& prefixed, std::size_t at, const PrefixMap& prefixes) const {
    try {
      return expand_prefixed_name(prefixed, prefixes);
    } catch (const UnknownPrefix& e) {
      fail_at(at, "declared prefix for '" + e.prefix() + ":'");
    } catch (const InvalidTerm&) {
      fail_at(at, "valid prefixed name");
    }
  }

  /// Quoted string with Turtle/SPARQL escapes; the cursor is on the quote.
  std::string read_string() {
    const char quote = get();
    const bool long_form = peek() == quote && peek(1) == quote;
    if (long_form) pos_ += 2;
    std::string out;
    for (;;) {
      if (at_end()) fail("closing quote");
      const char c = get();
      if (c == quote) {
        if (!long_form) return out;
        if (peek() == quote && peek(1) == quote) {
          pos_ += 2;
          return out;
        }
        out += c;
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail_at(pos_ - 1, "closing quote");
      if (c != '\\') {
        out += c;
        continue;
      }
      const char e = get();
      switch (e) {
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, read_hex(4)); break;
        case 'U': append_utf8(out, read_hex(8)); break;
        default: fail_at(pos_ - 1, "valid escape sequence");
      }
    }
  }

  /// `@tag`; the cursor is on '@'.
  std::string read_langtag() {
    ++pos_;
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("language tag");
    while (peek() == '-' && std::isalnum(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Integer, decimal or double lexical form; nullopt when not at a number.
  std::optional<Literal> read_number() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
    const std::size_t digits_start = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    bool has_int = p > digits_start;
    bool decimal = false;
    if (p + 1 < text_.size() && text_[p] == '.' && std::isdigit(static_cast<unsigned char>(text_[p + 1]))) {
      decimal = true;
      ++p;
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    }
    if (!has_int && !decimal) return std::nullopt;
    bool exponent = false;
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        exponent = true;
        p = q;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      }
    }
    pos_ = p;
    std::string lex(text_.substr(start, p - start));
    if (exponent) return Literal(std::move(lex), vocab::xsd_double());
    if (decimal) return Literal(std::move(lex), vocab::xsd_decimal());
    return Literal(std::move(lex), vocab::xsd_integer());
  }

 private:
  unsigned long read_hex(int count) {
    unsigned long value = 0;
    for (int i = 0; i < count; ++i) {
      const char c = get();
      if (!std::isxdigit(static_cast<unsigned char>(c))) fail_at(pos_ - (c ? 1 : 0), "hex digit");
      value = value * 16 + static_cast<unsigned long>(std::isdigit(static_cast<unsigned char>(c))
                                                           ? c - '0'
                                                           : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    }
    return value;
  }

  void append_utf8(std::string& out, unsigned long cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail_at(pos_ - 1, "valid code point");
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

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Wraps literal construction so invariant violations surface as located
/// parse errors.
template <typename Make>
Literal make_literal_at(const Cursor& cursor, std::size_t at, Make&& make) {
  try {
    return make();
  } catch (const InvalidTerm& e) {
    cursor.fail_at(at, std::string("valid literal (") + e.what() + ")");
  }
}

}  // namespace semverb::detail
