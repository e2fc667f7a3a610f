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

#include "semverb/morphology.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace semverb {

namespace {

bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool sibilant_ending(std::string_view w) {
  return ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") || ends_with(w, "sh");
}

const std::map<std::string, std::string, std::less<>>& irregular_plurals() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"person", "people"}, {"child", "children"}, {"man", "men"},     {"woman", "women"},
      {"foot", "feet"},     {"mouse", "mice"},     {"sheep", "sheep"},
  };
  return table;
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) {
  return std::islower(static_cast<unsigned char>(c)) != 0 || static_cast<unsigned char>(c) >= 0x80;
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string pluralize(std::string_view singular) {
  const std::size_t cut = singular.rfind(' ');
  const std::string_view prefix = cut == std::string_view::npos ? std::string_view{} : singular.substr(0, cut + 1);
  const std::string_view head = cut == std::string_view::npos ? singular : singular.substr(cut + 1);
  std::string out(prefix);
  if (head.empty()) return out;

  const std::string lower = to_lower(head);
  if (auto it = irregular_plurals().find(lower); it != irregular_plurals().end()) {
    std::string plural = it->second;
    if (is_upper(head.front())) plural[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(plural[0])));
    return out + plural;
  }
  if (is_acronym(head)) return out + std::string(head) + "s";
  if (sibilant_ending(lower)) return out + std::string(head) + "es";
  if (lower.size() >= 2 && lower.back() == 'y' && !is_vowel(lower[lower.size() - 2])) {
    return out + std::string(head.substr(0, head.size() - 1)) + "ies";
  }
  return out + std::string(head) + "s";
}

std::string indefinite_article(std::string_view phrase) {
  const auto words = split_words(phrase);
  if (words.empty()) return "a";
  const std::string& first = words.front();
  if (is_acronym(first)) {
    static constexpr std::string_view kVowelSounding = "AEFHILMNORSX";
    return kVowelSounding.find(first.front()) != std::string_view::npos ? "an" : "a";
  }
  const std::string word = to_lower(first);
  static constexpr std::array<std::string_view, 5> kSilentH = {"hour", "honest", "honor", "honour", "heir"};
  for (auto p : kSilentH) {
    if (starts_with(word, p)) return "an";
  }
  static constexpr std::array<std::string_view, 11> kYouSound = {"uni", "use", "usa", "usu", "uti", "ure",
                                                                 "euro", "eu",  "one", "once", "ewe"};
  for (auto p : kYouSound) {
    if (starts_with(word, p)) return "a";
  }
  return is_vowel(word.front()) ? "an" : "a";
}

std::string with_indefinite_article(std::string_view phrase) {
  return indefinite_article(phrase) + " " + std::string(phrase);
}

std::string number_word(unsigned long long n) {
  static constexpr std::array<std::string_view, 13> kWords = {"zero", "one", "two",   "three", "four",   "five", "six",
                                                              "seven", "eight", "nine", "ten", "eleven", "twelve"};
  if (n < kWords.size()) return std::string(kWords[n]);
  return std::to_string(n);
}

std::vector<std::string> split_identifier(std::string_view name) {
  std::vector<std::string> words;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) words.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (c == '_' || c == '-' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const char prev = current.back();
      const char next = i + 1 < name.size() ? name[i + 1] : '\0';
      const bool hump = is_upper(c) && (is_lower(prev) || is_digit(prev));
      const bool acronym_end = is_upper(c) && is_upper(prev) && is_lower(next) && static_cast<unsigned char>(next) < 0x80;
      const bool digit_edge = is_digit(c) != is_digit(prev);
      if (hump || acronym_end || digit_edge) flush();
    }
    current += c;
  }
  flush();
  return words;
}

std::vector<std::string> split_underscores(std::string_view name) {
  std::vector<std::string> words;
  std::string current;
  for (char c : name) {
    if (c == '_' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::string join_words(const std::vector<std::string>& words, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += separator;
    out += words[i];
  }
  return out;
}

bool is_acronym(std::string_view word) {
  if (word.size() < 2) return false;
  return std::all_of(word.begin(), word.end(), [](char c) { return is_upper(c) || is_digit(c); }) &&
         std::any_of(word.begin(), word.end(), is_upper);
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string capitalize(std::string_view text) {
  std::string out(text);
  if (!out.empty() && std::islower(static_cast<unsigned char>(out[0]))) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

std::string third_person_singular(std::string_view base) {
  static const std::map<std::string, std::string, std::less<>> irregular = {
      {"be", "is"}, {"have", "has"}, {"do", "does"}, {"go", "goes"}};
  if (auto it = irregular.find(base); it != irregular.end()) return it->second;
  const std::string b(base);
  if (sibilant_ending(b) || ends_with(b, "o")) return b + "es";
  if (b.size() >= 2 && b.back() == 'y' && !is_vowel(b[b.size() - 2])) return b.substr(0, b.size() - 1) + "ies";
  return b + "s";
}

std::vector<std::string> base_form_candidates(std::string_view token) {
  const std::string t(token);
  std::vector<std::string> out{t};
  auto add = [&](std::string s) {
    if (s.size() >= 2 && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  auto stem = [&](std::size_t n) { return t.substr(0, t.size() - n); };
  if (ends_with(t, "ies") && t.size() > 4) add(stem(3) + "y");
  if (ends_with(t, "es")) {
    const std::string s = stem(2);
    if (sibilant_ending(s) || ends_with(s, "o")) add(s);
  }
  if (ends_with(t, "s") && !ends_with(t, "ss")) add(stem(1));
  if (ends_with(t, "ied") && t.size() > 4) add(stem(3) + "y");
  if (ends_with(t, "ed")) {
    const std::string s = stem(2);
    if (s.size() >= 2 && s.back() == s[s.size() - 2] && !is_vowel(s.back())) add(s.substr(0, s.size() - 1));
    add(stem(1));
    add(s);
  }
  if (ends_with(t, "ing") && t.size() > 5) {
    const std::string s = stem(3);
    if (s.size() >= 2 && s.back() == s[s.size() - 2] && !is_vowel(s.back())) add(s.substr(0, s.size() - 1));
    add(s + "e");
    add(s);
  }
  return out;
}

std::string_view month_name(int month) {
  static constexpr std::array<std::string_view, 12> kMonths = {"January", "February", "March",     "April",
                                                               "May",     "June",     "July",      "August",
                                                               "September", "October", "November", "December"};
  if (month < 1 || month > 12) return {};
  return kMonths[static_cast<std::size_t>(month - 1)];
}

}  // namespace semverb
