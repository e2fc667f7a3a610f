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

// Word-level English helpers shared by the lexicalizer and the realizer.

#include <string>
#include <string_view>
#include <vector>

namespace semverb {

enum class Number { Singular, Plural };
enum class Tense { Present, Past };

/// Pluralizes the head (final token) of a noun phrase. Irregular heads come
/// from a fixed table; everything else follows the -s/-es/-ies rules.
std::string pluralize(std::string_view singular);

/// "a" or "an" for the phrase, decided on its first word.
std::string indefinite_article(std::string_view phrase);
std::string with_indefinite_article(std::string_view phrase);

/// "zero" .. "twelve", digits above.
std::string number_word(unsigned long long n);

/// Splits an identifier on '_', '-', spaces, camelCase humps and
/// letter/digit boundaries. Runs of capitals stay together ("XMLSchema" ->
/// "XML", "Schema").
std::vector<std::string> split_identifier(std::string_view name);

/// Splits on '_' and whitespace only; used for resource names like
/// "Albert_Einstein" whose internal capitals are meaningful.
std::vector<std::string> split_underscores(std::string_view name);

std::vector<std::string> split_words(std::string_view text);
std::string join_words(const std::vector<std::string>& words, std::string_view separator = " ");

/// True for tokens of two or more letters that are all uppercase.
bool is_acronym(std::string_view word);

std::string to_lower(std::string_view text);

/// Uppercases the first ASCII letter when it is lowercase.
std::string capitalize(std::string_view text);

/// Third-person singular present of a base-form verb ("cross" -> "crosses").
std::string third_person_singular(std::string_view base);

/// Candidate base forms of an inflected token, most specific first. The
/// token itself is always the first candidate.
std::vector<std::string> base_form_candidates(std::string_view token);

/// English month name for 1..12.
std::string_view month_name(int month);

}  // namespace semverb
