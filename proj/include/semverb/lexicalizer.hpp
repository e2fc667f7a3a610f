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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semverb/model.hpp"
#include "semverb/morphology.hpp"

namespace semverb {

enum class PartOfSpeech { NounPhrase, VerbPhrase };

/// How a VerbPhrase is realized. Finite verbs inflect themselves ("works at"
/// / "work at"); copular ones take a BE ("is located in", "is a member of").
enum class VerbForm { Finite, Copular };

struct LexicalEntry {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::NounPhrase;
  std::string singular;
  std::string plural;
  VerbForm verb_form = VerbForm::Finite;
  Tense tense = Tense::Present;

  const std::string& form(Number n) const { return n == Number::Plural ? plural : singular; }

  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

/// Synset frequencies keyed by lowercase lemma and part of speech.
class FrequencyLexicon {
 public:
  /// `lemma<TAB>noun|verb<TAB>frequency` lines; '#' comments and blank lines
  /// are skipped. Throws ParseError with the offending line.
  static FrequencyLexicon parse(std::string_view text);
  static FrequencyLexicon load(const std::filesystem::path& path);

  void add(std::string_view lemma, PartOfSpeech pos, unsigned long long frequency);

  bool contains(std::string_view lemma) const;
  bool has_reading(std::string_view lemma, PartOfSpeech pos) const;
  const std::vector<unsigned long long>& frequencies(std::string_view lemma, PartOfSpeech pos) const;
  std::vector<std::string> lemmas() const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Readings {
    std::vector<unsigned long long> noun;
    std::vector<unsigned long long> verb;
  };
  std::map<std::string, Readings, std::less<>> entries_;
};

struct LexicalizerConfig {
  double theta = 1.0;
  Iri label_property = vocab::rdfs_label();
  std::string language = "en";
};

/// The name an IRI goes by: its label in `graph`, else the fragment after
/// '#', else the segment after the last '/'. Percent escapes are decoded.
/// Throws LexicalizationError(EmptyName).
std::string iri_name(const Iri& iri, const Graph& graph, const LexicalizerConfig& config);

/// Classes become lowercase nouns with a plural; resources keep their
/// capitalization. Both are NounPhrase entries.
LexicalEntry lexicalize_iri(const Iri& iri, const Graph& graph, bool is_class, const LexicalizerConfig& config);

/// P(verb)/P(noun) with each mass a sum of log2(f + 1) over the lemma's
/// synsets. +infinity when the noun mass is zero. Throws
/// LexicalizationError(NoData) for lemmas absent from the lexicon.
double score_pos_ratio(std::string_view lemma, const FrequencyLexicon& lexicon);

/// Rule layer, then the ratio test (VerbPhrase iff ratio >= theta). Throws
/// LexicalizationError(UnknownWord) when the fallback has no data.
PartOfSpeech classify_property(std::string_view label, const FrequencyLexicon& lexicon,
                               const LexicalizerConfig& config);

/// Full property entry for a lowercase, space-separated label.
LexicalEntry lexicalize_property_label(std::string_view label, const FrequencyLexicon& lexicon,
                                       const LexicalizerConfig& config);

/// Surface text of a literal. Dates read "D Month YYYY"; user datatypes
/// append their (pluralized unless the value is 1) name.
std::string realize_literal(const Literal& literal, const Graph& graph,
                            const LexicalizerConfig& config = LexicalizerConfig{});

/// Caching front end used by the verbalizers. Property labels the lexicon
/// cannot classify fall back to NounPhrase and are recorded as warnings.
class Lexicalizer {
 public:
  explicit Lexicalizer(const FrequencyLexicon& lexicon, LexicalizerConfig config = LexicalizerConfig{});

  LexicalEntry resource(const Iri& iri, const Graph& graph) const;
  LexicalEntry class_noun(const Iri& iri, const Graph& graph) const;
  const LexicalEntry& property(const Iri& iri, const Graph& graph);
  std::string literal(const Literal& literal, const Graph& graph) const;
  /// Resource name or literal text.
  std::string object(const Term& term, const Graph& graph) const;

  const LexicalizerConfig& config() const noexcept { return config_; }
  const FrequencyLexicon& lexicon() const noexcept { return *lexicon_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  const FrequencyLexicon* lexicon_;
  LexicalizerConfig config_;
  std::map<std::string, LexicalEntry, std::less<>> properties_;
  std::vector<std::string> warnings_;
};

}  // namespace semverb
