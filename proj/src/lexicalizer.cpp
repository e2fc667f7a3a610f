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

#include "semverb/lexicalizer.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "semverb/error.hpp"

namespace semverb {

namespace {

const std::set<std::string, std::less<>>& prepositions() {
  static const std::set<std::string, std::less<>> words = {
      "about", "after", "against", "as",    "at",     "before", "between", "by",   "during", "for",
      "from",  "in",    "into",    "near",  "of",     "on",     "onto",    "over", "per",    "since",
      "through", "to",  "under",   "until", "via",    "with",   "within"};
  return words;
}

// Past participles whose base form differs.
const std::map<std::string, std::string, std::less<>>& irregular_participles() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"born", "bear"},     {"borne", "bear"},   {"known", "know"},    {"written", "write"}, {"built", "build"},
      {"made", "make"},     {"given", "give"},   {"taken", "take"},    {"seen", "see"},      {"done", "do"},
      {"held", "hold"},     {"led", "lead"},     {"won", "win"},       {"begun", "begin"},   {"drawn", "draw"},
      {"driven", "drive"},  {"chosen", "choose"}, {"spoken", "speak"}, {"stolen", "steal"},  {"thrown", "throw"},
      {"worn", "wear"},     {"grown", "grow"},   {"shown", "show"},    {"sold", "sell"},     {"told", "tell"},
      {"taught", "teach"},  {"bought", "buy"},   {"brought", "bring"}, {"caught", "catch"},  {"kept", "keep"},
      {"lost", "lose"},     {"sent", "send"},    {"spent", "spend"},   {"heard", "hear"},    {"sung", "sing"},
      {"fought", "fight"},  {"hidden", "hide"},  {"eaten", "eat"},     {"forgotten", "forget"}};
  return table;
}

// Simple past forms that are not also participles.
const std::map<std::string, std::string, std::less<>>& irregular_pasts() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"wrote", "write"}, {"knew", "know"},   {"bore", "bear"},   {"gave", "give"},   {"took", "take"},
      {"saw", "see"},     {"did", "do"},      {"began", "begin"}, {"drew", "draw"},   {"drove", "drive"},
      {"chose", "choose"}, {"spoke", "speak"}, {"stole", "steal"}, {"threw", "throw"}, {"wore", "wear"},
      {"grew", "grow"},   {"sang", "sing"},   {"ate", "eat"},     {"was", "be"},      {"were", "be"}};
  return table;
}

// Participles denoting a completed event; their BE goes to the past tense.
const std::set<std::string, std::less<>>& event_participles() {
  static const std::set<std::string, std::less<>> words = {
      "born",      "founded",   "written",   "built",     "created",  "established", "designed",
      "painted",   "composed",  "invented",  "discovered", "directed", "produced",   "published",
      "released",  "killed",    "buried",    "baptized",   "educated", "raised",     "elected",
      "appointed", "awarded",   "completed", "launched",   "formed",   "opened",     "made"};
  return words;
}

const std::map<std::string, std::string, std::less<>>& irregular_present_plurals() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"has", "have"}, {"is", "are"}, {"does", "do"}, {"goes", "go"}};
  return table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::optional<std::string> lemma_in(const FrequencyLexicon& lexicon, std::string_view token) {
  for (auto& candidate : base_form_candidates(token)) {
    if (lexicon.contains(candidate)) return candidate;
  }
  return std::nullopt;
}

bool is_gerund(std::string_view token) { return token.size() >= 6 && ends_with(token, "ing"); }

bool is_participle(const FrequencyLexicon& lexicon, std::string_view token);

bool verb_reading(const FrequencyLexicon& lexicon, std::string_view token) {
  if (irregular_participles().count(token) || irregular_pasts().count(token) ||
      irregular_present_plurals().count(token)) {
    return true;
  }
  for (auto& candidate : base_form_candidates(token)) {
    if (lexicon.has_reading(candidate, PartOfSpeech::VerbPhrase)) return true;
  }
  return false;
}

bool noun_reading(const FrequencyLexicon& lexicon, std::string_view token) {
  if (lexicon.has_reading(token, PartOfSpeech::NounPhrase)) return true;
  // Only plural endings count; "-ed" forms are never nouns.
  for (auto& candidate : base_form_candidates(token)) {
    if (ends_with(token, "s") && lexicon.has_reading(candidate, PartOfSpeech::NounPhrase)) return true;
  }
  return false;
}

bool is_participle(const FrequencyLexicon& lexicon, std::string_view token) {
  if (irregular_participles().count(token)) return true;
  return token.size() >= 4 && ends_with(token, "ed") && !lexicon.has_reading(token, PartOfSpeech::NounPhrase);
}

/// A token that can only be read as a verb form.
bool verb_only(const FrequencyLexicon& lexicon, std::string_view token) {
  if (irregular_participles().count(token) || irregular_pasts().count(token)) return true;
  if (is_participle(lexicon, token)) return true;
  if (auto lemma = lemma_in(lexicon, token)) {
    return lexicon.has_reading(*lemma, PartOfSpeech::VerbPhrase) &&
           !lexicon.has_reading(*lemma, PartOfSpeech::NounPhrase);
  }
  return false;
}

std::string normalize_label(std::string_view name) {
  std::vector<std::string> words = split_identifier(name);
  for (auto& w : words) {
    if (!is_acronym(w)) w = to_lower(w);
  }
  return join_words(words);
}

std::string percent_decode(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size() && std::isxdigit(static_cast<unsigned char>(text[i + 1])) &&
        std::isxdigit(static_cast<unsigned char>(text[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(text.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

std::string format_date(const std::string& lexical) {
  static const std::regex pattern(R"((-?\d{4,})-(\d{2})-(\d{2})(Z|[+-]\d{2}:\d{2})?)");
  std::smatch m;
  if (!std::regex_match(lexical, m, pattern)) return lexical;
  const int month = std::stoi(m[2].str());
  const int day = std::stoi(m[3].str());
  if (month_name(month).empty() || day < 1 || day > 31) return lexical;
  std::string year = m[1].str();
  const bool negative = year.front() == '-';
  if (negative) year.erase(0, 1);
  year.erase(0, std::min(year.find_first_not_of('0'), year.size() - 1));
  return std::to_string(day) + " " + std::string(month_name(month)) + " " + year + (negative ? " BC" : "");
}

std::optional<double> numeric_value(const std::string& lexical) {
  if (lexical.empty()) return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(lexical.c_str(), &end);
  if (end != lexical.c_str() + lexical.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// FrequencyLexicon

FrequencyLexicon FrequencyLexicon::parse(std::string_view text) {
  FrequencyLexicon lexicon;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) {
      throw ParseError(line_no, 1, "lemma<TAB>pos<TAB>frequency", "'" + std::string(line) + "'");
    }
    const std::string lemma = to_lower(line.substr(0, tab1));
    const std::string pos = to_lower(line.substr(tab1 + 1, tab2 - tab1 - 1));
    const std::string_view freq = line.substr(tab2 + 1);
    if (lemma.empty()) throw ParseError(line_no, 1, "lemma", "empty field");
    PartOfSpeech p;
    if (pos == "noun") {
      p = PartOfSpeech::NounPhrase;
    } else if (pos == "verb") {
      p = PartOfSpeech::VerbPhrase;
    } else {
      throw ParseError(line_no, tab1 + 2, "noun or verb", "'" + pos + "'");
    }
    if (freq.empty() || freq.size() > 18 ||
        freq.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError(line_no, tab2 + 2, "non-negative integer frequency", "'" + std::string(freq) + "'");
    }
    lexicon.add(lemma, p, std::stoull(std::string(freq)));
    if (end == text.size()) break;
  }
  return lexicon;
}

FrequencyLexicon FrequencyLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read lexicon file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void FrequencyLexicon::add(std::string_view lemma, PartOfSpeech pos, unsigned long long frequency) {
  auto& readings = entries_[to_lower(lemma)];
  (pos == PartOfSpeech::NounPhrase ? readings.noun : readings.verb).push_back(frequency);
}

bool FrequencyLexicon::contains(std::string_view lemma) const { return entries_.find(lemma) != entries_.end(); }

bool FrequencyLexicon::has_reading(std::string_view lemma, PartOfSpeech pos) const {
  return !frequencies(lemma, pos).empty();
}

const std::vector<unsigned long long>& FrequencyLexicon::frequencies(std::string_view lemma, PartOfSpeech pos) const {
  static const std::vector<unsigned long long> kNone;
  auto it = entries_.find(lemma);
  if (it == entries_.end()) return kNone;
  return pos == PartOfSpeech::NounPhrase ? it->second.noun : it->second.verb;
}

std::vector<std::string> FrequencyLexicon::lemmas() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [lemma, readings] : entries_) out.push_back(lemma);
  return out;
}

// ---------------------------------------------------------------------------
// Names and entries

std::string iri_name(const Iri& iri, const Graph& graph, const LexicalizerConfig& config) {
  if (auto label = graph.label(iri, config.label_property, config.language)) {
    if (split_words(*label).empty()) throw LexicalizationError(LexicalizationError::Kind::EmptyName, iri.str());
    return join_words(split_words(*label));
  }
  const std::string& text = iri.str();
  std::string_view name;
  if (auto hash = text.find('#'); hash != std::string::npos) {
    name = std::string_view(text).substr(hash + 1);
  } else if (auto slash = text.rfind('/'); slash != std::string::npos) {
    name = std::string_view(text).substr(slash + 1);
  } else {
    name = std::string_view(text).substr(text.rfind(':') + 1);
  }
  std::string decoded = percent_decode(name);
  if (split_identifier(decoded).empty()) throw LexicalizationError(LexicalizationError::Kind::EmptyName, iri.str());
  return decoded;
}

LexicalEntry lexicalize_iri(const Iri& iri, const Graph& graph, bool is_class, const LexicalizerConfig& config) {
  const std::string name = iri_name(iri, graph, config);
  LexicalEntry entry;
  entry.pos = PartOfSpeech::NounPhrase;
  if (is_class) {
    entry.singular = normalize_label(name);
    entry.plural = pluralize(entry.singular);
  } else {
    entry.singular = join_words(split_underscores(name));
    entry.plural = entry.singular;
  }
  entry.lemma = entry.singular;
  return entry;
}

double score_pos_ratio(std::string_view lemma, const FrequencyLexicon& lexicon) {
  const std::string key = to_lower(lemma);
  if (!lexicon.contains(key)) throw LexicalizationError(LexicalizationError::Kind::NoData, key);
  auto mass = [&](PartOfSpeech pos) {
    double sum = 0.0;
    for (auto f : lexicon.frequencies(key, pos)) sum += std::log2(static_cast<double>(f) + 1.0);
    return sum;
  };
  const double noun = mass(PartOfSpeech::NounPhrase);
  const double verb = mass(PartOfSpeech::VerbPhrase);
  if (noun == 0.0) return std::numeric_limits<double>::infinity();
  // The shared denominator of both conditional probabilities cancels.
  return verb / noun;
}

PartOfSpeech classify_property(std::string_view label, const FrequencyLexicon& lexicon,
                               const LexicalizerConfig& config) {
  const auto tokens = split_words(to_lower(label));
  if (tokens.empty()) throw LexicalizationError(LexicalizationError::Kind::EmptyName, std::string(label));
  const std::string& first = tokens.front();
  const std::string& last = tokens.back();

  if (is_gerund(first)) return PartOfSpeech::NounPhrase;
  if (verb_only(lexicon, first)) return PartOfSpeech::VerbPhrase;
  if (tokens.size() > 1 && prepositions().count(last)) return PartOfSpeech::VerbPhrase;
  if (noun_reading(lexicon, last) && !verb_reading(lexicon, first)) return PartOfSpeech::NounPhrase;

  auto lemma = lemma_in(lexicon, first);
  if (!lemma) throw LexicalizationError(LexicalizationError::Kind::UnknownWord, first);
  return score_pos_ratio(*lemma, lexicon) >= config.theta ? PartOfSpeech::VerbPhrase : PartOfSpeech::NounPhrase;
}

LexicalEntry lexicalize_property_label(std::string_view label, const FrequencyLexicon& lexicon,
                                       const LexicalizerConfig& config) {
  LexicalEntry entry;
  entry.lemma = join_words(split_words(label));
  entry.pos = classify_property(entry.lemma, lexicon, config);
  auto tokens = split_words(entry.lemma);
  const std::string first = to_lower(tokens.front());
  const bool prep_final = tokens.size() > 1 && prepositions().count(to_lower(tokens.back())) > 0;

  if (entry.pos == PartOfSpeech::NounPhrase) {
    entry.singular = entry.lemma;
    entry.plural = pluralize(entry.lemma);
    return entry;
  }

  const bool participle = is_participle(lexicon, first) && !irregular_pasts().count(first);
  if (participle && (prep_final || (irregular_participles().count(first) && tokens.size() == 1))) {
    entry.verb_form = VerbForm::Copular;
    entry.singular = entry.plural = entry.lemma;
    entry.tense = event_participles().count(first) ? Tense::Past : Tense::Present;
    return entry;
  }
  if (prep_final && !verb_reading(lexicon, first)) {
    // Relational noun: "member of" -> "is a member of" / "are members of".
    entry.verb_form = VerbForm::Copular;
    entry.singular = with_indefinite_article(entry.lemma);
    std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
    entry.plural = pluralize(tokens.front()) + " " + join_words(rest);
    return entry;
  }

  entry.verb_form = VerbForm::Finite;
  std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
  auto with_rest = [&](const std::string& verb) { return rest.empty() ? verb : verb + " " + join_words(rest); };
  if (irregular_pasts().count(first) || is_participle(lexicon, first)) {
    entry.singular = entry.plural = entry.lemma;
    entry.tense = Tense::Past;
  } else if (auto it = irregular_present_plurals().find(first); it != irregular_present_plurals().end()) {
    entry.singular = entry.lemma;
    entry.plural = with_rest(it->second);
  } else if (lexicon.has_reading(first, PartOfSpeech::VerbPhrase) || !ends_with(first, "s") || ends_with(first, "ss")) {
    entry.singular = with_rest(third_person_singular(first));
    entry.plural = entry.lemma;
  } else {
    std::string base = first.substr(0, first.size() - 1);
    for (auto& candidate : base_form_candidates(first)) {
      if (candidate != first && lexicon.has_reading(candidate, PartOfSpeech::VerbPhrase)) {
        base = candidate;
        break;
      }
    }
    entry.singular = entry.lemma;
    entry.plural = with_rest(base);
  }
  return entry;
}

std::string realize_literal(const Literal& literal, const Graph& graph, const LexicalizerConfig& config) {
  if (literal.language_tag()) return literal.lexical_form();
  const Iri& dt = literal.datatype();
  if (dt == vocab::xsd_date()) return format_date(literal.lexical_form());
  if (vocab::is_builtin_datatype(dt)) return literal.lexical_form();
  std::string unit = normalize_label(iri_name(dt, graph, config));
  auto value = numeric_value(literal.lexical_form());
  if (value && *value != 1.0) unit = pluralize(unit);
  return literal.lexical_form() + " " + unit;
}

// ---------------------------------------------------------------------------
// Lexicalizer

Lexicalizer::Lexicalizer(const FrequencyLexicon& lexicon, LexicalizerConfig config)
    : lexicon_(&lexicon), config_(std::move(config)) {
  if (!(config_.theta > 0.0) || !std::isfinite(config_.theta)) throw Error("theta must be a positive number");
}

LexicalEntry Lexicalizer::resource(const Iri& iri, const Graph& graph) const {
  return lexicalize_iri(iri, graph, false, config_);
}

LexicalEntry Lexicalizer::class_noun(const Iri& iri, const Graph& graph) const {
  return lexicalize_iri(iri, graph, true, config_);
}

const LexicalEntry& Lexicalizer::property(const Iri& iri, const Graph& graph) {
  const std::string label = normalize_label(iri_name(iri, graph, config_));
  const std::string key = iri.str() + '\n' + label;
  if (auto it = properties_.find(key); it != properties_.end()) return it->second;
  LexicalEntry entry;
  try {
    entry = lexicalize_property_label(label, *lexicon_, config_);
  } catch (const LexicalizationError& e) {
    if (e.kind() != LexicalizationError::Kind::UnknownWord) throw;
    entry.lemma = entry.singular = label;
    entry.plural = pluralize(label);
    entry.pos = PartOfSpeech::NounPhrase;
    warnings_.push_back("property '" + label + "': '" + e.subject() +
                        "' is not in the lexicon; realized as a noun phrase");
  }
  return properties_.emplace(key, std::move(entry)).first->second;
}

std::string Lexicalizer::literal(const Literal& lit, const Graph& graph) const {
  return realize_literal(lit, graph, config_);
}

std::string Lexicalizer::object(const Term& term, const Graph& graph) const {
  if (const auto* iri = std::get_if<Iri>(&term)) return resource(*iri, graph).singular;
  if (const auto* lit = std::get_if<Literal>(&term)) return literal(*lit, graph);
  return std::get<Variable>(term).name();
}

}  // namespace semverb
