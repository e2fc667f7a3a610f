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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "semverb/error.hpp"
#include "semverb/lexicalizer.hpp"
#include "support.hpp"

using namespace semverb;
using semverb::test::ex;
using semverb::test::lexicon;

TEST_CASE("lexicon file format") {
  const auto lex = FrequencyLexicon::parse("# c\ncross\tnoun\t12\ncross\tverb\t25\n\n");
  CHECK(lex.contains("cross"));
  CHECK(lex.frequencies("cross", PartOfSpeech::VerbPhrase).size() == 1);
  CHECK_THROWS_AS(FrequencyLexicon::parse("cross\tadjective\t1\n"), ParseError);
  CHECK_THROWS_AS(FrequencyLexicon::parse("cross\tnoun\n"), ParseError);
  CHECK_THROWS_AS(FrequencyLexicon::parse("cross\tnoun\t-3\n"), ParseError);
  CHECK_THROWS_AS(FrequencyLexicon::load("/nonexistent/lexicon.tsv"), Error);
}

TEST_CASE("ratio") {
  const double cross = (std::log2(26.0) + std::log2(8.0) + std::log2(2.0)) / (std::log2(13.0) + std::log2(3.0));
  CHECK(score_pos_ratio("cross", lexicon()) == doctest::Approx(cross).epsilon(1e-12));
  CHECK(std::isinf(score_pos_ratio("locate", lexicon())));
  CHECK(score_pos_ratio("birth", lexicon()) == 0.0);
  CHECK_THROWS_AS(score_pos_ratio("xyzzy", lexicon()), LexicalizationError);
  const auto zeros = FrequencyLexicon::parse("nil\tnoun\t0\nnil\tverb\t0\n");
  CHECK(std::isinf(score_pos_ratio("nil", zeros)));
}

TEST_CASE("property classification") {
  const LexicalizerConfig config;
  CHECK(classify_property("birth place", lexicon(), config) == PartOfSpeech::NounPhrase);
  CHECK(classify_property("influenced", lexicon(), config) == PartOfSpeech::VerbPhrase);
  CHECK(classify_property("crosses", lexicon(), config) == PartOfSpeech::VerbPhrase);
  CHECK(classify_property("works at", lexicon(), config) == PartOfSpeech::VerbPhrase);
  CHECK(classify_property("author", lexicon(), config) == PartOfSpeech::NounPhrase);
  CHECK(classify_property("name", lexicon(), config) == PartOfSpeech::NounPhrase);
  CHECK_THROWS_AS(classify_property("florp", lexicon(), config), LexicalizationError);
  LexicalizerConfig strict;
  strict.theta = 2.0;
  CHECK(classify_property("crosses", lexicon(), strict) == PartOfSpeech::NounPhrase);
}

TEST_CASE("property entries") {
  const LexicalizerConfig config;
  const auto born = lexicalize_property_label("born in", lexicon(), config);
  CHECK(born.verb_form == VerbForm::Copular);
  CHECK(born.tense == Tense::Past);
  CHECK(born.singular == "born in");
  const auto works = lexicalize_property_label("works at", lexicon(), config);
  CHECK(works.verb_form == VerbForm::Finite);
  CHECK(works.plural == "work at");
  const auto member = lexicalize_property_label("member of", lexicon(), config);
  CHECK(member.pos == PartOfSpeech::VerbPhrase);
  CHECK(member.verb_form == VerbForm::Copular);
  CHECK(member.singular == "a member of");
  CHECK(member.plural == "members of");
  const auto place = lexicalize_property_label("birth place", lexicon(), config);
  CHECK(place.plural == "birth places");
}

TEST_CASE("iri names") {
  const Graph g;
  const LexicalizerConfig config;
  const auto person = lexicalize_iri(ex("Person"), g, true, config);
  CHECK(person.singular == "person");
  CHECK(person.plural == "people");
  CHECK(lexicalize_iri(ex("Albert_Einstein"), g, false, config).singular == "Albert Einstein");
  CHECK(lexicalize_iri(Iri("http://e.org/onto#UnitedNations"), g, false, config).singular == "UnitedNations");
  CHECK(lexicalize_iri(Iri("http://e.org/x/New%20York"), g, false, config).singular == "New York");
  CHECK_THROWS_AS(iri_name(Iri("http://e.org/"), g, config), LexicalizationError);

  Graph labelled;
  labelled.add(Triple(ex("Q1"), vocab::rdfs_label(), Literal::lang_string("Douglas Adams", "en")));
  CHECK(lexicalize_iri(ex("Q1"), labelled, false, config).singular == "Douglas Adams");
}

TEST_CASE("literals") {
  const Graph g;
  CHECK(realize_literal(Literal::lang_string("Albert Einstein", "en"), g, LexicalizerConfig{}) == "Albert Einstein");
  CHECK(realize_literal(Literal("123", Iri("http://www.w3.org/2001/XMLSchema#int")), g, LexicalizerConfig{}) == "123");
  CHECK(realize_literal(Literal("123", Iri("http://dbpedia.org/datatype/squareKilometre")), g, LexicalizerConfig{}) ==
        "123 square kilometres");
  CHECK(realize_literal(Literal("1", Iri("http://dbpedia.org/datatype/squareKilometre")), g, LexicalizerConfig{}) ==
        "1 square kilometre");
  CHECK(realize_literal(Literal("1879-03-14", vocab::xsd_date()), g, LexicalizerConfig{}) == "14 March 1879");
  CHECK(realize_literal(Literal("-0044-03-15", vocab::xsd_date()), g, LexicalizerConfig{}) == "15 March 44 BC");
}

TEST_CASE("lexicalizer facade") {
  Lexicalizer lex(lexicon());
  const Graph g;
  CHECK(lex.property(ex("birthPlace"), g).pos == PartOfSpeech::NounPhrase);
  CHECK(lex.property(ex("influenced"), g).pos == PartOfSpeech::VerbPhrase);
  CHECK(lex.property(ex("quuxWibble"), g).pos == PartOfSpeech::NounPhrase);
  CHECK(lex.warnings().size() == 1);
  CHECK(lex.class_noun(ex("City"), g).plural == "cities");
  CHECK(lex.object(Term(Literal::integer(7)), g) == "7");
  LexicalizerConfig bad;
  bad.theta = 0.0;
  CHECK_THROWS_AS(Lexicalizer(lexicon(), bad), Error);
}
