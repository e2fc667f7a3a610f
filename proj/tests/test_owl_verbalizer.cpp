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

#include "semverb/error.hpp"
#include "semverb/owl_verbalizer.hpp"
#include "semverb/parsers.hpp"
#include "support.hpp"

using namespace semverb;

namespace {

std::string phrase(const std::string& manchester, OwlOptions options = OwlOptions{}) {
  Lexicalizer lex(test::lexicon());
  return verbalize_ce(parse_class_expression(manchester), Graph(), lex, options).text();
}

std::vector<std::string> sentences(const std::string& manchester) {
  Lexicalizer lex(test::lexicon());
  return verbalize_axioms(parse_manchester(manchester), Graph(), lex);
}

}  // namespace

TEST_CASE("post-order phrases") {
  CHECK(phrase("City") == "everything that is a city");
  CHECK(phrase("locatedIn value France") == "everything that is located in France");
  CHECK(phrase("City and locatedIn value France") == "cities that are located in France");
  CHECK(phrase("birthPlace some City") == "everything whose birth place is a city");
  CHECK(phrase("birthPlace some (City and locatedIn value France)") ==
        "everything whose birth place is a city that is located in France");
  CHECK(phrase("Person and birthPlace some (City and locatedIn value France)") ==
        "people whose birth place is a city that is located in France");
}

TEST_CASE("placeholder kept without specialization") {
  OwlOptions plain;
  plain.specialize = false;
  CHECK(phrase("City and locatedIn value France", plain) == "everything that is a city and located in France");
}

TEST_CASE("phrase metadata") {
  Lexicalizer lex(test::lexicon());
  const CEPhrase p = verbalize_ce(parse_class_expression("City and locatedIn value France"), Graph(), lex);
  CHECK(p.placeholder == CEPhrase::Placeholder::SpecializedNoun);
  CHECK(p.noun == "cities");
  CHECK(p.number == Number::Plural);
}

TEST_CASE("other constructors") {
  CHECK(phrase("City or Country") == "everything that is a city or a country");
  CHECK(phrase("not City") == "everything that is not a city");
  CHECK(phrase("worksAt only University") == "everything that works at only universities");
  CHECK(phrase("author min 2") == "everything that has at least two authors");
  CHECK(phrase("author exactly 1") == "everything that has exactly one author");
  CHECK(phrase("influenced max 3") == "everything that influenced at most three things");
  CHECK(phrase("{Ulm, Boston}") == "everything that is one of Ulm and Boston");
  CHECK(phrase("influenced value Nathan_Rosen") == "everything that influenced Nathan Rosen");
}

TEST_CASE("non-functional noun properties") {
  OwlOptions options;
  options.functional_noun_properties = false;
  CHECK(phrase("author some Writer", options) == "everything whose authors include a writer");
}

TEST_CASE("depth limit") {
  std::string deep = "City";
  for (int i = 0; i < 70; ++i) deep = "locatedIn some (" + deep + ")";
  CHECK_THROWS_AS(phrase(deep), Unsupported);
}

TEST_CASE("axioms") {
  using V = std::vector<std::string>;
  CHECK(sentences("Class: Scientist SubClassOf: Person") == V{"Every scientist is a person."});
  CHECK(sentences("Class: Professor SubClassOf: worksAt some University") == V{"Every professor works at a university."});
  CHECK(sentences("Individual: Albert_Einstein\n Types: Person\n Facts: birthPlace Ulm, birthDate \"1879-03-14\"^^xsd:date") ==
        V{"Albert Einstein is a person whose birth place is Ulm and whose birth date is 14 March 1879."});
  CHECK(sentences("Individual: Albert_Einstein\n Facts: birthPlace Ulm, influenced Nathan_Rosen") ==
        V{"Albert Einstein's birth place is Ulm.", "Albert Einstein influenced Nathan Rosen."});
  CHECK(sentences("Class: Parisian SubClassOf: Person and birthPlace value Paris") ==
        V{"Every parisian is a person whose birth place is Paris."});
  CHECK(sentences("Class: Thinker SubClassOf: influenced some Person") ==
        V{"Every thinker influenced a person."});
}

TEST_CASE("closed-world evaluation") {
  const Graph g = parse_turtle(
      ":Paris a :City ; :locatedIn :France .\n"
      ":Lyon a :City ; :locatedIn :France .\n"
      ":Ulm a :City ; :locatedIn :Germany .\n"
      ":Marie a :Person ; :birthPlace :Paris .\n"
      ":Albert a :Person ; :birthPlace :Ulm .\n");
  const auto ce = parse_class_expression("Person and birthPlace some (City and locatedIn value France)");
  CHECK(evaluate_ce(ce, g, test::ex("Marie")));
  CHECK_FALSE(evaluate_ce(ce, g, test::ex("Albert")));
  CHECK(evaluate_ce(parse_class_expression("locatedIn exactly 1"), g, test::ex("Ulm")));
  CHECK(evaluate_ce(parse_class_expression("birthPlace only City"), g, test::ex("Paris")));
  CHECK(evaluate_ce(parse_class_expression("not Person"), g, test::ex("Paris")));
  CHECK(evaluate_ce(parse_class_expression("{Paris, Lyon}"), g, test::ex("Lyon")));
}
