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

#include "semverb/morphology.hpp"

using namespace semverb;

TEST_CASE("plurals") {
  CHECK(pluralize("person") == "people");
  CHECK(pluralize("city") == "cities");
  CHECK(pluralize("day") == "days");
  CHECK(pluralize("church") == "churches");
  CHECK(pluralize("box") == "boxes");
  CHECK(pluralize("birth place") == "birth places");
  CHECK(pluralize("child") == "children");
  CHECK(pluralize("sheep") == "sheep");
  CHECK(pluralize("square kilometre") == "square kilometres");
  CHECK(pluralize("CEO") == "CEOs");
}

TEST_CASE("indefinite article") {
  CHECK(with_indefinite_article("scientist") == "a scientist");
  CHECK(with_indefinite_article("university") == "a university");
  CHECK(with_indefinite_article("apple") == "an apple");
  CHECK(with_indefinite_article("hour") == "an hour");
  CHECK(with_indefinite_article("one-way street") == "a one-way street");
  CHECK(indefinite_article("FBI agent") == "an");
  CHECK(indefinite_article("NBA player") == "an");
  CHECK(indefinite_article("UN member") == "a");
}

TEST_CASE("identifier splitting") {
  using V = std::vector<std::string>;
  CHECK(split_identifier("birthPlace") == V{"birth", "Place"});
  CHECK(split_identifier("worksAt") == V{"works", "At"});
  CHECK(split_identifier("HTMLParser") == V{"HTML", "Parser"});
  CHECK(split_identifier("area_total2") == V{"area", "total", "2"});
  CHECK(split_underscores("Albert_Einstein") == V{"Albert", "Einstein"});
}

TEST_CASE("verb forms") {
  CHECK(third_person_singular("work") == "works");
  CHECK(third_person_singular("cross") == "crosses");
  CHECK(third_person_singular("carry") == "carries");
  CHECK(third_person_singular("play") == "plays");
  const auto bases = base_form_candidates("crosses");
  CHECK(std::find(bases.begin(), bases.end(), "cross") != bases.end());
  const auto located = base_form_candidates("located");
  CHECK(std::find(located.begin(), located.end(), "locate") != located.end());
}

TEST_CASE("small helpers") {
  CHECK(number_word(2) == "two");
  CHECK(number_word(12) == "twelve");
  CHECK(number_word(13) == "13");
  CHECK(capitalize("albert") == "Albert");
  CHECK(month_name(4) == "April");
  CHECK(is_acronym("USA"));
  CHECK_FALSE(is_acronym("Ulm"));
}
