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
#include "semverb/parsers.hpp"

using namespace semverb;

namespace {

Iri ex(const std::string& local) { return Iri("http://example.org/" + local); }

template <typename F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError(0, 0, "", "");
}

}  // namespace

TEST_SUITE("turtle") {
  TEST_CASE("single triple with the empty prefix") {
    const Graph g = parse_turtle(":Albert_Einstein :birthPlace :Ulm .");
    REQUIRE(g.size() == 1);
    CHECK(g.triples()[0] == Triple(ex("Albert_Einstein"), ex("birthPlace"), ex("Ulm")));
  }

  TEST_CASE("typed literal split over lines") {
    const Graph g = parse_turtle(":W :deathDate\n\"1616-04-23\"^^xsd:date .");
    REQUIRE(g.size() == 1);
    CHECK(g.triples()[0].object() == Term(Literal("1616-04-23", vocab::xsd_date())));
  }

  TEST_CASE("abbreviations, numbers and directives") {
    const Graph g = parse_turtle(
        "@prefix e: <http://e.org/> .\n"
        "PREFIX f: <http://f.org/>\n"
        "e:a a e:C ; e:p 12, -1.5, true ; f:q \"x\"@en-GB .\n");
    REQUIRE(g.size() == 5);
    CHECK(g.triples()[0].predicate() == vocab::rdf_type());
    CHECK(g.triples()[1].object() == Term(Literal("12", vocab::xsd_integer())));
    CHECK(g.triples()[2].object() == Term(Literal("-1.5", vocab::xsd_decimal())));
    CHECK(g.triples()[3].object() == Term(Literal("true", vocab::xsd_boolean())));
    CHECK(g.triples()[4].object() == Term(Literal::lang_string("x", "en-GB")));
  }

  TEST_CASE("errors carry positions") {
    const ParseError e = parse_error([] { parse_turtle(":a :b\n  ."); });
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK_THROWS_AS(parse_turtle(":a :b :c"), ParseError);
    CHECK_THROWS_AS(parse_turtle("zz:a :b :c ."), ParseError);
    CHECK_THROWS_AS(parse_turtle(":a :b \"open ."), ParseError);
  }

  TEST_CASE("blank nodes, collections and base are unsupported") {
    CHECK_THROWS_AS(parse_turtle("_:x :p :o ."), Unsupported);
    CHECK_THROWS_AS(parse_turtle(":s :p [ :q :o ] ."), Unsupported);
    CHECK_THROWS_AS(parse_turtle(":s :p ( :a :b ) ."), Unsupported);
    CHECK_THROWS_AS(parse_turtle("@base <http://x/> ."), Unsupported);
  }

  TEST_CASE("serialize and reparse") {
    const Graph g = parse_turtle(":a :p \"q\\\"uote\"@en ; :r 3 ; a :C .");
    const Graph back = parse_turtle(serialize_turtle(g));
    CHECK(back.triples() == g.triples());
  }
}

TEST_SUITE("manchester") {
  TEST_CASE("subclass frame") {
    const auto axioms = parse_manchester("Class: Scientist SubClassOf: Person");
    REQUIRE(axioms.size() == 1);
    const auto& sub = std::get<SubClassOf>(axioms[0]);
    CHECK(sub.sub == ClassExpression::atomic(ex("Scientist")));
    CHECK(sub.sup == ClassExpression::atomic(ex("Person")));
  }

  TEST_CASE("expression precedence and nesting") {
    const auto ce = parse_class_expression("Person AND worksAt SOME (University AND locatedIn VALUE Spain)");
    const auto expected = ClassExpression::conjunction(
        {ClassExpression::atomic(ex("Person")),
         ClassExpression::some(ex("worksAt"),
                               ClassExpression::conjunction({ClassExpression::atomic(ex("University")),
                                                             ClassExpression::value(ex("locatedIn"), ex("Spain"))}))});
    CHECK(ce == expected);
    CHECK(parse_class_expression("not A or B and C").kind() == ClassExpression::Kind::Or);
    CHECK(parse_class_expression("p min 2").cardinality() == 2);
    CHECK(parse_class_expression("{a, b}").individuals().size() == 2);
  }

  TEST_CASE("individual frame") {
    const auto axioms = parse_manchester(
        "Individual: Albert_Einstein\n  Types: Person\n  Facts: birthPlace Ulm, birthDate \"1879-03-14\"^^xsd:date\n");
    REQUIRE(axioms.size() == 3);
    CHECK(std::holds_alternative<ClassAssertion>(axioms[0]));
    const auto& fact = std::get<PropertyAssertion>(axioms[2]);
    CHECK(fact.object == Term(Literal("1879-03-14", vocab::xsd_date())));
  }

  TEST_CASE("errors") {
    const ParseError e = parse_error([] { parse_manchester("Class: A\n  SubClassOf: B and"); });
    CHECK(e.line() == 2);
    CHECK_THROWS_AS(parse_manchester("Class: A SubClassOf: p some"), ParseError);
    CHECK_THROWS_AS(parse_manchester("ObjectProperty: p"), Unsupported);
    CHECK_THROWS_AS(parse_class_expression("p min -1"), ParseError);
  }
}

TEST_SUITE("sparql") {
  TEST_CASE("listing query") {
    const SparqlSelect q = parse_sparql("SELECT ?person\nWHERE {\n  ?person a dbo:Scientist;\n    dbo:birthPlace dbr:Ulm.\n}");
    REQUIRE(q.projection.size() == 1);
    CHECK(q.projection[0].name() == "person");
    REQUIRE(q.body.size() == 2);
    CHECK(q.body[0].predicate() == Term(vocab::rdf_type()));
    CHECK(q.body[1].object() == Term(Iri("http://dbpedia.org/resource/Ulm")));
  }

  TEST_CASE("modifiers and optionals") {
    const SparqlSelect q =
        parse_sparql("SELECT DISTINCT ?x WHERE { ?x a :C OPTIONAL { ?x :p ?y } } ORDER BY DESC(?y) LIMIT 7");
    CHECK(q.distinct);
    REQUIRE(q.optionals.size() == 1);
    REQUIRE(q.order_by);
    CHECK(q.order_by->descending);
    CHECK(q.limit == std::optional<std::size_t>(7));
  }

  TEST_CASE("out-of-subset constructs are located") {
    try {
      parse_sparql("SELECT ?x WHERE {\n ?x a :C .\n FILTER(?x) }");
      FAIL("expected Unsupported");
    } catch (const Unsupported& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 2);
    }
    CHECK_THROWS_AS(parse_sparql("ASK { ?x a :C }"), Unsupported);
    CHECK_THROWS_AS(parse_sparql("SELECT * WHERE { ?x a :C }"), Unsupported);
    CHECK_THROWS_AS(parse_sparql("SELECT ?x WHERE { ?x :p/:q ?y }"), Unsupported);
    CHECK_THROWS_AS(parse_sparql("SELECT ?x WHERE { { ?x a :C } UNION { ?x a :D } }"), Unsupported);
  }

  TEST_CASE("syntax errors") {
    CHECK_THROWS_AS(parse_sparql("SELECT ?x WHERE { ?x a :C"), ParseError);
    CHECK_THROWS_AS(parse_sparql("SELECT ?y WHERE { ?x a :C }"), ParseError);
    CHECK_THROWS_AS(parse_sparql("SELECT ?x WHERE { ?x a :C } LIMIT x"), ParseError);
  }
}
