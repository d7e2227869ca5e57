#include "doctest.h"

#include "fixtures.hpp"
#include "ncspace/parser.hpp"

using namespace ncspace;
using testutil::load_fixture;

TEST_CASE("parse: minimal source") {
  Document doc = parse_document("field Fp 7; algebra A { gens x; rel x^2 - 3; }");
  CHECK(doc.field->characteristic() == 7);
  CHECK(doc.algebra->gens.size() == 1);
  CHECK(doc.algebra->relations.size() == 1);
  CHECK(doc.modules.empty());
}

TEST_CASE("parse: mu3 crossed-product source has 3 generators and 4 relations") {
  Document doc = load_fixture("mu3.ncs");
  CHECK(doc.algebra->gens == std::vector<std::string>{"x", "y", "g"});
  CHECK(doc.algebra->relations.size() == 4);
  CHECK(doc.algebra->central_elements.size() == 3);
  CHECK(doc.modules.size() == 9);
  // parsed algebra matches the crossed-product constructor output
  auto F = doc.field;
  GroupActionSpec spec;
  spec.field = F;
  spec.base_gens = {"x", "y"};
  spec.group_gen = "g";
  spec.order = 3;
  spec.multipliers = {F->constant("zeta"), F->constant("zeta").pow(2)};
  auto A = crossed_product(spec);
  // crossed_product emits the same relations in a different order; compare as sets
  REQUIRE(A->relations.size() == doc.algebra->relations.size());
  for (const auto& r : A->relations) {
    bool found = false;
    for (const auto& s : doc.algebra->relations)
      if (r == s || r == -s) found = true;
    CHECK(found);
  }
}

TEST_CASE("parse: zeta3 over F7 resolves to 2 (first root in enumeration order)") {
  Document doc = parse_document(
      "field Fp 7 bind zeta root_of x^2+x+1;\n"
      "algebra A { gens x; rel x - zeta; }");
  CHECK(doc.field->constant("zeta") == doc.field->from_int(2));
}

TEST_CASE("parse: zeta3 over F5 is unresolvable") {
  CHECK_THROWS_AS(parse_document("field Fp 5 bind zeta root_of x^2+x+1;\n"
                                 "algebra A { gens x; }"),
                  ConstantUnresolvable);
}

TEST_CASE("parse: syntax errors carry line and column") {
  try {
    parse_document("field Q;\nalgebra A {\n  gens x\n  rel x; }");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);  // missing ';' discovered at 'rel'
  }
  CHECK_THROWS_AS(parse_document(""), ParseError);
  CHECK_THROWS_AS(parse_document("field Q; algebra A { gens x; rel q; }"), ParseError);
}

TEST_CASE("parse: wrong-size matrix raises ShapeError") {
  CHECK_THROWS_AS(parse_document("field Q; algebra A { gens x; }\n"
                                 "module M dim 2 { x = [[1,0],[0]]; }"),
                  ShapeError);
  CHECK_THROWS_AS(parse_document("field Q; algebra A { gens x; }\n"
                                 "module M dim 3 { x = [[1,0],[0,1]]; }"),
                  ShapeError);
}

TEST_CASE("parse: declared-central generators get their commutators inserted") {
  Document doc = parse_document(
      "field Q; algebra A { gens u x y; central u; rel x*y - y*x; }");
  // commutators u*x - x*u and u*y - y*u appear beyond the explicit relation
  CHECK(doc.algebra->relations.size() == 3);
  // idempotent: relations already present are not duplicated
  Document doc2 = parse_document(
      "field Q; algebra A { gens u x; central u; rel u*x - x*u; }");
  CHECK(doc2.algebra->relations.size() == 1);
}

TEST_CASE("round trip: parse(print(P)) == P for every fixture") {
  for (const auto* name :
       {"mu3.ncs", "quad_d2_p7.ncs", "quad_d2_p5.ncs", "quad_d3_p3.ncs",
        "quad_d2_p2.ncs", "quad_d2_q.ncs", "curveord_q.ncs", "curveord_f4.ncs",
        "curveord_f3.ncs", "minimal.ncs"}) {
    Document a = load_fixture(name);
    std::string printed = print_document(a);
    Document b = parse_document(printed);
    CHECK(a.field->same_as(*b.field));
    CHECK(a.algebra->gens == b.algebra->gens);
    CHECK(a.algebra->central_gens == b.algebra->central_gens);
    REQUIRE(a.algebra->relations.size() == b.algebra->relations.size());
    for (size_t i = 0; i < a.algebra->relations.size(); ++i)
      CHECK(a.algebra->relations[i] == b.algebra->relations[i]);
    REQUIRE(a.algebra->central_elements.size() == b.algebra->central_elements.size());
    for (size_t i = 0; i < a.algebra->central_elements.size(); ++i) {
      CHECK(a.algebra->central_elements[i].first == b.algebra->central_elements[i].first);
      CHECK(a.algebra->central_elements[i].second == b.algebra->central_elements[i].second);
    }
    REQUIRE(a.modules.size() == b.modules.size());
    for (size_t i = 0; i < a.modules.size(); ++i) {
      CHECK(a.modules[i].name == b.modules[i].name);
      CHECK(a.modules[i].dim == b.modules[i].dim);
      REQUIRE(a.modules[i].mats.size() == b.modules[i].mats.size());
      for (const auto& [g, m] : a.modules[i].mats) CHECK(m == b.modules[i].mats.at(g));
    }
    // printing is deterministic
    CHECK(print_document(b) == printed);
  }
}

TEST_CASE("parse: generator may not shadow a bound constant") {
  // 't' is auto-bound to the extension generator over Qext
  CHECK_THROWS_AS(parse_document("field Qext x^2-2; algebra A { gens t; }"), ParseError);
  CHECK_THROWS_AS(parse_document("field Q bind c root_of x-3; algebra A { gens c; }"),
                  ParseError);
  // but 't' is an ordinary generator name over prime fields
  CHECK_NOTHROW(parse_document("field Fp 5; algebra A { gens t; rel t^2 - 1; }"));
}

TEST_CASE("parse: comments and whitespace are ignored") {
  Document doc = parse_document(
      "# leading comment\nfield Q;  # trailing\nalgebra A { gens x; # c\n rel x^2 - 1; }");
  CHECK(doc.algebra->relations.size() == 1);
}
