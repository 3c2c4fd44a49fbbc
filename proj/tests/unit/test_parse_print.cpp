#include <doctest.h>

#include "fixtures.hpp"
#include "tenscanon/errors.hpp"
#include "tenscanon/parse.hpp"
#include "tenscanon/print.hpp"

using namespace tenscanon;

TEST_CASE("declaration parsing: statements, comments, bare types") {
  auto d = parse_declarations(R"(
    # a metric and a bare type
    indices i, j;
    tensor g(2) { sym(1,2); }
    tensor T(3);
  )");
  CHECK(d->types().size() == 2);
  auto g = d->require_type("g");
  CHECK(g->symmetries().size() == 1);
  CHECK(g->symmetries()[0].sign == 1);
  CHECK(g->identities().empty());
  CHECK(d->require_type("T")->symmetries().empty());
  CHECK(d->find_type("nope") == nullptr);
  CHECK_THROWS_AS(d->require_type("nope"), InputError);
}

TEST_CASE("declaration parsing: cyclic3 matches its explicit identity form") {
  auto d1 = parse_declarations("tensor R(4) { cyclic3(2,3,4); }");
  auto d2 = parse_declarations("tensor R(4) { identity: (1,2,3,4) + (1,4,2,3) + (1,3,4,2) = 0; }");
  const auto& i1 = d1->require_type("R")->identities().at(0);
  const auto& i2 = d2->require_type("R")->identities().at(0);
  REQUIRE(i1.terms.size() == 3);
  REQUIRE(i2.terms.size() == 3);
  for (int t = 0; t < 3; ++t) {
    CHECK(i1.terms[t].first == i2.terms[t].first);
    CHECK(i1.terms[t].second == i2.terms[t].second);
  }
}

TEST_CASE("declaration parsing: sym_pair exchanges blocks") {
  auto d = parse_declarations("tensor R(4) { sym_pair((1,2),(3,4)); }");
  const auto& s = d->require_type("R")->symmetries().at(0);
  CHECK(s.sign == 1);
  CHECK(s.perm.image_table() == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("declaration parsing: rational coefficients in identities") {
  auto d = parse_declarations("tensor P(2) { identity: (1,2) - 1/2*(2,1) - 1/2*(1,2) = 0; }");
  const auto& id = d->require_type("P")->identities().at(0);
  REQUIRE(id.terms.size() == 3);
  CHECK(id.terms[0].first == Rational(1));
  CHECK(id.terms[1].first == Rational(-1, 2));
  CHECK(id.terms[2].first == Rational(-1, 2));
}

TEST_CASE("declaration parsing: errors carry positions") {
  try {
    parse_declarations("tensor g(2) {\n  sym(1,3);\n}");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("slot 3 out of range") != std::string::npos);
    CHECK(what.find("2:") != std::string::npos);  // line 2
  }
  CHECK_THROWS_AS(parse_declarations("tensor g(0);"), InputError);
  CHECK_THROWS_AS(parse_declarations("tensor g(2) { sym(1,1); }"), InputError);
  CHECK_THROWS_AS(parse_declarations("tensor g(2) { wiggle(1,2); }"), InputError);
  CHECK_THROWS_AS(parse_declarations("tensor R(3) { identity: (1,2,3) + (1,2,2) = 0; }"),
                  InputError);
  CHECK_THROWS_AS(parse_declarations("tensor R(3) { identity: (1,2,3) = 1; }"), InputError);
  CHECK_THROWS_AS(parse_declarations("tensor g(2); tensor g(3);"), InputError);
  CHECK_THROWS_AS(parse_declarations("indices d1;"), InputError);
  CHECK_THROWS_AS(parse_declarations("indices i, i;"), InputError);
}

TEST_CASE("expression parsing: signs, coefficients, contraction") {
  auto p = fixtures::poly("-g(i,j) + 1/2*g(i,j) - 2*T(i,j)");
  CHECK(print(p) == "-1/2*g(i,j) - 2*T(i,j)");
  CHECK(fixtures::poly("0").is_zero());
  auto q = fixtures::poly("g(x,y)*T(x,y)");  // repeated names contract
  CHECK(q.monomials().front().dummy_count() == 2);
}

TEST_CASE("expression parsing: explicit pool names keep relative order") {
  auto p = fixtures::mono("T(d7,d3)*g(d3,d7)");
  // d3 < d7, so d3 -> d1, d7 -> d2 after squeezing.
  CHECK(print(p) == "g(d1,d2)*T(d2,d1)");
  // Mixed: pool names first, then by-name contractions by first occurrence,
  // so d2 -> d1 and x -> d2 (factors re-sort afterwards).
  auto m = fixtures::mono("T(x,d2)*T(d2,x)");
  CHECK(print(m) == "T(d1,d2)*T(d2,d1)");
}

TEST_CASE("expression parsing: errors") {
  auto d = fixtures::standard();
  CHECK_THROWS_AS(parse_polynomial("h(i,j)", d), InputError);        // unknown type
  CHECK_THROWS_AS(parse_polynomial("g(i)", d), InputError);          // arity
  CHECK_THROWS_AS(parse_polynomial("g(i,j) +", d), InputError);      // dangling sign
  CHECK_THROWS_AS(parse_polynomial("g(i,j) g(k,l)", d), InputError); // missing '*'
  CHECK_THROWS_AS(parse_polynomial("2/0*g(i,j)", d), InputError);    // zero denominator
  CHECK_THROWS_AS(parse_polynomial("", d), InputError);
}

TEST_CASE("round trip: parse(print(p)) == p") {
  const char* cases[] = {
      "0",
      "g(i,j)",
      "-g(i,j)",
      "1/2*Ri(a,b,c,e) - 2*Ri(b,a,c,e)",
      "Ri(d1,d2,d3,d4)*Ri(d3,d4,d1,d2)",
      "g(d1,d1)",
      "S(a,d1,d2)*T(d1,d2) + 3/7*S(d1,a,d2)*T(d2,d1)",
      "V(d1)*V(d1)*g(i,j)",
  };
  auto d = fixtures::standard();
  for (const char* text : cases) {
    CAPTURE(text);
    Polynomial p = parse_polynomial(text, d);
    Polynomial q = parse_polynomial(print(p), d);
    CHECK(p == q);
  }
}

TEST_CASE("printing: coefficient forms") {
  CHECK(print(fixtures::poly("1*g(i,j)")) == "g(i,j)");
  CHECK(print(fixtures::poly("-1*g(i,j)")) == "-g(i,j)");
  CHECK(print(fixtures::poly("3/2*g(i,j)")) == "3/2*g(i,j)");
  CHECK(print(fixtures::poly("0*g(i,j)")) == "0");
}
