#include <doctest.h>

#include "fixtures.hpp"
#include "tenscanon/errors.hpp"
#include "tenscanon/monomial.hpp"
#include "tenscanon/perm.hpp"
#include "tenscanon/polynomial.hpp"
#include "tenscanon/print.hpp"
#include "tenscanon/rational.hpp"

using namespace tenscanon;

TEST_CASE("rational arithmetic is exact and prints p/q") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half - half).is_zero());
  CHECK((half * Rational(4)).str() == "2");
  CHECK((Rational(7) / Rational(-2)).str() == "-7/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("12").str() == "12");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

TEST_CASE("index ordering: declared free < undeclared free < dummies") {
  Index a = Index::free("a", 0);
  Index b = Index::free("b", 1);
  Index z = Index::free("zeta");
  Index q = Index::free("q");
  Index d1 = Index::dummy(1);
  Index d2 = Index::dummy(2);
  CHECK(a < b);
  CHECK(b < q);   // declared before undeclared
  CHECK(q < z);   // undeclared order by spelling
  CHECK(z < d1);  // frees before dummies
  CHECK(d1 < d2);
  CHECK(d1 == Index::dummy(1));
  CHECK(d1.name() == "d1");
}

TEST_CASE("perm applies as result[i] = input[image(i)] and composes") {
  Perm p({1, 0, 2});  // swap first two slots
  std::vector<int> t{10, 20, 30};
  CHECK(p.apply(t) == std::vector<int>{20, 10, 30});
  Perm c({1, 2, 0});
  CHECK(c.apply(t) == std::vector<int>{20, 30, 10});
  // after: (c.after(p)).apply(t) == c.apply(p.apply(t))
  CHECK(c.after(p).apply(t) == c.apply(p.apply(t)));
  CHECK(c.after(c.inverse()).is_identity());
  CHECK(c.inverse().after(c).is_identity());
  CHECK_THROWS_AS(Perm({0, 0, 1}), InputError);
}

TEST_CASE("tensor type validates statements and computes slot classes") {
  auto d = fixtures::standard();
  auto ri = d->require_type("Ri");
  CHECK(ri->arity() == 4);
  // asym(1,2), asym(3,4), sym_pair((1,2),(3,4)) connect all four slots.
  CHECK(ri->slot_class() == std::vector<int>{0, 0, 0, 0});
  CHECK(ri->slot_class_count() == 1);
  auto w = d->require_type("W");  // asym(2,3) only
  CHECK(w->slot_class() == std::vector<int>{0, 1, 1});
  CHECK(w->slot_class_count() == 2);
  auto t = d->require_type("T");  // no symmetries
  CHECK(t->slot_class() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(TensorType("X", 0, 0, {}, {}), InputError);
}

TEST_CASE("monomial validates index occurrences") {
  auto d = fixtures::standard();
  CHECK_THROWS_AS(fixtures::poly("g(i,i)*g(i,j)", d), InputError);  // i three times
  CHECK_THROWS_AS(fixtures::poly("g(d1,i)", d), InputError);        // d1 only once
  CHECK_NOTHROW(fixtures::poly("g(i,i)", d));                       // trace: i -> dummy
  auto m = fixtures::mono("g(i,i)", d);
  CHECK(m.dummy_count() == 1);
  CHECK(print(m) == "g(d1,d1)");
}

TEST_CASE("monomial keeps factors sorted and the dummy pool contiguous") {
  auto m = fixtures::mono("T(j,i)*g(k,l)*V(a)");
  CHECK(print(m) == "g(k,l)*T(j,i)*V(a)");  // declaration order g < T < V
  auto m2 = fixtures::mono("T(x,y)*g(x,y)");
  CHECK(m2.dummy_count() == 2);
  CHECK(print(m2) == "g(d1,d2)*T(d1,d2)");
}

TEST_CASE("einstein product contracts shared free indices") {
  auto a = fixtures::mono("V(i)");
  auto b = fixtures::mono("V(i)");
  auto p = Monomial::product(a, b);
  CHECK(p.dummy_count() == 1);
  CHECK(print(p) == "V(d1)*V(d1)");

  auto c = fixtures::mono("2*g(i,d1)*T(d1,j)");
  auto e = fixtures::mono("3*V(j)");
  auto q = Monomial::product(c, e);
  CHECK(q.coeff() == Rational(6));
  CHECK(q.dummy_count() == 2);
  // j contracts to a fresh dummy d2; i stays free.
  CHECK(print(q) == "6*g(i,d1)*T(d1,d2)*V(d2)");
}

TEST_CASE("polynomial merges terms and rejects mixed free sets") {
  auto p = fixtures::poly("g(i,j) + g(i,j)");
  CHECK(p.term_count() == 1);
  CHECK(print(p) == "2*g(i,j)");
  CHECK(fixtures::poly("g(i,j) - g(i,j)").is_zero());
  CHECK_THROWS_AS(fixtures::poly("g(i,j) + g(i,k)"), InputError);
  auto scaled = p * Rational(1, 2);
  CHECK(print(scaled) == "g(i,j)");
}

TEST_CASE("polynomial einstein product distributes") {
  auto p = fixtures::poly("V(i) + 2*T(i,j)*V(j)");
  auto q = fixtures::poly("V(i)");
  auto prod = p * q;
  CHECK(prod.term_count() == 2);
  CHECK(prod.free_indices().empty());
  CHECK(print(prod) == "2*T(d2,d1)*V(d1)*V(d2) + V(d1)*V(d1)");
}
