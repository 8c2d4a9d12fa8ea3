#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "homsuper/graded.hpp"

using namespace homsuper;

TEST_CASE("parity arithmetic and pair signs") {
  CHECK(Parity::Even + Parity::Odd == Parity::Odd);
  CHECK(Parity::Odd + Parity::Odd == Parity::Even);
  CHECK(koszul_pair_sign(Parity::Odd, Parity::Odd) == -1);
  CHECK(koszul_pair_sign(Parity::Even, Parity::Odd) == 1);
}

TEST_CASE("graded maps enforce evenness") {
  GradedBasis b({"e", "f"}, {Parity::Even, Parity::Odd});
  Mat bad = Mat::Zero(2, 2);
  bad(1, 0) = 1;  // sends even to odd
  CHECK_THROWS_AS(GradedMap(bad, b, b), std::invalid_argument);
  Mat good = Mat::Zero(2, 2);
  good(0, 0) = 2;
  good(1, 1) = Rat(1, 3);
  GradedMap m(good, b, b);
  CHECK(m.pow(2).matrix()(1, 1) == Rat(1, 9));
  CHECK(m.pow(-1).matrix()(1, 1) == 3);
  CHECK(m.pow(0).matrix() == Mat(Mat::Identity(2, 2)));
  Mat sing = Mat::Zero(2, 2);
  CHECK_THROWS_AS(GradedMap(sing, b, b).pow(-1), std::domain_error);
}

TEST_CASE("koszul sign matches explicit adjacent-transposition counting") {
  std::vector<Parity> p{Parity::Odd, Parity::Odd, Parity::Even};
  // swapping two odd arguments contributes -(-1)^{1*1} = +1
  CHECK(koszul_sign(p, {1, 0, 2}) == 1);
  // swapping odd with even contributes -(-1)^0 = -1
  CHECK(koszul_sign(p, {0, 2, 1}) == -1);
  CHECK(koszul_sign(p, {0, 1, 2}) == 1);
}

TEST_CASE("tuple canonicalization kills repeated even indices and sorts") {
  std::vector<Parity> p{Parity::Even, Parity::Odd, Parity::Odd};
  CanonicalTuple t = canonicalize_tuple({2, 1}, p);
  CHECK(!t.zero);
  CHECK(t.indices == std::vector<int>{1, 2});
  CHECK(t.sign == 1);  // swapping two odds: -(-1) = +1
  CHECK(canonicalize_tuple({0, 0}, p).zero);
  CHECK(!canonicalize_tuple({1, 1}, p).zero);  // odd squares survive
  CanonicalTuple u = canonicalize_tuple({1, 0}, p);
  CHECK(u.indices == std::vector<int>{0, 1});
  CHECK(u.sign == -1);
}

TEST_CASE("canonical tuples enumerate nondecreasing with strict evens") {
  std::vector<Parity> p{Parity::Even, Parity::Odd, Parity::Odd};
  auto ts = canonical_tuples(p, 2);
  std::vector<std::vector<int>> expect{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  CHECK(ts == expect);
  CHECK(canonical_tuples(p, 0) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("cochain tables evaluate super-alternating extensions") {
  std::vector<Parity> p{Parity::Even, Parity::Odd};
  CochainTable f(2, p, p, Parity::Even);
  Vec val = Vec::Unit(2, 1);
  f.set({0, 1}, val);  // even+odd argument, odd value: parity checks out
  CHECK(f.eval({0, 1}) == val);
  CHECK(f.eval({1, 0}) == Vec(-val));
  CHECK(f.eval({0, 0}).isZero());
  Vec x(2), y(2);
  x << 2, 3;
  y << Rat(1, 2), -1;
  // bilinear: f(x,y) = (2*(-1) - 3*(1/2)) * val on the (0,1) slot
  CHECK(f.eval_vectors({x, y}) == Vec((Rat(-2) - Rat(3, 2)) * val));
  CHECK_THROWS_AS(f.set({0, 0}, val), std::invalid_argument);  // zero marker slot
  CochainTable g = f;
  g *= Rat(2);
  CHECK((g - f) == f);
  CHECK(!f.is_zero());
  auto tuples = canonical_tuples(p, 2);
  Vec coords = f.coordinates(tuples);
  CHECK(coords.size() == static_cast<Eigen::Index>(tuples.size()) * 2);
}

TEST_CASE("parity-violating table values are rejected") {
  std::vector<Parity> p{Parity::Even, Parity::Odd};
  CochainTable f(1, p, p, Parity::Even);
  CHECK_THROWS_AS(f.set({0}, Vec(Vec::Unit(2, 1))), std::invalid_argument);
  CHECK_NOTHROW(f.set({0}, Vec(Vec::Unit(2, 0))));
}

TEST_CASE("dual basis stars names and keeps parities") {
  GradedBasis b({"e", "f"}, {Parity::Even, Parity::Odd});
  GradedBasis d = b.dual();
  CHECK(d.name(0) == "e*");
  CHECK(d.parity(1) == Parity::Odd);
}
