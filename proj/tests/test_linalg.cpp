#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cy33/linalg.hpp"

using namespace cy33;

TEST_CASE("determinant basics") {
  CHECK(det({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == Rat(1));
  CHECK(det({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
  CHECK(det({{Rat(2), Rat(3)}, {Rat(4), Rat(6)}}) == Rat(0));
  CHECK(det({{rat(1, 2), Rat(0)}, {Rat(7), rat(1, 3)}}) == rat(1, 6));
  // 3x3 with a known value.
  CHECK(det({{Rat(1), Rat(2), Rat(3)},
             {Rat(4), Rat(5), Rat(6)},
             {Rat(7), Rat(8), Rat(10)}}) == Rat(-3));
}

TEST_CASE("rank") {
  CHECK(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
  CHECK(rank({{Rat(1), Rat(0), Rat(5)}, {Rat(0), Rat(1), Rat(5)}}) == 2);
  CHECK(rank({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == 0);
}

TEST_CASE("solve and inverse") {
  QMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  auto x = solve(a, {Rat(5), Rat(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(3));

  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  QMat id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rat s(0);
      for (int k = 0; k < 2; ++k) s += a[i][k] * (*inv)[k][j];
      CHECK(s == id[i][j]);
    }

  CHECK(!solve({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(1), Rat(1)}).has_value());
  CHECK(!inverse({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).has_value());
}

TEST_CASE("nullspace") {
  // Kernel of [1 1 1] is 2-dimensional, orthogonal to (1,1,1).
  QMat k = nullspace({{Rat(1), Rat(1), Rat(1)}});
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == Rat(0));

  CHECK(nullspace({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}).empty());
}
