#include <doctest.h>

#include <diffgal/algnum.hpp>

using namespace diffgal;

namespace {
APoly ap(std::initializer_list<int> asc) {
  APoly p;
  int i = 0;
  for (int c : asc) p.set_coeff(i++, AlgNum(c));
  return p;
}
}  // namespace

TEST_CASE("adjoin_root basic") {
  auto tw = Tower::create();

  // linear case: no extension created
  AlgNum three = adjoin_root(tw.get(), ap({-3, 1}));
  CHECK(three == AlgNum(3));
  CHECK(tw->depth() == 0);

  // x^2 - 5
  AlgNum s5 = adjoin_root(tw.get(), ap({-5, 0, 1}));
  CHECK(tw->depth() == 1);
  CHECK(s5 * s5 == AlgNum(5));

  // golden ratio: theta^2 = theta + 1, verified by substitution; x^2 - x - 1
  // splits over Q(sqrt5), so no new level is created
  AlgNum phi = adjoin_root(tw.get(), ap({-1, -1, 1}));
  CHECK(tw->depth() == 1);
  CHECK(phi * phi - phi - AlgNum(1) == AlgNum(0));

  // adjoining x^2 - 5 again must reuse the existing root
  AlgNum s5b = adjoin_root(tw.get(), ap({-5, 0, 1}));
  CHECK(tw->depth() == 1);
  CHECK(s5b * s5b == AlgNum(5));
  CHECK((s5b == s5 || s5b == -s5));
}

TEST_CASE("tower arithmetic is exact") {
  auto tw = Tower::create();
  AlgNum s2 = adjoin_root(tw.get(), ap({-2, 0, 1}));
  AlgNum s3 = adjoin_root(tw.get(), ap({-3, 0, 1}));
  AlgNum a = (s2 + s3) * (s2 - s3);  // 2 - 3 = -1
  CHECK(a == AlgNum(-1));
  AlgNum b = AlgNum(QQ(3, 7)) * s2 + s3;
  CHECK(b + s2 - s2 == b);
  CHECK(b * b.inverse() == AlgNum(1));
  AlgNum inv = (s2 + AlgNum(1)).inverse();  // 1/(1+sqrt2) = sqrt2 - 1
  CHECK(inv == s2 - AlgNum(1));
}

TEST_CASE("embedding stability under later extensions") {
  auto tw = Tower::create();
  AlgNum s5 = adjoin_root(tw.get(), ap({-5, 0, 1}));
  AlgNum before = (s5 + AlgNum(2)).inverse();
  adjoin_root(tw.get(), ap({-7, 0, 1}));  // extend further
  AlgNum after = (s5 + AlgNum(2)).inverse();
  CHECK(before == after);
  CHECK(before * (s5 + AlgNum(2)) == AlgNum(1));
}

TEST_CASE("is_root_of_unity exact orders") {
  auto tw = Tower::create();
  CHECK(is_root_of_unity(AlgNum(1)) == 1);
  CHECK(is_root_of_unity(AlgNum(-1)) == 2);
  CHECK_FALSE(is_root_of_unity(AlgNum(2)).has_value());
  CHECK_FALSE(is_root_of_unity(AlgNum(QQ(-1, 2))).has_value());

  // primitive 6th root: x^2 - x + 1
  AlgNum z6 = adjoin_root(tw.get(), ap({1, -1, 1}));
  auto ord = is_root_of_unity(z6);
  REQUIRE(ord.has_value());
  CHECK(*ord == 6);
  CHECK(is_root_of_unity(z6 * z6) == 3);
  CHECK(is_root_of_unity(-z6) == 3);

  AlgNum golden = adjoin_root(tw.get(), ap({-1, -1, 1}));
  CHECK_FALSE(is_root_of_unity(golden).has_value());

  // order stable under embedding into a bigger tower
  adjoin_root(tw.get(), ap({-11, 0, 1}));
  CHECK(is_root_of_unity(z6) == 6);
}

TEST_CASE("factor over the tower") {
  auto tw = Tower::create();
  AlgNum s5 = adjoin_root(tw.get(), ap({-5, 0, 1}));
  // x^2 - 5 factors into linears over Q(sqrt5)
  auto f = factor_squarefree_tower(ap({-5, 0, 1}), tw.get());
  REQUIRE(f.size() == 2);
  for (auto& g : f) {
    CHECK(g.degree() == 1);
    AlgNum root = -g[0];
    CHECK(root * root == AlgNum(5));
  }
  // x^2 + 1 stays irreducible over Q(sqrt5)
  auto g = factor_squarefree_tower(ap({1, 0, 1}), tw.get());
  REQUIRE(g.size() == 1);
  CHECK(g[0].degree() == 2);
  // (x^2 - 5)(x^2 - 2): mixed split
  auto h = factor_squarefree_tower(ap({-5, 0, 1}) * ap({-2, 0, 1}), tw.get());
  REQUIRE(h.size() == 3);
}

TEST_CASE("norms") {
  auto tw = Tower::create();
  AlgNum s5 = adjoin_root(tw.get(), ap({-5, 0, 1}));
  CHECK(norm_full(s5) == QQ(-5));
  CHECK(norm_full(s5 + AlgNum(1)) == QQ(-4));  // (1+s)(1-s) = -4
  CHECK(norm_full(AlgNum(3), tw.get()) == QQ(9));  // 3^[K:Q]
}
