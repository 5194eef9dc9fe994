#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "monodromy/errors.hpp"
#include "monodromy/int_matrix.hpp"

using namespace monodromy;
using namespace monodromy::linalg;

namespace
{

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, Int lo, Int hi)
{
  std::uniform_int_distribution<Int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = d(rng);
  return m;
}

void check_smith(IntMatrix const &a)
{
  auto s = smith_normal_form(a);
  CHECK(s.left * a * s.right == s.diag);
  CHECK(s.left * s.left_inverse == IntMatrix::identity(a.rows()));
  CHECK(is_unimodular(s.right));

  for (std::size_t i = 0; i < s.diag.rows(); ++i)
    for (std::size_t j = 0; j < s.diag.cols(); ++j)
      if (i != j)
        CHECK(s.diag(i, j) == 0);

  auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    CHECK(f[i + 1] % f[i] == 0);
  CHECK(f == oracle::invariant_factors(a));
}

} // namespace

TEST_CASE("checked arithmetic")
{
  CHECK(add(2, 3) == 5);
  CHECK(mul(-4, 6) == -24);
  CHECK(gcd(-12, 18) == 6);
  CHECK_THROWS_AS(add(INT64_MAX, 1), Error);
  CHECK_THROWS_AS(mul(INT64_MAX / 2 + 1, 2), Error);
  CHECK_THROWS_AS(neg(INT64_MIN), Error);

  try {
    mul(INT64_MAX, 3);
  } catch (Error const &e) {
    CHECK(e.code() == Errc::overflow);
  }
}

TEST_CASE("matrix basics")
{
  IntMatrix a{{1, 2}, {3, 4}};
  IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a - a == IntMatrix(2, 2));
  CHECK(-a + a == IntMatrix(2, 2));
  IntVector v{1, 1};
  CHECK(a * std::span<Int const>(v) == IntVector{3, 7});
  CHECK_THROWS_AS(a * IntMatrix(3, 1), Error);
}

TEST_CASE("smith normal form: fixed cases")
{
  check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  check_smith(IntMatrix{{0, 0}, {0, 0}});
  check_smith(IntMatrix{{6}});
  check_smith(IntMatrix{{2, 0}, {0, 3}});
  check_smith(IntMatrix{{1, 1, 1, 1}});

  auto s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.invariant_factors() == std::vector<Int>{2, 6, 12});
  CHECK_FALSE(s.torsion_free());
}

TEST_CASE("smith normal form: random against minors oracle")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    check_smith(random_matrix(rng, r, c, -6, 6));
  }
  // sparse, rank-deficient
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(rng, 4, 3, -1, 1);
    a.set_column(2, axpy(2, a.column(0), a.column(1)));
    check_smith(a);
  }
}

TEST_CASE("unimodular inverse")
{
  IntMatrix a{{2, 1}, {1, 1}};
  CHECK(is_unimodular(a));
  CHECK(a * unimodular_inverse(a) == IntMatrix::identity(2));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
}
