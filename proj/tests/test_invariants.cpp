#include "doctest.h"

#include <numeric>
#include <random>

#include "monodromy/errors.hpp"
#include "monodromy/invariants.hpp"

using monodromy::Error;
using monodromy::HypothesisUnmet;
using namespace monodromy::invariants;
using monodromy::invariants::invariants;

namespace
{

// chi(O) of the cover as the sum over the four eigensheaves O, O(-L1),
// O(-L2), O(-L1-L2) on P1 x P1, with chi(O(x, y)) = (x+1)(y+1).
Int chi_oracle(CoverType const &t)
{
  auto chi_p1p1 = [](Int x, Int y) { return (x + 1) * (y + 1); };
  return chi_p1p1(0, 0) + chi_p1p1(-t.a, -t.b) + chi_p1p1(-t.c, -t.d) + chi_p1p1(-t.a - t.c, -t.b - t.d);
}

// K_S is the pull-back of K + L1 + L2 = (a+c-2, b+d-2) under a degree 4 map.
Int K2_oracle(CoverType const &t) { return 4 * 2 * (t.a + t.c - 2) * (t.b + t.d - 2); }

// Riemann-Hurwitz for the fibre: a (Z/2)^2 cover of P1 branched at 2b points
// with one ramification type and 2d with the other, each point of ramification index 2.
Int genus_oracle(CoverType const &t)
{
  Int euler = 4 * 2 - 2 * (2 * t.b) - 2 * (2 * t.d);
  return (2 - euler) / 2;
}

} // namespace

TEST_CASE("invariants examples")
{
  CHECK(invariants({1, 1, 1, 1}).chi == 2);
  auto s = invariants({14, 8, 6, 8});
  CHECK(s.K2 == 2016);
  CHECK(s.chi == 412);
  CHECK(s.divisibility == 2);
  CHECK(s.fibre_genus == 4 * 8 - 3);
  CHECK_THROWS_AS(invariants({0, 1, 1, 1}), Error);
}

TEST_CASE("invariants against the eigensheaf decomposition")
{
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Int> pick(1, 20);
  for (int t = 0; t < 10000; ++t) {
    CoverType c{pick(rng), pick(rng), pick(rng), pick(rng)};
    auto s = invariants(c);
    REQUIRE(s.chi == chi_oracle(c));
    REQUIRE(s.K2 == K2_oracle(c));
    REQUIRE(s.fibre_genus == genus_oracle(c));
    if (c.d == c.b) {
      CHECK(s.K2 == 16 * (c.a + c.c - 2) * (c.b - 1));
      CHECK(s.divisibility == std::gcd(c.a + c.c - 2, 2 * c.b - 2));
      CHECK(s.fibre_genus == 4 * c.b - 3);
      CHECK(*chi_printed_variant(c) - s.chi == 3 * c.b * (c.a + c.c));
    } else {
      CHECK_FALSE(chi_printed_variant(c));
    }
  }
}

TEST_CASE("theorem hypotheses")
{
  auto r = theorem_hypotheses(14, 8, 6, 2);
  CHECK(r.non_deformation());
  CHECK(r.conditions[0].margin == 0); // c - k = 4
  CHECK(r.conditions[1].margin == 1); // 14 >= 13
  CHECK(r.conditions[2].margin == 0); // 8 >= 8

  auto f = theorem_hypotheses(10, 6, 4, 2);
  CHECK_FALSE(f.conditions[0].pass);
  CHECK(f.conditions[0].margin == -2);
  CHECK(f.conditions[1].pass);
  CHECK(f.conditions[2].pass);
  CHECK(f.failed() == std::vector<std::string>{"I"});

  CHECK(theorem_hypotheses(2, 2, 3, 2).diffeomorphism());
  CHECK_FALSE(theorem_hypotheses(2, 2, 2, 2).diffeomorphism());

  // parity alone
  auto odd = theorem_hypotheses(15, 8, 6, 2);
  CHECK_FALSE(odd.conditions[0].pass);
  CHECK(odd.conditions[0].margin >= 0);
  CHECK(odd.conditions[0].detail == "odd: a");
  // boundary of (II) and (III)
  CHECK_FALSE(theorem_hypotheses(12, 8, 6, 2).conditions[1].pass);
  CHECK_FALSE(theorem_hypotheses(14, 6, 6, 2).conditions[2].pass);
}

TEST_CASE("family enumeration")
{
  auto fam = family_enumerate(14, 8, 6, 2);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].type == CoverType{14, 8, 6, 8});
  CHECK(fam[1].type == CoverType{15, 8, 5, 8});
  for (auto const &m : fam) {
    CHECK(m.invariants == fam[0].invariants);
    CHECK(m.invariants.K2 == 16 * (m.type.a + m.type.c - 2) * (m.type.b - 1));
  }
  CHECK(fam[0].invariants.chi == 412);
  CHECK(fam[0].invariants.K2 == 2016);
  CHECK(fam[0].invariants.divisibility == 2);

  CHECK(family_enumerate(20, 12, 8, 4).size() == 3);
  CHECK_THROWS_AS(family_enumerate(14, 8, 6, 3), Error);
  CHECK_THROWS_AS(family_enumerate(10, 6, 4, 2), HypothesisUnmet);
  CHECK(family_enumerate(10, 6, 4, 2, true).size() == 2);
}

TEST_CASE("deformation dimension")
{
  CHECK(deformation_dimension(14, 8, 6) == 913);
  CHECK(deformation_dimension(1, 1, 1) == 14);
  for (Int b = 1; b < 10; ++b)
    for (Int c = 1; c < 10; ++c)
      for (Int a = 1; a < 30; ++a)
        CHECK(deformation_dimension(a + 1, b, c) > deformation_dimension(a, b, c));

  auto r = dimension_report(14, 8, 6);
  CHECK(r.M == 913);
  CHECK(r.alternative == 876);
  CHECK_FALSE(r.agree);
}
