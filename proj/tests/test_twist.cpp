#include <random>

#include "doctest.h"

#include "monodromy/errors.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/twist.hpp"

using namespace monodromy;
using namespace monodromy::twist;
using surface::CurveId;
using surface::Family;
using linalg::IntMatrix;
using linalg::IntVector;

namespace
{

surface::HomologyModel reference_model(int b)
{ return surface::homology_model(surface::build_reference_configuration(b, surface::SigmaSigns{1, 1, 1, 1})); }

IntVector neg(IntVector v)
{
  for (auto &x : v)
    x = -x;
  return v;
}

} // namespace

TEST_CASE("twist identities on a crossing pair")
{
  auto m = reference_model(2);
  auto a = CurveId::alpha(1), b = CurveId::alpha(2);
  REQUIRE(m.pairing(a, b) == 1);

  auto Ta = dehn_twist(m, a, 1), Tb = dehn_twist(m, b, 1);
  CHECK(act(Ta, m.curve_class(a)) == m.curve_class(a));
  CHECK(act(Ta * Tb, m.curve_class(a)) == neg(m.curve_class(b)));
  CHECK(act(Tb * Ta, m.curve_class(b)) == m.curve_class(a));

  // Picard-Lefschetz on the pair directly: T_b(a) = a - <a,b> b
  IntVector expect = m.curve_class(a);
  for (std::size_t i = 0; i < expect.size(); ++i)
    expect[i] -= m.curve_class(b)[i];
  CHECK(act(Tb, m.curve_class(a)) == expect);
}

TEST_CASE("twist matrices: group-level properties")
{
  for (int b : {2, 3}) {
    auto m = reference_model(b);
    auto I = identity(m);
    for (auto c : m.curves) {
      auto T = dehn_twist(m, c, 1), Ti = dehn_twist(m, c, -1);
      CHECK(is_symplectic(T, m));
      CHECK(is_symplectic(Ti, m));
      CHECK(T * Ti == I);
      CHECK(compose(m, {T, Ti}) == I);
    }
    for (auto x : m.curves)
      for (auto y : m.curves) {
        auto Tx = dehn_twist(m, x, 1), Ty = dehn_twist(m, y, 1);
        int meet = std::abs(m.pairing(x, y));
        if (meet == 0)
          CHECK(Tx * Ty == Ty * Tx);
        else if (meet == 1)
          CHECK(Tx * Ty * Tx == Ty * Tx * Ty);
      }
  }
}

TEST_CASE("compose and word products")
{
  auto m = reference_model(2);
  CHECK(compose(m, {}) == identity(m));
  auto T = dehn_twist(m, CurveId::sigma(), 1);
  CHECK(compose(m, {T}) == T);

  TwistWord w{{CurveId::alpha(1), 1}, {CurveId::sigma(), -1}, {CurveId::delta(2), 1}};
  auto direct = dehn_twist(m, CurveId::alpha(1), 1) * dehn_twist(m, CurveId::sigma(), -1) *
                dehn_twist(m, CurveId::delta(2), 1);
  CHECK(word_matrix(m, w) == direct);
  CHECK(word_matrix(m, w) * word_matrix(m, inverse(w)) == identity(m));
  CHECK(to_string(w) == "T_alpha1 T_sigma^-1 T_delta2");

  auto two = identity(m);
  two.matrix = two.matrix + two.matrix;
  CHECK_FALSE(is_symplectic(two, m));
  CHECK(is_symplectic(identity(m), m));
}

TEST_CASE("psi reference")
{
  for (int b : {2, 3}) {
    auto m = reference_model(b);
    auto P = psi_reference(m);
    CHECK(act(P, m.curve_class(CurveId::sigma())) == neg(m.curve_class(CurveId::sigma())));
    CHECK(act(P, m.curve_class(CurveId::alpha(1))) == neg(m.curve_class(CurveId::delta(1))));
    CHECK(act(P, m.curve_class(CurveId::gamma(2))) == neg(m.curve_class(CurveId::beta(2))));
    CHECK(P * P == identity(m));
    CHECK(is_symplectic(P, m));
    CHECK(psi_variant(m) != P);
  }

  // a sign convention that breaks the boundary relations
  auto bad = surface::homology_model(
    surface::build_reference_configuration(2, surface::SigmaSigns{1, -1, 1, 1}));
  bool threw = false;
  try {
    psi_reference(bad);
  } catch (Error const &e) {
    threw = e.code() == Errc::not_well_defined;
  }
  CHECK(threw);
}

TEST_CASE("matrix json and model fingerprints")
{
  auto m2 = reference_model(2);
  auto m3 = reference_model(3);
  CHECK(m2.fingerprint != m3.fingerprint);
  CHECK(reference_model(2).fingerprint == m2.fingerprint);

  auto T = dehn_twist(m2, CurveId::beta(3), 1);
  CHECK(matrix_from_json(to_json(T), m2) == T);
  CHECK_THROWS_AS(matrix_from_json(to_json(T), m3), Error);
  CHECK_THROWS_AS(compose(m3, {T}), Error);
  CHECK_THROWS_AS(T * dehn_twist(m3, CurveId::beta(3), 1), Error);

  TwistWord w{{CurveId::gamma(1), -1}, {CurveId::sigma(), 1}};
  CHECK(word_from_json(to_json(w)) == w);
  CHECK_THROWS_AS(dehn_twist(m2, CurveId::alpha(9), 1), Error);
}
