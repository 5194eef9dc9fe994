#include "doctest.h"
#include "oracles.hpp"

#include "monodromy/chains.hpp"
#include "monodromy/errors.hpp"

using namespace monodromy;
using namespace monodromy::chains;
using surface::CurveId;
using surface::Family;
using linalg::IntMatrix;

namespace
{

surface::SigmaSigns const plus{1, 1, 1, 1};

std::vector<CurveId> run(Family f, int from, int to)
{
  std::vector<CurveId> v;
  for (int i = from; from <= to ? i <= to : i >= to; i += from <= to ? 1 : -1)
    v.push_back({f, i});
  return v;
}

// Word product computed on curve coordinates with the degenerate ribbon form,
// then compared to the curve-level psi rule modulo the boundary span.
bool psi_matches_mod_boundaries(surface::HomologyModel const &m, twist::TwistWord const &w,
                                surface::PsiRule rule, int b)
{
  std::size_t N = m.curves.size();
  IntMatrix G = IntMatrix::identity(N);
  for (auto const &l : w) {
    std::size_t k = m.index(l.curve);
    IntMatrix T = IntMatrix::identity(N);
    for (std::size_t j = 0; j < N; ++j)
      T(k, j) -= l.sign * m.ribbon_form(j, k);
    G = G * T;
  }
  IntMatrix P(N, N);
  for (auto const &[c, img] : surface::psi_images(b, rule))
    P(m.index(img.first), m.index(c)) = img.second;
  IntMatrix D = G - P;
  std::size_t base = oracle::rational_rank(m.boundaries);
  for (std::size_t j = 0; j < N; ++j) {
    IntMatrix aug(N, m.boundaries.cols() + 1);
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < m.boundaries.cols(); ++c)
        aug(r, c) = m.boundaries(r, c);
      aug(r, m.boundaries.cols()) = D(r, j);
    }
    if (oracle::rational_rank(aug) != base)
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("chain validation")
{
  auto sys = surface::build_reference_configuration(2, plus);
  auto c = validate_chain(sys, run(Family::Alpha, 1, 3));
  CHECK(c.size() == 3);
  CHECK(c.orientation == std::vector<int>{1, 1, 1});

  try {
    validate_chain(sys, {CurveId::alpha(1), CurveId::gamma(1)});
    FAIL("expected chain-invalid");
  } catch (ChainInvalid const &e) {
    CHECK(e.index() == 1);
    CHECK(e.code() == Errc::chain_invalid);
  }

  try {
    validate_chain(sys, {CurveId::alpha(1), CurveId::alpha(2), CurveId::alpha(3), CurveId::alpha(1)});
    FAIL("expected chain-invalid");
  } catch (ChainInvalid const &e) {
    CHECK(e.index() == 3);
  }

  CHECK(validate_chain(sys, {CurveId::alpha(1), CurveId::sigma(), CurveId::beta(1), CurveId::beta(2)})
          .size() == 4);
  CHECK_THROWS_AS(validate_chain(sys, {}), ChainInvalid);
  CHECK_THROWS_AS(validate_chain(sys, {CurveId::alpha(1), CurveId::alpha(4)}), ChainInvalid);

  auto seq = run(Family::Delta, 3, 1);
  seq.push_back(CurveId::sigma());
  auto alphas = run(Family::Alpha, 1, 3);
  seq.insert(seq.end(), alphas.begin(), alphas.end());
  auto long_chain = validate_chain(sys, seq);
  for (std::size_t i = 0; i + 1 < long_chain.size(); ++i)
    CHECK(long_chain.orientation[i] * long_chain.orientation[i + 1] *
            sys.intersection(long_chain.curves[i], long_chain.curves[i + 1]) == 1);
}

TEST_CASE("coxeter words")
{
  auto sys = surface::build_reference_configuration(2, plus);
  auto one = validate_chain(sys, {CurveId::alpha(1)});
  CHECK(coxeter(one, 1) == twist::TwistWord{{CurveId::alpha(1), 1}});

  auto three = validate_chain(sys, run(Family::Alpha, 1, 3));
  auto w = coxeter(three, 1);
  CHECK(w.size() == 6);
  CHECK(w == twist::TwistWord{{CurveId::alpha(1), 1}, {CurveId::alpha(2), 1}, {CurveId::alpha(1), 1},
                              {CurveId::alpha(3), 1}, {CurveId::alpha(2), 1}, {CurveId::alpha(1), 1}});
  CHECK(coxeter(three, -1) == twist::inverse(w));
  CHECK(coxeter(three, -2).size() == 12);
  CHECK(coxeter_length(3, -2) == 12);
  CHECK_THROWS_AS(coxeter(three, 0), Error);

  auto m = surface::homology_model(sys);
  for (int p : {1, 2, 3}) {
    auto fwd = twist::word_matrix(m, coxeter(three, p));
    auto back = twist::word_matrix(m, coxeter(three, -p));
    CHECK(fwd * back == twist::identity(m));
  }
}

TEST_CASE("coxeter square on a torus is -1")
{
  auto sys = surface::build_reference_configuration(2, plus);
  auto sub = surface::subsystem(sys, {CurveId::alpha(1), CurveId::alpha(2)});
  auto torus = surface::homology_model(sub);
  REQUIRE(torus.rank() == 2);
  auto chain = validate_chain(sub, {CurveId::alpha(1), CurveId::alpha(2)});
  auto M = twist::word_matrix(torus, coxeter(chain, 2));
  CHECK(M.matrix == -IntMatrix::identity(2));
}

TEST_CASE("chain neighbourhood parity")
{
  auto sys = surface::build_reference_configuration(2, plus);
  CHECK(chain_neighborhood_stats(sys, validate_chain(sys, {CurveId::alpha(1)})).boundary_components == 2);
  CHECK(chain_neighborhood_stats(sys, validate_chain(sys, run(Family::Alpha, 1, 2))).boundary_components == 1);
  auto f = psi_factors(sys);
  REQUIRE(f[0].chain.size() == 7);
  auto st = chain_neighborhood_stats(sys, f[0].chain);
  CHECK(st.boundary_components == 2);
  CHECK(st.genus == 3);
}

TEST_CASE("psi factorization shape")
{
  auto sys = surface::build_reference_configuration(2, plus);
  auto fs = psi_factors(sys);
  REQUIRE(fs.size() == 6);
  CHECK(fs[3].name == "A4");
  CHECK(fs[3].chain.curves == std::vector<CurveId>{CurveId::alpha(3), CurveId::alpha(2)});
  CHECK(fs[3].power == -2);

  std::size_t total = 0;
  for (auto const &f : fs)
    total += coxeter_length(f.chain.size(), f.power);
  auto w = psi_factorization(2);
  CHECK(w.size() == total);
  CHECK(total == 3 * 28 + 6 + 20 + 28);
  for (auto const &l : w)
    CHECK(sys.contains(l.curve));

  // A1's letters come last: it acts first
  auto a1 = fs[0].word;
  CHECK(std::equal(a1.rbegin(), a1.rend(), w.rbegin()));
}

TEST_CASE("coxeter action on chain classes")
{
  for (int b : {2, 3}) {
    auto sys = surface::build_reference_configuration(b, plus);
    auto m = surface::homology_model(sys);
    for (auto const &f : psi_factors(sys))
      for (auto const &c : check_coxeter_action(m, f.chain))
        CHECK_MESSAGE(c.ok, f.name << " position " << c.position);
  }
}

TEST_CASE("psi as a product of six coxeter factors")
{
  for (int b : {2, 3}) {
    auto sys = surface::build_reference_configuration(b, plus);
    auto m = surface::homology_model(sys);
    auto w = psi_factorization(sys);
    auto G = twist::word_matrix(m, w);
    auto P = twist::psi_reference(m);
    CHECK(G == P);
    CHECK(twist::is_symplectic(G, m));
    CHECK(G != twist::psi_variant(m));
    CHECK(psi_matches_mod_boundaries(m, w, surface::PsiRule::reference, b));
    CHECK_FALSE(psi_matches_mod_boundaries(m, w, surface::PsiRule::relabelled, b));
  }
}
