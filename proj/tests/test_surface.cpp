#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "monodromy/errors.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/surface.hpp"

using namespace monodromy;
using namespace monodromy::surface;

namespace
{

Errc code_of(auto &&fn)
{
  try {
    fn();
  } catch (Error const &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::contract;
}

SigmaSigns const plus{1, 1, 1, 1};

} // namespace

TEST_CASE("reference configuration counts")
{
  auto sys = build_reference_configuration(2, plus);
  CHECK(sys.curves.size() == 13);
  CHECK(sys.crossings.size() == 12);

  auto const &sig = sys.incidences.at(CurveId::sigma());
  std::vector<CurveId> order;
  for (int id : sig) {
    auto const &k = sys.crossings[static_cast<std::size_t>(id)];
    order.push_back(k.first == CurveId::sigma() ? k.second : k.first);
  }
  CHECK(order == std::vector<CurveId>{CurveId::alpha(1), CurveId::beta(1),
                                      CurveId::gamma(1), CurveId::delta(1)});

  for (int b = 2; b <= 5; ++b) {
    auto s = build_reference_configuration(b, plus);
    int n = 2 * b - 1;
    CHECK(s.curves.size() == static_cast<std::size_t>(4 * n + 1));
    CHECK(s.crossings.size() == static_cast<std::size_t>(4 * (n - 1) + 4));
  }

  CHECK(code_of([] { build_reference_configuration(1, plus); }) == Errc::invalid_parameter);
}

TEST_CASE("ribbon graph shape")
{
  for (int b : {2, 3}) {
    int n = 2 * b - 1;
    auto rg = ribbon_from_system(build_reference_configuration(b, plus));
    CHECK(rg.vertices.size() == static_cast<std::size_t>(4 * n));
    CHECK(rg.edges.size() == static_cast<std::size_t>(8 * n));
    for (auto const &v : rg.vertices) {
      REQUIRE(v.rotation.size() == 4);
      auto curve = [&](int h) { return rg.edges[static_cast<std::size_t>(h / 2)].curve; };
      CHECK(curve(v.rotation[0]) == curve(v.rotation[2]));
      CHECK(curve(v.rotation[1]) == curve(v.rotation[3]));
      CHECK(curve(v.rotation[0]) != curve(v.rotation[1]));
    }
  }
}

TEST_CASE("boundary tracing and genus")
{
  auto sys = build_reference_configuration(2, plus);

  auto annulus = subsystem(sys, {CurveId::alpha(1)});
  CHECK(annulus.marked.size() == 1);
  auto rg1 = ribbon_from_system(annulus);
  CHECK(trace_boundary(rg1).size() == 2);
  auto t1 = euler_and_genus(rg1);
  CHECK(t1.euler_characteristic == 0);
  CHECK(t1.boundary_components == 2);
  CHECK(t1.genus == 0);

  auto pair = subsystem(sys, {CurveId::alpha(1), CurveId::alpha(2)});
  CHECK(trace_boundary(ribbon_from_system(pair)).size() == 1);

  auto t = euler_and_genus(ribbon_from_system(sys));
  CHECK(t.euler_characteristic == -12);
  CHECK(t.boundary_components == 4);
  CHECK(t.genus == 5);

  CHECK(euler_and_genus(ribbon_from_system(build_reference_configuration(3, plus))).genus == 9);

  // every half-edge lies on exactly one walk
  auto rg = ribbon_from_system(sys);
  std::vector<int> all;
  for (auto const &w : trace_boundary(rg))
    all.insert(all.end(), w.begin(), w.end());
  std::sort(all.begin(), all.end());
  CHECK(all.size() == static_cast<std::size_t>(rg.half_edges()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("topology for every sign convention and b = 2..5")
{
  for (int b = 2; b <= 5; ++b) {
    int const n = 2 * b - 1;
    // Riemann-Hurwitz for the 4-sheeted cover of P^1 branched in 4b points
    int const chi_cover = 4 * 2 - 4 * b * 2;
    for (int code = 0; code < 16; ++code) {
      SigmaSigns s;
      for (int k = 0; k < 4; ++k)
        s[static_cast<std::size_t>(k)] = (code >> k) & 1 ? -1 : 1;
      auto t = euler_and_genus(ribbon_from_system(build_reference_configuration(b, s)));
      CHECK(t.euler_characteristic == -4 * n);
      CHECK(t.boundary_components == 4);
      CHECK(t.genus == (2 - chi_cover) / 2);
    }
  }
}

TEST_CASE("error paths")
{
  auto sys = build_reference_configuration(2, plus);

  auto split = subsystem(sys, {CurveId::alpha(1), CurveId::gamma(1)});
  CHECK(code_of([&] { euler_and_genus(ribbon_from_system(split)); }) == Errc::must_be_connected);

  auto bare = subsystem(sys, {CurveId::alpha(1)});
  bare.marked.clear();
  CHECK(code_of([&] { ribbon_from_system(bare); }) == Errc::degenerate_curve);

  auto rg = ribbon_from_system(sys);
  std::swap(rg.vertices[0].rotation[0], rg.vertices[1].rotation[0]);
  CHECK(code_of([&] { trace_boundary(rg); }) == Errc::inconsistent_ribbon);

  auto broken = sys;
  broken.incidences[CurveId::sigma()].pop_back();
  CHECK(code_of([&] { ribbon_from_system(broken); }) == Errc::inconsistent_ribbon);
}

TEST_CASE("homology model of the reference configuration")
{
  auto sys = build_reference_configuration(2, plus);
  auto m = homology_model(sys);
  CHECK(m.rank() == 10);
  CHECK(m.curves.size() == 13);
  CHECK(oracle::rational_rank(m.boundaries) == 3);
  CHECK(m.pairing(CurveId::alpha(1), CurveId::alpha(2)) == 1);
  CHECK(m.pairing(CurveId::alpha(1), CurveId::gamma(1)) == 0);
  CHECK(m.to_quotient * m.lift == linalg::IntMatrix::identity(10));

  for (int b = 2; b <= 5; ++b) {
    auto s = build_reference_configuration(b, plus);
    auto h = homology_model(s);
    CHECK(h.rank() == static_cast<std::size_t>(8 * b - 6));
    CHECK(h.genus == 4 * b - 3);
    CHECK(h.form.transpose() == -h.form);
    CHECK(linalg::is_unimodular(h.form));
    // the ribbon form's radical is exactly the boundary span
    CHECK(oracle::rational_rank(h.ribbon_form) == h.rank());
    CHECK((h.ribbon_form * h.boundaries).is_zero());
    for (auto x : h.curves)
      for (auto y : h.curves)
        CHECK(h.pairing(x, y) == s.intersection(x, y));
  }
}

TEST_CASE("torus and chain sub-models")
{
  auto sys = build_reference_configuration(3, plus);
  auto torus = homology_model(subsystem(sys, {CurveId::beta(2), CurveId::beta(3)}));
  CHECK(torus.genus == 1);
  CHECK(torus.rank() == 2);
  CHECK(torus.pairing(CurveId::beta(2), CurveId::beta(3)) == 1);

  auto annulus = homology_model(subsystem(sys, {CurveId::sigma()}));
  CHECK(annulus.rank() == 0);
  CHECK(annulus.boundary_components == 2);
}

TEST_CASE("sigma sign search")
{
  for (int b = 2; b <= 5; ++b) {
    auto s = search_sigma_signs(b);
    CHECK(s.candidates.size() == 16);
    REQUIRE(s.accepted);
    CHECK(*s.accepted == plus);
  }
  auto sys = build_reference_configuration(2, std::nullopt);
  CHECK(sys.sigma_signs == plus);
}

TEST_CASE("curve names and serialisation")
{
  CHECK(to_string(CurveId::alpha(3)) == "alpha3");
  CHECK(to_string(CurveId::sigma()) == "sigma");
  CHECK(parse_curve("d2") == CurveId::delta(2));
  CHECK(parse_curve("gamma10") == CurveId::gamma(10));
  CHECK(parse_curve("s") == CurveId::sigma());
  CHECK(code_of([] { parse_curve("alpha0"); }) == Errc::parse);
  CHECK(code_of([] { parse_curve("x1"); }) == Errc::parse);
  CHECK(parse_sigma_signs("+,-,+,-") == SigmaSigns{1, -1, 1, -1});
  CHECK(to_string(SigmaSigns{1, -1, 1, -1}) == "+,-,+,-");

  auto sys = build_reference_configuration(2, SigmaSigns{1, -1, 1, 1});
  auto back = curve_system_from_json(to_json(sys));
  CHECK(to_json(back) == to_json(sys));

  auto rg = ribbon_from_system(sys);
  CHECK(to_json(ribbon_from_json(to_json(rg))) == to_json(rg));

  auto dot = to_dot(sys);
  CHECK(std::count(dot.begin(), dot.end(), '[') == 12 + 24);
}
