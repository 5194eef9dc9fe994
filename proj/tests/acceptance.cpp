// Acceptance run: one line per criterion with its pinned runtime limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "monodromy/braids.hpp"
#include "monodromy/chains.hpp"
#include "monodromy/commands.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/invariants.hpp"
#include "monodromy/surface.hpp"
#include "monodromy/twist.hpp"

using namespace monodromy;
using linalg::Int;
using linalg::IntVector;
using surface::CurveId;
using surface::Family;

namespace
{

struct Outcome
{
  bool ok = true;
  std::string detail;
};

// Collects the first few failures; everything else is counted.
class Tally
{
public:
  void check(bool cond, std::string const &what)
  {
    ++_checks;
    if (cond)
      return;
    ++_failed;
    if (_failed <= 3)
      _first += (_first.empty() ? "" : "; ") + what;
  }

  Outcome outcome(std::string const &summary) const
  {
    if (_failed == 0)
      return {true, summary + " (" + std::to_string(_checks) + " checks)"};
    return {false, std::to_string(_failed) + "/" + std::to_string(_checks) + " failed: " + _first};
  }

private:
  std::size_t _checks = 0, _failed = 0;
  std::string _first;
};

IntVector negated(IntVector v)
{
  for (auto &x : v)
    x = -x;
  return v;
}

IntVector scaled(IntVector v, Int s)
{
  for (auto &x : v)
    x *= s;
  return v;
}

surface::HomologyModel model_of(surface::CurveSystem const &sys)
{ return surface::homology_model(sys); }

// -- A1 ----------------------------------------------------------------------

Outcome a1()
{
  Tally t;
  for (int b : {2, 3, 4}) {
    auto sys = surface::build_reference_configuration(b, std::nullopt);
    auto m = model_of(sys);
    for (auto const &c : sys.crossings) {
      // orient the pair so that <x, y> = 1
      auto x = c.first, y = c.second;
      if (m.pairing(x, y) == -1)
        std::swap(x, y);
      t.check(m.pairing(x, y) == 1, "pair " + surface::to_string(x) + " " + surface::to_string(y) + " not adjacent");
      auto Tx = twist::dehn_twist(m, x, 1), Ty = twist::dehn_twist(m, y, 1);
      std::string tag = "b=" + std::to_string(b) + " " + surface::to_string(x) + "," + surface::to_string(y);
      t.check(twist::act(Tx * Ty, m.curve_class(x)) == negated(m.curve_class(y)), tag + " TxTy(x)");
      t.check(twist::act(Ty * Tx, m.curve_class(y)) == m.curve_class(x), tag + " TyTx(y)");
    }
  }
  return t.outcome("every crossing pair for b = 2, 3, 4");
}

// -- A2 ----------------------------------------------------------------------

Outcome a2()
{
  Tally t;
  for (int b : {2, 3, 4, 5}) {
    std::string tag = "b=" + std::to_string(b);
    auto search = surface::search_sigma_signs(b);
    t.check(search.accepted.has_value(), tag + " no admissible sign convention");
    if (!search.accepted)
      continue;
    auto sys = surface::build_reference_configuration(b, *search.accepted);
    auto rg = surface::ribbon_from_system(sys);
    auto walks = surface::trace_boundary(rg);
    auto topo = surface::euler_and_genus(rg);
    t.check(walks.size() == 4, tag + " boundary walks " + std::to_string(walks.size()));
    t.check(topo.genus == 4 * b - 3, tag + " genus " + std::to_string(topo.genus));

    auto m = model_of(sys);
    t.check(m.rank() == static_cast<std::size_t>(8 * b - 6), tag + " rank " + std::to_string(m.rank()));
    // the closed H_1 is the cycle lattice modulo the boundary span: torsion
    // free iff every invariant factor of the boundary matrix is 1
    auto factors = oracle::invariant_factors(m.boundaries);
    bool unit = std::all_of(factors.begin(), factors.end(), [](Int f) { return f == 1; });
    t.check(unit, tag + " torsion in H_1");
    t.check(m.curves.size() - factors.size() == m.rank(), tag + " rank against the oracle");
  }
  return t.outcome("b = 2..5");
}

// -- A3 ----------------------------------------------------------------------

Outcome a3()
{
  Tally t;
  auto sys = surface::build_reference_configuration(5, std::nullopt);
  int n = sys.chain_length();
  // the long chain delta_n .. delta_1 sigma alpha_1 .. alpha_n and the four
  // single-family chains, every window of length 1..9
  std::vector<std::vector<CurveId>> lines;
  std::vector<CurveId> longest;
  for (int i = n; i >= 1; --i)
    longest.push_back(CurveId::delta(i));
  longest.push_back(CurveId::sigma());
  for (int i = 1; i <= n; ++i)
    longest.push_back(CurveId::alpha(i));
  lines.push_back(longest);
  for (auto f : surface::chain_families) {
    std::vector<CurveId> line;
    for (int i = 1; i <= n; ++i)
      line.push_back({f, i});
    lines.push_back(line);
  }
  std::size_t windows = 0;
  for (auto const &line : lines)
    for (std::size_t len = 1; len <= 9; ++len)
      for (std::size_t s = 0; s + len <= line.size(); ++s) {
        std::vector<CurveId> seq(line.begin() + s, line.begin() + s + len);
        auto st = chains::chain_neighborhood_stats(sys, chains::validate_chain(sys, seq));
        int want = len % 2 == 1 ? 2 : 1;
        t.check(st.boundary_components == want, "length " + std::to_string(len) + " gives " +
                                                  std::to_string(st.boundary_components));
        ++windows;
      }
  return t.outcome(std::to_string(windows) + " chains in b = 5");
}

// -- A4 ----------------------------------------------------------------------

Outcome a4()
{
  Tally t;
  for (int b : {2, 3, 4}) {
    auto sys = surface::build_reference_configuration(b, std::nullopt);
    auto m = model_of(sys);
    for (auto const &f : chains::psi_factors(sys)) {
      auto const &ch = f.chain;
      std::size_t n = ch.size();
      std::vector<IntVector> cls;
      for (std::size_t i = 0; i < n; ++i)
        cls.push_back(scaled(m.curve_class(ch.curves[i]), ch.orientation[i]));
      std::string tag = "b=" + std::to_string(b) + " " + f.name;
      if (n % 2 == 1) {
        auto D = twist::word_matrix(m, chains::coxeter(ch, 1));
        for (std::size_t i = 1; i <= n; ++i) {
          Int sign = i % 2 == 1 ? 1 : -1;
          t.check(twist::act(D, cls[i - 1]) == scaled(cls[n - i], sign), tag + " position " + std::to_string(i));
        }
      } else {
        auto D2 = twist::word_matrix(m, chains::coxeter(ch, 2));
        for (std::size_t i = 0; i < n; ++i)
          t.check(twist::act(D2, cls[i]) == negated(cls[i]), tag + " position " + std::to_string(i + 1));
      }
    }
  }
  return t.outcome("chains of A1..A6 for b = 2, 3, 4");
}

// -- A5 ----------------------------------------------------------------------

Outcome a5()
{
  Tally t;
  for (int b : {2, 3}) {
    auto sys = surface::build_reference_configuration(b, surface::canonical_sigma_signs(b));
    auto m = model_of(sys);
    auto G = hurwitz::product_matrix(hurwitz::from_twist_word(m, chains::psi_factorization(sys)), m);
    auto P = twist::psi_reference(m);
    std::string tag = "b=" + std::to_string(b);
    t.check(G == P, tag + " product differs from psi");
    t.check(twist::is_symplectic(G, m), tag + " product not symplectic");
    t.check(twist::is_symplectic(P, m), tag + " psi not symplectic");
  }
  return t.outcome("b = 2, 3");
}

// -- A6 ----------------------------------------------------------------------

Outcome a6()
{
  Tally t;
  auto m = model_of(surface::build_reference_configuration(2, std::nullopt));
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> len(2, 10), moves(0, 50), depth(1, 5);
  for (int i = 0; i < 1000; ++i) {
    auto f = hurwitz::random_factorization(m, len(rng), 3, rng);
    auto s = hurwitz::random_script(f.size(), moves(rng), rng);
    auto g = hurwitz::apply_script(f, s);
    t.check(hurwitz::product_matrix(f, m) == hurwitz::product_matrix(g, m), "instance " + std::to_string(i));
  }
  auto cmp = hurwitz::homology_comparator(m);
  int found = 0;
  for (int i = 0; i < 100; ++i) {
    auto f = hurwitz::random_factorization(m, len(rng), 2, rng);
    auto s = hurwitz::random_script(f.size(), depth(rng), rng);
    auto g = hurwitz::apply_script(f, s);
    auto r = hurwitz::hurwitz_search(f, g, 5, cmp);
    bool ok = r.status == hurwitz::SearchResult::Status::found &&
              hurwitz::letterwise_equal(hurwitz::apply_script(f, *r.script), g, cmp);
    found += ok;
    t.check(ok, "planted " + std::to_string(i) + " " + r.reason);
  }
  return t.outcome("1000 scripts, planted " + std::to_string(found) + "/100");
}

// -- A7 ----------------------------------------------------------------------

Outcome a7()
{
  Tally t;
  auto r = commands::auroux({2, "XXYY", {}});
  for (auto const &c : r.checks)
    t.check(c.status == commands::Status::pass, c.name + ": " + c.details);
  t.check(r.artifact.has_value(), "no certificate");
  if (!r.artifact)
    return t.outcome("");

  // round trip through text, then replay
  auto doc = nlohmann::ordered_json::parse(r.artifact->dump());
  auto back = commands::auroux_check(doc);
  t.check(back.exit_code() == 0, "replay of the written certificate fails");

  // every core of psi among the cores of the lifted factorization
  auto sys = surface::build_reference_configuration(2, std::nullopt);
  auto m = model_of(sys);
  auto f = braids::monodromy_factorization(2, m);
  std::set<int> cores;
  for (auto const &l : f.letters)
    cores.insert(l.core.gen);
  std::size_t psi_cores = 0;
  std::set<CurveId> seen;
  for (auto const &l : chains::psi_factorization(sys))
    if (seen.insert(l.curve).second) {
      ++psi_cores;
      t.check(cores.count(hurwitz::encode(l.curve)), surface::to_string(l.curve) + " missing");
    }

  // a flipped move is caught at its own index
  auto &entries = doc["certificate"]["entries"];
  std::size_t e = 0;
  while (e < entries.size() && entries[e]["moves"].size() < 3)
    ++e;
  if (e < entries.size()) {
    auto &mv = entries[e]["moves"][2];
    mv["dir"] = mv["dir"] == "right" ? "left" : "right";
    auto bad = commands::auroux_check(doc);
    t.check(bad.exit_code() == 1, "tampered certificate accepted");
    t.check(bad.data.contains("first_bad") && bad.data["first_bad"]["entry"] == e + 1 &&
              bad.data["first_bad"]["move"] == 3,
            "tamper index not reported");
  }
  return t.outcome(std::to_string(psi_cores) + " cores of psi exposed and replayed");
}

// -- A8 ----------------------------------------------------------------------

Outcome a8()
{
  Tally t;
  using braids::BraidWord;
  for (int n = 2; n <= 7; ++n) {
    std::string tag = "n=" + std::to_string(n);
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        BraidWord l{n, {}}, r{n, {}};
        if (j == i + 1) {
          l.letters = {i, j, i};
          r.letters = {j, i, j};
        } else {
          l.letters = {i, j};
          r.letters = {j, i};
        }
        t.check(braids::braid_equal(l, r), tag + " relation " + std::to_string(i) + "," + std::to_string(j));
        t.check(oracle::artin_images(n, l.letters) == oracle::artin_images(n, r.letters),
                tag + " oracle relation");
        if (j == i + 1) {
          // adjacent generators do not commute
          BraidWord x{n, {i, j}}, y{n, {j, i}};
          t.check(!braids::braid_equal(x, y), tag + " adjacent commute");
        }
      }
      BraidWord s{n, {i}}, s_inv{n, {-i}};
      t.check(!braids::braid_equal(s, s_inv), tag + " s" + std::to_string(i) + " equals its inverse");
      t.check(oracle::artin_images(n, s.letters) != oracle::artin_images(n, s_inv.letters), tag + " oracle");
    }
  }
  for (auto [n, k] : {std::pair{4, 2}, {6, 3}, {8, 4}}) {
    auto rep = braids::verify_manfredini(n, k);
    for (auto const &c : rep.checks)
      t.check(c.ok && !c.skipped, "(" + std::to_string(n) + "," + std::to_string(k) + ") " + c.name);
  }
  return t.outcome("n <= 7 and (4,2), (6,3), (8,4)");
}

// -- A9 ----------------------------------------------------------------------

Outcome a9()
{
  Tally t;
  std::string search;
  for (int b : {2, 3}) {
    auto m = model_of(surface::build_reference_configuration(b, std::nullopt));
    auto a = braids::regeneration_factorization(m, b);
    t.check(hurwitz::product_matrix(a.mu_nu, m) == hurwitz::product_matrix(a.normal_form, m),
            "b=" + std::to_string(b) + " matrices differ");
  }
  auto r = commands::regeneration(2, 8, hurwitz::default_budget());
  for (auto const &c : r.checks) {
    t.check(c.status != commands::Status::fail, c.name + ": " + c.details);
    if (c.name == "hurwitz-search")
      search = std::string(commands::to_string(c.status)) + " (" + c.details + ")";
  }
  return t.outcome("b = 2, 3 equal on H_1; b = 2 search " + search);
}

// -- A10 ---------------------------------------------------------------------

Int chi_oracle(invariants::CoverType const &c)
{
  auto chi = [](Int x, Int y) { return (x + 1) * (y + 1); };
  return chi(0, 0) + chi(-c.a, -c.b) + chi(-c.c, -c.d) + chi(-c.a - c.c, -c.b - c.d);
}

Outcome a10()
{
  Tally t;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<Int> pick(1, 40);
  for (int i = 0; i < 10000; ++i) {
    invariants::CoverType c{pick(rng), pick(rng), pick(rng), pick(rng)};
    if (i % 4 == 0)
      c.d = c.b;
    auto s = invariants::invariants(c);
    t.check(s.chi == chi_oracle(c), "chi at sample " + std::to_string(i));
    t.check(s.K2 == 8 * (c.a + c.c - 2) * (c.b + c.d - 2), "K2 at sample " + std::to_string(i));
    if (c.d == c.b)
      t.check(s.K2 == 16 * (c.a + c.c - 2) * (c.b - 1), "d = b K2 form at sample " + std::to_string(i));
  }

  auto fam = invariants::family_enumerate(14, 8, 6, 2);
  t.check(fam.size() == 2, "family size");
  for (auto const &mem : fam) {
    t.check(mem.invariants.chi == 412 && mem.invariants.K2 == 2016 && mem.invariants.divisibility == 2,
            "family member invariants");
    t.check(mem.invariants.chi == chi_oracle(mem.type), "family member chi against the oracle");
  }

  t.check(invariants::theorem_hypotheses(14, 8, 6, 2).non_deformation(), "(14,8,6,2) should pass");
  auto f = invariants::theorem_hypotheses(10, 6, 4, 2);
  t.check(!f.conditions[0].pass && f.conditions[1].pass && f.conditions[2].pass, "(10,6,4,2) should fail I only");
  t.check(invariants::theorem_hypotheses(2, 2, 3, 2).diffeomorphism(), "(2,2,3) variant should pass");
  bool odd_k = false;
  try {
    invariants::family_enumerate(14, 8, 6, 3);
  } catch (Error const &) {
    odd_k = true;
  }
  t.check(odd_k, "odd k accepted");
  return t.outcome("10000 samples, family (14,8,6,2), hypothesis examples");
}

struct Criterion
{
  char const *id;
  double limit; // seconds
  std::function<Outcome()> run;
};

} // namespace

int main()
{
  std::vector<Criterion> const criteria{
    {"A1", 1, a1},  {"A2", 5, a2},   {"A3", 1, a3},  {"A4", 5, a4},   {"A5", 30, a5},
    {"A6", 60, a6}, {"A7", 30, a7},  {"A8", 10, a8}, {"A9", 120, a9}, {"A10", 5, a10},
  };
  int failed = 0;
  for (auto const &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit) {
      o.ok = false;
      o.detail += " (over the time limit)";
    }
    failed += !o.ok;
    std::printf("%-4s %s  %7.3fs / %gs  %s\n", c.id, o.ok ? "PASS" : "FAIL", secs, c.limit, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
