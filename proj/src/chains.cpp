#include "monodromy/chains.hpp"

#include <set>

#include "monodromy/errors.hpp"

namespace monodromy::chains
{

using linalg::Int;
using linalg::IntVector;

Chain validate_chain(CurveSystem const &sys, std::vector<CurveId> const &seq)
{
  if (seq.empty())
    throw ChainInvalid(0, "empty chain");

  std::set<CurveId> seen;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!sys.contains(seq[i]))
      throw ChainInvalid(i, surface::to_string(seq[i]) + " is not in the configuration");
    if (!seen.insert(seq[i]).second)
      throw ChainInvalid(i, surface::to_string(seq[i]) + " repeated");
  }

  Chain chain{seq, {1}};
  for (std::size_t j = 1; j < seq.size(); ++j) {
    for (std::size_t i = 0; i + 1 < j; ++i)
      if (sys.shared_crossings(seq[i], seq[j]) != 0)
        throw ChainInvalid(j, surface::to_string(seq[i]) + " and " + surface::to_string(seq[j]) +
                                " are not consecutive but intersect");
    if (sys.shared_crossings(seq[j - 1], seq[j]) != 1)
      throw ChainInvalid(j, surface::to_string(seq[j - 1]) + " and " + surface::to_string(seq[j]) +
                              " must intersect exactly once");
    chain.orientation.push_back(chain.orientation.back() * sys.intersection(seq[j - 1], seq[j]));
  }
  return chain;
}

std::size_t coxeter_length(std::size_t n, int power)
{ return n * (n + 1) / 2 * static_cast<std::size_t>(power < 0 ? -power : power); }

TwistWord coxeter(Chain const &chain, int power)
{
  if (power == 0)
    throw Error(Errc::invalid_parameter, "Coxeter power must be non-zero");
  TwistWord delta;
  for (std::size_t j = 1; j <= chain.size(); ++j)
    for (std::size_t i = j; i-- > 0;)
      delta.push_back({chain.curves[i], 1});
  if (power < 0)
    delta = twist::inverse(delta);

  TwistWord out;
  for (int k = 0; k < (power < 0 ? -power : power); ++k)
    out.insert(out.end(), delta.begin(), delta.end());
  return out;
}

surface::Topology chain_neighborhood_stats(CurveSystem const &sys, Chain const &chain)
{ return surface::euler_and_genus(surface::ribbon_from_system(surface::subsystem(sys, chain.curves))); }

std::vector<CoxeterFactor> psi_factors(CurveSystem const &sys)
{
  using surface::Family;
  int const n = sys.chain_length();
  auto up = [&](Family f) {
    std::vector<CurveId> v;
    for (int i = 1; i <= n; ++i)
      v.push_back({f, i});
    return v;
  };
  auto down = [&](Family f) {
    auto v = up(f);
    return std::vector<CurveId>(v.rbegin(), v.rend());
  };
  auto join = [](std::vector<CurveId> a, std::vector<CurveId> const &b) {
    a.push_back(CurveId::sigma());
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  auto a_down = down(Family::Alpha);
  std::vector<std::pair<std::string, std::pair<std::vector<CurveId>, int>>> spec{
    {"A1", {join(down(Family::Delta), up(Family::Alpha)), 1}},
    {"A2", {join(down(Family::Alpha), up(Family::Beta)), 1}},
    {"A3", {join(down(Family::Beta), up(Family::Gamma)), 1}},
    {"A4", {std::vector<CurveId>(a_down.begin(), a_down.end() - 1), -2}},
    {"A5", {join(down(Family::Gamma), {}), -2}},
    {"A6", {join(down(Family::Alpha), up(Family::Gamma)), -1}},
  };

  std::vector<CoxeterFactor> out;
  for (auto const &[name, cp] : spec) {
    auto chain = validate_chain(sys, cp.first);
    out.push_back({name, chain, cp.second, coxeter(chain, cp.second)});
  }
  return out;
}

TwistWord psi_factorization(CurveSystem const &sys)
{
  auto fs = psi_factors(sys);
  TwistWord w;
  for (auto it = fs.rbegin(); it != fs.rend(); ++it)
    w.insert(w.end(), it->word.begin(), it->word.end());
  return w;
}

TwistWord psi_factorization(int b)
{ return psi_factorization(surface::build_reference_configuration(b, std::nullopt)); }

std::vector<ClassCheck> check_coxeter_action(surface::HomologyModel const &model, Chain const &chain)
{
  std::size_t const n = chain.size();
  auto oriented = [&](std::size_t i) {
    IntVector v = model.curve_class(chain.curves[i]);
    for (auto &x : v)
      x = linalg::mul(x, chain.orientation[i]);
    return v;
  };
  auto scaled = [](IntVector v, Int k) {
    for (auto &x : v)
      x = linalg::mul(x, k);
    return v;
  };

  bool odd = n % 2 == 1;
  auto M = twist::word_matrix(model, coxeter(chain, odd ? 1 : 2));
  std::vector<ClassCheck> out;
  for (std::size_t i = 0; i < n; ++i) {
    ClassCheck c;
    c.position = i + 1;
    c.actual = twist::act(M, oriented(i));
    c.expected = odd ? scaled(oriented(n - 1 - i), i % 2 == 0 ? 1 : -1) : scaled(oriented(i), -1);
    c.ok = c.actual == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace monodromy::chains
