#ifndef MONODROMY_CHAINS_HPP
#define MONODROMY_CHAINS_HPP

#include <string>
#include <vector>

#include "monodromy/homology.hpp"
#include "monodromy/surface.hpp"
#include "monodromy/twist.hpp"

namespace monodromy::chains
{

using surface::CurveId;
using surface::CurveSystem;
using twist::TwistWord;

/// Consecutive curves meet once, others not at all. `orientation[i]` is the
/// sign to put on curve i so that consecutive oriented classes pair to +1;
/// the first entry is always +1.
struct Chain
{
  std::vector<CurveId> curves;
  std::vector<int> orientation;

  std::size_t size() const { return curves.size(); }
};

/// Throws ChainInvalid carrying the position of the first offending curve.
Chain validate_chain(CurveSystem const &sys, std::vector<CurveId> const &seq);

/// Delta^power with Delta = (T_1)(T_2 T_1)...(T_n ... T_1); negative powers
/// repeat the inverse word. power 0 is invalid-parameter.
TwistWord coxeter(Chain const &chain, int power);

std::size_t coxeter_length(std::size_t n, int power);

surface::Topology chain_neighborhood_stats(CurveSystem const &sys, Chain const &chain);

struct CoxeterFactor
{
  std::string name; // "A1" .. "A6"
  Chain chain;
  int power = 1;
  TwistWord word;
};

/// A1..A6 in that order (A1 acts first).
std::vector<CoxeterFactor> psi_factors(CurveSystem const &sys);

/// Concatenation A6 A5 A4 A3 A2 A1 as one word.
TwistWord psi_factorization(CurveSystem const &sys);
TwistWord psi_factorization(int b);

struct ClassCheck
{
  std::size_t position = 0; // 1-based along the chain
  linalg::IntVector expected;
  linalg::IntVector actual;
  bool ok = false;
};

/// Odd chains: Delta(e_i c_i) = (-1)^(i+1) e_j c_j with j = n+1-i.
/// Even chains: Delta^2(c_i) = -c_i. Uses oriented classes e_i c_i.
std::vector<ClassCheck> check_coxeter_action(surface::HomologyModel const &model, Chain const &chain);

} // namespace monodromy::chains

#endif // MONODROMY_CHAINS_HPP
