#ifndef MONODROMY_HOMOLOGY_HPP
#define MONODROMY_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/int_matrix.hpp"
#include "monodromy/surface.hpp"

namespace monodromy::surface
{

/// H_1 of the closed surface obtained by capping the ribbon surface.
///
/// Curve coordinates: the curves form a basis of the cycle lattice of the
/// ribbon graph, so a cycle is a vector indexed by `curves`. Boundary walks
/// span the kernel of the capping map and the quotient by them is H_1 of
/// the closed surface, presented in the basis chosen by Smith reduction.
struct HomologyModel
{
  std::vector<CurveId> curves;

  linalg::IntMatrix ribbon_form; // N x N, curve coordinates, degenerate
  linalg::IntMatrix boundaries;  // N x F, one column per boundary walk
  linalg::IntMatrix to_quotient; // r x N
  linalg::IntMatrix lift;        // N x r, to_quotient * lift = 1
  linalg::IntMatrix form;        // r x r, unimodular and antisymmetric

  int genus = 0;
  int boundary_components = 0;
  std::uint64_t fingerprint = 0;

  std::size_t rank() const { return form.rows(); }
  std::size_t index(CurveId c) const; // throws lookup
  bool has(CurveId c) const;

  linalg::IntVector curve_class(CurveId c) const;
  linalg::Int pairing(linalg::IntVector const &x, linalg::IntVector const &y) const;
  linalg::Int pairing(CurveId x, CurveId y) const;

  // quotient matrix of a curve-coordinate map; not-well-defined if it
  // does not preserve the boundary span
  linalg::IntMatrix descend(linalg::IntMatrix const &curve_map) const;
};

/// Builds the model. Errors: curves-not-basis if the curves do not form a
/// basis of the cycle lattice, invariant-violation on torsion or on a
/// degenerate closed form.
HomologyModel homology_model(RibbonGraph const &rg);

inline HomologyModel homology_model(CurveSystem const &sys)
{ return homology_model(ribbon_from_system(sys)); }

// c -> sign * image
using CurveImages = std::map<CurveId, std::pair<CurveId, int>>;

enum class PsiRule
{
  reference,  // alpha_i <-> -delta_i, beta_i <-> -gamma_i, sigma -> -sigma
  relabelled  // alpha_i <-> -beta_i, gamma_i <-> -delta_i, sigma -> -sigma
};

CurveImages psi_images(int b, PsiRule rule);

/// Quotient matrix of a signed curve permutation.
linalg::IntMatrix induced_map(HomologyModel const &model, CurveImages const &images);

struct SignCandidate
{
  SigmaSigns signs{};
  bool admissible = false;
  std::string reason;
};

struct SignSearch
{
  std::vector<SignCandidate> candidates; // in search order
  std::optional<SigmaSigns> accepted;    // first admissible candidate
};

/// Tries all 16 sigma-sign tuples, + before -, first coordinate slowest.
/// Admissible: 4 boundary walks, genus 4b-3, torsion-free H_1 of rank
/// 8b-6, and the reference psi well defined, symplectic and an involution.
SignSearch search_sigma_signs(int b);

/// First admissible tuple; invariant-violation if there is none.
SigmaSigns canonical_sigma_signs(int b);

nlohmann::ordered_json to_json(HomologyModel const &model);

} // namespace monodromy::surface

#endif // MONODROMY_HOMOLOGY_HPP
