#ifndef MONODROMY_TWIST_HPP
#define MONODROMY_TWIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/int_matrix.hpp"

namespace monodromy::twist
{

using surface::CurveId;
using surface::HomologyModel;

struct TwistLetter
{
  CurveId curve;
  int sign = 1;

  friend bool operator==(TwistLetter const &, TwistLetter const &) = default;
};

// Read as a product from left to right; the rightmost letter acts first.
using TwistWord = std::vector<TwistLetter>;

std::string to_string(TwistWord const &w); // "T_alpha1 T_sigma^-1 ..."
TwistWord inverse(TwistWord const &w);

/// Integer action on H_1 of the model it was built over.
struct MappingClassMatrix
{
  linalg::IntMatrix matrix;
  std::uint64_t model = 0; // fingerprint of the HomologyModel
  std::string provenance;  // optional, e.g. the word it came from

  friend bool operator==(MappingClassMatrix const &x, MappingClassMatrix const &y)
  { return x.model == y.model && x.matrix == y.matrix; }
};

MappingClassMatrix identity(HomologyModel const &model);

/// x -> x - sign <x,c> c. With <a,b> = 1 this gives T_a T_b (a) = -b and
/// T_b T_a (b) = a.
MappingClassMatrix dehn_twist(HomologyModel const &model, CurveId c, int sign);

/// Product ms[0] * ms[1] * ... ; the last one acts first.
MappingClassMatrix compose(HomologyModel const &model, std::vector<MappingClassMatrix> const &ms);
MappingClassMatrix operator*(MappingClassMatrix const &a, MappingClassMatrix const &b);

bool is_symplectic(MappingClassMatrix const &m, HomologyModel const &model);

linalg::IntVector act(MappingClassMatrix const &m, linalg::IntVector const &x);

MappingClassMatrix word_matrix(HomologyModel const &model, TwistWord const &w);

/// Homology action of the gluing involution: alpha_i <-> -delta_i,
/// beta_i <-> -gamma_i, sigma -> -sigma. not-well-defined if the rule
/// breaks the boundary relations of `model`.
MappingClassMatrix psi_reference(HomologyModel const &model);

/// The alternative labelling alpha_i <-> -beta_i, gamma_i <-> -delta_i.
MappingClassMatrix psi_variant(HomologyModel const &model);

nlohmann::ordered_json to_json(MappingClassMatrix const &m);
/// cross-model if the stored fingerprint differs from `model`'s
MappingClassMatrix matrix_from_json(nlohmann::ordered_json const &j, HomologyModel const &model);

nlohmann::ordered_json to_json(TwistWord const &w);
TwistWord word_from_json(nlohmann::ordered_json const &j);

} // namespace monodromy::twist

#endif // MONODROMY_TWIST_HPP
