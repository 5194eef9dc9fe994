#include "monodromy/errors.hpp"

namespace monodromy
{

std::string_view to_string(Errc code)
{
  switch (code) {
  case Errc::invalid_parameter: return "invalid-parameter";
  case Errc::degenerate_curve: return "degenerate-curve";
  case Errc::inconsistent_ribbon: return "inconsistent-ribbon";
  case Errc::must_be_connected: return "must-be-connected";
  case Errc::invariant_violation: return "invariant-violation";
  case Errc::curves_not_basis: return "curves-not-basis";
  case Errc::lookup: return "lookup";
  case Errc::dimension: return "dimension";
  case Errc::overflow: return "overflow";
  case Errc::not_well_defined: return "not-well-defined";
  case Errc::chain_invalid: return "chain-invalid";
  case Errc::index_out_of_range: return "index-out-of-range";
  case Errc::cross_model: return "cross-model";
  case Errc::hypothesis_unmet: return "hypothesis-unmet";
  case Errc::contract: return "contract";
  case Errc::colour_violation: return "colour-violation";
  case Errc::parse: return "parse";
  }
  return "unknown";
}

} // namespace monodromy
