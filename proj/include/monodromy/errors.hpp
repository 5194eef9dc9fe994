#ifndef MONODROMY_ERRORS_HPP
#define MONODROMY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monodromy
{

enum class Errc
{
  invalid_parameter,
  degenerate_curve,
  inconsistent_ribbon,
  must_be_connected,
  invariant_violation,
  curves_not_basis,
  lookup,
  dimension,
  overflow,
  not_well_defined,
  chain_invalid,
  index_out_of_range,
  cross_model,
  hypothesis_unmet,
  contract,
  colour_violation,
  parse
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what),
    _code(code)
  {}

  Errc code() const noexcept
  { return _code; }

private:
  Errc _code;
};

class ChainInvalid : public Error
{
public:
  ChainInvalid(std::size_t index, std::string const &what)
  : Error(Errc::chain_invalid, what + " (position " + std::to_string(index) + ")"),
    _index(index)
  {}

  std::size_t index() const noexcept
  { return _index; }

private:
  std::size_t _index;
};

class HypothesisUnmet : public Error
{
public:
  HypothesisUnmet(std::vector<std::string> missing, std::string const &what)
  : Error(Errc::hypothesis_unmet, what), _missing(std::move(missing))
  {}

  std::vector<std::string> const &missing() const noexcept
  { return _missing; }

private:
  std::vector<std::string> _missing;
};

} // namespace monodromy

#endif // MONODROMY_ERRORS_HPP
