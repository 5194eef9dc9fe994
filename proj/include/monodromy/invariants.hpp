#ifndef MONODROMY_INVARIANTS_HPP
#define MONODROMY_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/int_matrix.hpp"

namespace monodromy::invariants
{

using linalg::Int;

/// Simple bidouble cover of P1 x P1 branched on curves of bidegrees
/// (2a, 2b) and (2c, 2d).
struct CoverType
{
  Int a = 1, b = 1, c = 1, d = 1;

  friend bool operator==(CoverType const &, CoverType const &) = default;
};

void validate(CoverType const &t); // invalid-parameter unless all positive

struct SurfaceInvariants
{
  Int chi = 0; // holomorphic Euler characteristic
  Int K2 = 0;
  Int divisibility = 0; // of the canonical class
  Int fibre_genus = 0;  // fibre over the first factor

  friend bool operator==(SurfaceInvariants const &, SurfaceInvariants const &) = default;
};

/// n = 2a + 2c, m = 2b + 2d; chi = ((n-4)(m-4) + 4(ab + cd)) / 4,
/// K^2 = 2(n-4)(m-4), divisibility gcd(a+c-2, b+d-2), genus 2b + 2d - 3.
SurfaceInvariants invariants(CoverType const &t);

/// The closed form 2(a+c-2)(b-1) + 4b(a+c) for chi in the d = b case. It
/// disagrees with invariants().chi by 3b(a+c); reported, never used.
std::optional<Int> chi_printed_variant(CoverType const &t);

struct Condition
{
  std::string name;
  bool pass = false;
  Int margin = 0; // smallest lhs - rhs over the condition's inequalities
  std::string detail;
};

struct HypothesisReport
{
  Int a = 0, b = 0, c = 0, k = 0;
  std::vector<Condition> conditions; // I, II, III, diffeomorphism

  bool non_deformation() const; // I, II and III
  bool diffeomorphism() const;
  std::vector<std::string> failed() const;
};

/// (I) a, b, c, k even and positive with a, b, c - k >= 4; (II) a >= 2c + 1;
/// (III) b >= c + 2; and separately a, b, c - 1 >= 2.
HypothesisReport theorem_hypotheses(Int a, Int b, Int c, Int k);

struct FamilyMember
{
  CoverType type;
  SurfaceInvariants invariants;
};

/// The h = k/2 + 1 covers of types ((2a + 2i, 2b), (2c - 2i, 2b)).
/// invalid-parameter for odd or non-positive k; hypothesis-unmet when the
/// hypotheses fail unless `force`; invariant-violation if the members'
/// invariants differ.
std::vector<FamilyMember> family_enumerate(Int a, Int b, Int c, Int k, bool force = false);

/// (b+1)(4a+c+3) + 2b(a+c+1) - 8
Int deformation_dimension(Int a, Int b, Int c);

struct DimensionReport
{
  Int M = 0;
  Int alternative = 0; // 3/2 alpha beta + alpha + beta + 3b(a+1), alpha = a+c, beta = 2b
  bool agree = false;
};

DimensionReport dimension_report(Int a, Int b, Int c);

nlohmann::ordered_json to_json(CoverType const &t);
nlohmann::ordered_json to_json(SurfaceInvariants const &s);
nlohmann::ordered_json to_json(HypothesisReport const &r);
nlohmann::ordered_json to_json(DimensionReport const &r);

} // namespace monodromy::invariants

#endif // MONODROMY_INVARIANTS_HPP
