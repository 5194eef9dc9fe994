#ifndef MONODROMY_SURFACE_HPP
#define MONODROMY_SURFACE_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace monodromy::surface
{

enum class Family { Alpha, Beta, Gamma, Delta, Sigma };

struct CurveId
{
  Family family = Family::Sigma;
  int index = 0; // 1-based; 0 for sigma

  static CurveId sigma() { return {Family::Sigma, 0}; }
  static CurveId alpha(int i) { return {Family::Alpha, i}; }
  static CurveId beta(int i) { return {Family::Beta, i}; }
  static CurveId gamma(int i) { return {Family::Gamma, i}; }
  static CurveId delta(int i) { return {Family::Delta, i}; }

  auto operator<=>(CurveId const &) const = default;
};

// "alpha3", "sigma", ...; parse also accepts the short forms "a3", "s".
std::string to_string(CurveId c);
CurveId parse_curve(std::string_view text);

// The four families that meet sigma, in sigma's cyclic order.
inline constexpr std::array<Family, 4> chain_families{
  Family::Alpha, Family::Beta, Family::Gamma, Family::Delta};

struct Crossing
{
  int id = 0;
  CurveId first;
  CurveId second;
  int sign = 1; // oriented intersection index of first with second
};

// Signs of the crossings (sigma, X_1) for X = alpha, beta, gamma, delta.
using SigmaSigns = std::array<int, 4>;

std::string to_string(SigmaSigns const &s); // "+,+,-,+"
SigmaSigns parse_sigma_signs(std::string_view text);

struct CurveSystem
{
  int b = 0;
  std::vector<CurveId> curves;
  std::vector<Crossing> crossings;
  // crossing ids met in order when walking along each curve
  std::map<CurveId, std::vector<int>> incidences;
  // curves without crossings carry one marked point so they still bound an annulus
  std::vector<CurveId> marked;
  SigmaSigns sigma_signs{1, 1, 1, 1};

  int chain_length() const { return 2 * b - 1; }
  bool contains(CurveId c) const;

  // algebraic and geometric intersection numbers read off the crossing list
  int intersection(CurveId x, CurveId y) const;
  int shared_crossings(CurveId x, CurveId y) const;

  // Checks ids, distinct endpoints, unit signs and that every crossing
  // occurs exactly once in the incidence list of each of its curves.
  void validate() const;
};

/// Reference configuration of 4(2b-1)+1 curves. `signs` empty selects the
/// canonical convention found by search_sigma_signs (declared in homology.hpp).
CurveSystem build_reference_configuration(int b, std::optional<SigmaSigns> signs);

/// Restriction to `keep`: crossings between kept curves only. Curves that
/// lose all their crossings get a marked point.
CurveSystem subsystem(CurveSystem const &sys, std::vector<CurveId> const &keep);

// Half-edge h belongs to edge h / 2; even h is the tail end, odd h the head.
struct RibbonGraph
{
  struct Vertex
  {
    int crossing = -1; // -1 for a marked point
    std::vector<int> rotation; // counter-clockwise cyclic order of half-edges
  };

  struct Edge
  {
    CurveId curve;
    int tail = 0;
    int head = 0;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int half_edges() const { return 2 * static_cast<int>(edges.size()); }
  int vertex_of(int h) const;

  // successor in the rotation; throws inconsistent-ribbon if malformed
  std::vector<int> successor() const;
};

RibbonGraph ribbon_from_system(CurveSystem const &sys);

using BoundaryWalk = std::vector<int>; // half-edges in order of traversal

std::vector<BoundaryWalk> trace_boundary(RibbonGraph const &rg);

struct Topology
{
  int euler_characteristic = 0;
  int boundary_components = 0;
  int genus = 0;
};

Topology euler_and_genus(RibbonGraph const &rg);

bool is_connected(RibbonGraph const &rg);

nlohmann::ordered_json to_json(CurveSystem const &sys);
nlohmann::ordered_json to_json(RibbonGraph const &rg);
CurveSystem curve_system_from_json(nlohmann::ordered_json const &j);
RibbonGraph ribbon_from_json(nlohmann::ordered_json const &j);

// Crossing graph: one node per crossing, one edge per arc.
std::string to_dot(CurveSystem const &sys);

} // namespace monodromy::surface

#endif // MONODROMY_SURFACE_HPP
