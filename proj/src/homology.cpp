#include "monodromy/homology.hpp"

#include <algorithm>
#include <deque>

#include "monodromy/errors.hpp"
#include "monodromy/hash.hpp"

namespace monodromy::surface
{

using linalg::Int;
using linalg::IntMatrix;
using linalg::IntVector;

std::size_t HomologyModel::index(CurveId c) const
{
  auto it = std::find(curves.begin(), curves.end(), c);
  if (it == curves.end())
    throw Error(Errc::lookup, "curve " + to_string(c) + " is not in the model");
  return static_cast<std::size_t>(it - curves.begin());
}

bool HomologyModel::has(CurveId c) const
{ return std::find(curves.begin(), curves.end(), c) != curves.end(); }

IntVector HomologyModel::curve_class(CurveId c) const
{ return to_quotient.column(index(c)); }

Int HomologyModel::pairing(IntVector const &x, IntVector const &y) const
{ return linalg::dot(x, form * std::span<Int const>(y)); }

Int HomologyModel::pairing(CurveId x, CurveId y) const
{ return pairing(curve_class(x), curve_class(y)); }

IntMatrix HomologyModel::descend(IntMatrix const &curve_map) const
{
  if (curve_map.rows() != curves.size() || curve_map.cols() != curves.size())
    throw Error(Errc::dimension, "curve map has the wrong size");
  if (!(to_quotient * curve_map * boundaries).is_zero())
    throw Error(Errc::not_well_defined, "map does not preserve the boundary relations");
  return to_quotient * curve_map * lift;
}

namespace
{

// Oriented intersection of the two curves through a crossing vertex,
// read off the rotation: +1 when the successor of a_out is b_out.
struct VertexPairing
{
  std::size_t a, b;
  int sign;
};

VertexPairing crossing_pairing(RibbonGraph const &rg, std::vector<int> const &next,
                               RibbonGraph::Vertex const &v,
                               std::map<CurveId, std::size_t> const &idx)
{
  auto const &r = v.rotation;
  auto curve = [&](int h) { return rg.edges[static_cast<std::size_t>(h / 2)].curve; };
  if (curve(r[0]) != curve(r[2]) || curve(r[1]) != curve(r[3]) || curve(r[0]) == curve(r[1]))
    throw Error(Errc::inconsistent_ribbon, "crossing rotation does not alternate between two curves");
  if ((r[0] + r[2]) % 2 == 0 || (r[1] + r[3]) % 2 == 0)
    throw Error(Errc::inconsistent_ribbon, "curve does not pass through a crossing");

  int a_out = r[0] % 2 == 0 ? r[0] : r[2];
  int after = next[static_cast<std::size_t>(a_out)];
  return {idx.at(curve(r[0])), idx.at(curve(r[1])), after % 2 == 0 ? 1 : -1};
}

} // namespace

HomologyModel homology_model(RibbonGraph const &rg)
{
  auto topo = euler_and_genus(rg);
  auto next = rg.successor();
  auto walks = trace_boundary(rg);

  HomologyModel m;
  std::map<CurveId, std::size_t> idx;
  for (auto const &e : rg.edges)
    if (idx.emplace(e.curve, m.curves.size()).second)
      m.curves.push_back(e.curve);
  std::size_t const N = m.curves.size();
  std::size_t const E = rg.edges.size();
  std::size_t const V = rg.vertices.size();

  // every curve must be a closed cycle of its own edges
  {
    std::vector<int> balance(V * N, 0);
    for (auto const &e : rg.edges) {
      balance[static_cast<std::size_t>(e.tail) * N + idx[e.curve]] -= 1;
      balance[static_cast<std::size_t>(e.head) * N + idx[e.curve]] += 1;
    }
    if (std::any_of(balance.begin(), balance.end(), [](int x) { return x != 0; }))
      throw Error(Errc::inconsistent_ribbon, "a curve's edges do not form a cycle");
  }

  // spanning tree; the non-tree edges index the cycle lattice
  std::vector<bool> tree(E, false), reached(V, false);
  {
    std::vector<std::vector<std::size_t>> incident(V);
    for (std::size_t e = 0; e < E; ++e) {
      incident[static_cast<std::size_t>(rg.edges[e].tail)].push_back(e);
      incident[static_cast<std::size_t>(rg.edges[e].head)].push_back(e);
    }
    std::deque<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto e : incident[v])
        for (int end : {rg.edges[e].tail, rg.edges[e].head}) {
          auto w = static_cast<std::size_t>(end);
          if (!reached[w]) {
            reached[w] = true;
            tree[e] = true;
            queue.push_back(w);
          }
        }
    }
  }
  std::vector<std::size_t> cotree;
  for (std::size_t e = 0; e < E; ++e)
    if (!tree[e])
      cotree.push_back(e);

  // curve cycles in cotree coordinates must form a basis
  IntMatrix C(cotree.size(), N);
  for (std::size_t r = 0; r < cotree.size(); ++r)
    C(r, idx[rg.edges[cotree[r]].curve]) = 1;
  if (cotree.size() != N || !linalg::is_unimodular(C))
    throw Error(Errc::curves_not_basis, "curves do not form a basis of the cycle lattice");
  IntMatrix C_inv = linalg::unimodular_inverse(C);

  m.boundaries = IntMatrix(N, walks.size());
  for (std::size_t f = 0; f < walks.size(); ++f) {
    IntVector z(E, 0);
    for (int h : walks[f])
      z[static_cast<std::size_t>(h / 2)] += h % 2 == 0 ? 1 : -1;
    IntVector zt(cotree.size());
    for (std::size_t r = 0; r < cotree.size(); ++r)
      zt[r] = z[cotree[r]];
    m.boundaries.set_column(f, C_inv * std::span<Int const>(zt));
  }

  m.ribbon_form = IntMatrix(N, N);
  for (auto const &v : rg.vertices) {
    if (v.rotation.size() == 2)
      continue;
    if (v.rotation.size() != 4)
      throw Error(Errc::inconsistent_ribbon, "vertex of valence other than 2 or 4");
    auto p = crossing_pairing(rg, next, v, idx);
    m.ribbon_form(p.a, p.b) = linalg::add(m.ribbon_form(p.a, p.b), p.sign);
    m.ribbon_form(p.b, p.a) = linalg::sub(m.ribbon_form(p.b, p.a), p.sign);
  }
  if (!(m.ribbon_form * m.boundaries).is_zero())
    throw Error(Errc::invariant_violation, "boundary class pairs non-trivially with a curve");

  auto s = linalg::smith_normal_form(m.boundaries);
  if (!s.torsion_free())
    throw Error(Errc::invariant_violation, "torsion in the capped homology");
  std::size_t const r = N - s.rank;
  m.to_quotient = s.left.block(s.rank, 0, r, N);
  m.lift = s.left_inverse.block(0, s.rank, N, r);
  m.form = m.lift.transpose() * m.ribbon_form * m.lift;

  m.genus = topo.genus;
  m.boundary_components = topo.boundary_components;
  if (static_cast<int>(r) != 2 * topo.genus)
    throw Error(Errc::invariant_violation, "homology rank disagrees with the genus");
  if (r > 0 && !linalg::is_unimodular(m.form))
    throw Error(Errc::invariant_violation, "intersection form is degenerate");

  Fnv1a h;
  for (auto c : m.curves)
    h.str(to_string(c));
  h.i64s(m.ribbon_form.data()).i64s(m.boundaries.data()).i64s(m.to_quotient.data());
  m.fingerprint = h.value();
  return m;
}

CurveImages psi_images(int b, PsiRule rule)
{
  int const n = 2 * b - 1;
  CurveImages out;
  out[CurveId::sigma()] = {CurveId::sigma(), -1};
  auto pair = [&](Family x, Family y) {
    for (int i = 1; i <= n; ++i) {
      out[{x, i}] = {{y, i}, -1};
      out[{y, i}] = {{x, i}, -1};
    }
  };
  if (rule == PsiRule::reference) {
    pair(Family::Alpha, Family::Delta);
    pair(Family::Beta, Family::Gamma);
  } else {
    pair(Family::Alpha, Family::Beta);
    pair(Family::Gamma, Family::Delta);
  }
  return out;
}

IntMatrix induced_map(HomologyModel const &model, CurveImages const &images)
{
  std::size_t N = model.curves.size();
  IntMatrix P(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    auto it = images.find(model.curves[j]);
    if (it == images.end())
      throw Error(Errc::lookup, "no image for " + to_string(model.curves[j]));
    P(model.index(it->second.first), j) = it->second.second;
  }
  return model.descend(P);
}

SignSearch search_sigma_signs(int b)
{
  if (b < 2)
    throw Error(Errc::invalid_parameter, "b must be at least 2");
  SignSearch out;
  for (int code = 0; code < 16; ++code) {
    SignCandidate cand;
    for (int k = 0; k < 4; ++k)
      cand.signs[static_cast<std::size_t>(k)] = (code >> (3 - k)) & 1 ? -1 : 1;
    try {
      auto sys = build_reference_configuration(b, cand.signs);
      auto model = homology_model(sys);
      if (model.boundary_components != 4)
        cand.reason = std::to_string(model.boundary_components) + " boundary components";
      else if (model.genus != 4 * b - 3)
        cand.reason = "genus " + std::to_string(model.genus);
      else {
        auto P = induced_map(model, psi_images(b, PsiRule::reference));
        if (P.transpose() * model.form * P != model.form)
          cand.reason = "psi not symplectic";
        else if (P * P != IntMatrix::identity(model.rank()))
          cand.reason = "psi not an involution";
        else
          cand.admissible = true;
      }
    } catch (Error const &e) {
      cand.reason = e.what();
    }
    if (cand.admissible && !out.accepted)
      out.accepted = cand.signs;
    out.candidates.push_back(cand);
  }
  return out;
}

SigmaSigns canonical_sigma_signs(int b)
{
  auto s = search_sigma_signs(b);
  if (!s.accepted)
    throw Error(Errc::invariant_violation, "no admissible sigma sign convention");
  return *s.accepted;
}

nlohmann::ordered_json to_json(HomologyModel const &model)
{
  auto rows = [](IntMatrix const &a) {
    auto j = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < a.rows(); ++r)
      j.push_back(std::vector<Int>(a.row(r).begin(), a.row(r).end()));
    return j;
  };
  nlohmann::ordered_json j;
  j["fingerprint"] = hex64(model.fingerprint);
  j["rank"] = model.rank();
  j["genus"] = model.genus;
  j["boundary_components"] = model.boundary_components;
  j["curves"] = nlohmann::ordered_json::array();
  for (auto c : model.curves)
    j["curves"].push_back(to_string(c));
  j["form"] = rows(model.form);
  auto classes = nlohmann::ordered_json::object();
  for (auto c : model.curves)
    classes[to_string(c)] = model.curve_class(c);
  j["classes"] = classes;
  return j;
}

} // namespace monodromy::surface
