#include "monodromy/surface.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "monodromy/errors.hpp"
#include "monodromy/homology.hpp"

namespace monodromy::surface
{

namespace
{

constexpr std::array<std::pair<Family, std::string_view>, 5> family_names{{
  {Family::Alpha, "alpha"},
  {Family::Beta, "beta"},
  {Family::Gamma, "gamma"},
  {Family::Delta, "delta"},
  {Family::Sigma, "sigma"},
}};

} // namespace

std::string to_string(CurveId c)
{
  for (auto const &[f, name] : family_names)
    if (f == c.family)
      return c.family == Family::Sigma ? std::string(name)
                                       : std::string(name) + std::to_string(c.index);
  return "?";
}

CurveId parse_curve(std::string_view text)
{
  auto fail = [&] { return Error(Errc::parse, "bad curve name '" + std::string(text) + "'"); };

  std::size_t split = 0;
  while (split < text.size() && !std::isdigit(static_cast<unsigned char>(text[split])))
    ++split;
  std::string_view head = text.substr(0, split);
  std::string_view tail = text.substr(split);

  std::optional<Family> family;
  for (auto const &[f, name] : family_names)
    if (head == name || (head.size() == 1 && head[0] == name[0]))
      family = f;
  if (!family)
    throw fail();

  if (*family == Family::Sigma) {
    if (!tail.empty())
      throw fail();
    return CurveId::sigma();
  }

  int index = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), index);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || index < 1)
    throw fail();
  return {*family, index};
}

std::string to_string(SigmaSigns const &s)
{
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ',';
    out += s[i] > 0 ? '+' : '-';
  }
  return out;
}

SigmaSigns parse_sigma_signs(std::string_view text)
{
  SigmaSigns s{};
  std::size_t k = 0;
  std::string token;
  std::istringstream is{std::string(text)};
  while (std::getline(is, token, ',')) {
    if (k == 4)
      throw Error(Errc::parse, "expected four signs");
    if (token == "+" || token == "+1" || token == "1")
      s[k++] = 1;
    else if (token == "-" || token == "-1")
      s[k++] = -1;
    else
      throw Error(Errc::parse, "bad sign '" + token + "'");
  }
  if (k != 4)
    throw Error(Errc::parse, "expected four signs");
  return s;
}

bool CurveSystem::contains(CurveId c) const
{ return std::find(curves.begin(), curves.end(), c) != curves.end(); }

int CurveSystem::intersection(CurveId x, CurveId y) const
{
  int total = 0;
  for (auto const &k : crossings) {
    if (k.first == x && k.second == y)
      total += k.sign;
    else if (k.first == y && k.second == x)
      total -= k.sign;
  }
  return total;
}

int CurveSystem::shared_crossings(CurveId x, CurveId y) const
{
  return static_cast<int>(std::count_if(crossings.begin(), crossings.end(), [&](Crossing const &k) {
    return (k.first == x && k.second == y) || (k.first == y && k.second == x);
  }));
}

void CurveSystem::validate() const
{
  std::set<CurveId> known(curves.begin(), curves.end());
  if (known.size() != curves.size())
    throw Error(Errc::invalid_parameter, "duplicate curve");

  std::map<int, Crossing const *> by_id;
  for (auto const &k : crossings) {
    if (!by_id.emplace(k.id, &k).second)
      throw Error(Errc::invalid_parameter, "duplicate crossing id " + std::to_string(k.id));
    if (k.first == k.second)
      throw Error(Errc::invalid_parameter, "crossing of a curve with itself");
    if (!known.count(k.first) || !known.count(k.second))
      throw Error(Errc::lookup, "crossing references unknown curve");
    if (k.sign != 1 && k.sign != -1)
      throw Error(Errc::invalid_parameter, "crossing sign must be +1 or -1");
  }

  std::map<int, int> seen;
  for (auto const &[c, list] : incidences) {
    if (!known.count(c))
      throw Error(Errc::lookup, "incidence list for unknown curve " + to_string(c));
    for (int id : list) {
      auto it = by_id.find(id);
      if (it == by_id.end())
        throw Error(Errc::lookup, "unknown crossing id " + std::to_string(id));
      if (it->second->first != c && it->second->second != c)
        throw Error(Errc::inconsistent_ribbon,
                    "crossing " + std::to_string(id) + " listed on a curve it does not lie on");
      ++seen[id];
    }
  }
  for (auto const &k : crossings)
    if (seen[k.id] != 2)
      throw Error(Errc::inconsistent_ribbon,
                  "crossing " + std::to_string(k.id) + " must occur once on each of its curves");
}

CurveSystem build_reference_configuration(int b, std::optional<SigmaSigns> signs)
{
  if (b < 2)
    throw Error(Errc::invalid_parameter, "b must be at least 2");
  if (!signs)
    signs = canonical_sigma_signs(b);
  for (int s : *signs)
    if (s != 1 && s != -1)
      throw Error(Errc::invalid_parameter, "sigma signs must be +1 or -1");

  CurveSystem sys;
  sys.b = b;
  sys.sigma_signs = *signs;
  int const n = sys.chain_length();

  sys.curves.push_back(CurveId::sigma());
  for (Family f : chain_families)
    for (int i = 1; i <= n; ++i)
      sys.curves.push_back({f, i});

  std::map<std::pair<CurveId, CurveId>, int> id_of;
  auto add = [&](CurveId x, CurveId y, int sign) {
    int id = static_cast<int>(sys.crossings.size());
    sys.crossings.push_back({id, x, y, sign});
    id_of[{x, y}] = id;
  };

  for (Family f : chain_families)
    for (int i = 1; i < n; ++i)
      add({f, i}, {f, i + 1}, 1);
  for (std::size_t k = 0; k < chain_families.size(); ++k)
    add(CurveId::sigma(), {chain_families[k], 1}, (*signs)[k]);

  for (Family f : chain_families)
    for (int i = 1; i <= n; ++i) {
      auto &list = sys.incidences[{f, i}];
      if (i == 1)
        list.push_back(id_of[{CurveId::sigma(), {f, 1}}]);
      if (i > 1)
        list.push_back(id_of[{{f, i - 1}, {f, i}}]);
      if (i < n)
        list.push_back(id_of[{{f, i}, {f, i + 1}}]);
    }
  auto &sig = sys.incidences[CurveId::sigma()];
  for (Family f : chain_families)
    sig.push_back(id_of[{CurveId::sigma(), {f, 1}}]);

  return sys;
}

CurveSystem subsystem(CurveSystem const &sys, std::vector<CurveId> const &keep)
{
  std::set<CurveId> wanted(keep.begin(), keep.end());
  for (auto c : wanted)
    if (!sys.contains(c))
      throw Error(Errc::lookup, "unknown curve " + to_string(c));

  CurveSystem sub;
  sub.b = sys.b;
  sub.sigma_signs = sys.sigma_signs;
  std::set<int> kept_ids;
  for (auto c : sys.curves)
    if (wanted.count(c))
      sub.curves.push_back(c);
  for (auto const &k : sys.crossings)
    if (wanted.count(k.first) && wanted.count(k.second)) {
      sub.crossings.push_back(k);
      kept_ids.insert(k.id);
    }
  for (auto c : sub.curves) {
    std::vector<int> list;
    if (auto it = sys.incidences.find(c); it != sys.incidences.end())
      for (int id : it->second)
        if (kept_ids.count(id))
          list.push_back(id);
    if (list.empty())
      sub.marked.push_back(c);
    sub.incidences[c] = std::move(list);
  }
  return sub;
}

int RibbonGraph::vertex_of(int h) const
{
  auto const &e = edges.at(static_cast<std::size_t>(h / 2));
  return h % 2 == 0 ? e.tail : e.head;
}

std::vector<int> RibbonGraph::successor() const
{
  int const H = half_edges();
  std::vector<int> next(static_cast<std::size_t>(H), -1);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto const &rot = vertices[v].rotation;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int h = rot[i];
      if (h < 0 || h >= H)
        throw Error(Errc::inconsistent_ribbon, "half-edge out of range");
      if (next[static_cast<std::size_t>(h)] != -1)
        throw Error(Errc::inconsistent_ribbon, "half-edge listed twice");
      if (vertex_of(h) != static_cast<int>(v))
        throw Error(Errc::inconsistent_ribbon,
                    "half-edge " + std::to_string(h) + " rotated at the wrong vertex");
      next[static_cast<std::size_t>(h)] = rot[(i + 1) % rot.size()];
    }
  }
  if (std::find(next.begin(), next.end(), -1) != next.end())
    throw Error(Errc::inconsistent_ribbon, "half-edge missing from every rotation");
  return next;
}

RibbonGraph ribbon_from_system(CurveSystem const &sys)
{
  sys.validate();

  RibbonGraph rg;
  std::map<int, int> vertex_of_crossing;
  for (auto const &k : sys.crossings) {
    vertex_of_crossing[k.id] = static_cast<int>(rg.vertices.size());
    rg.vertices.push_back({k.id, {}});
  }

  // (crossing id, curve) -> incoming / outgoing half-edge
  std::map<std::pair<int, CurveId>, int> in_half, out_half;

  for (auto c : sys.curves) {
    auto it = sys.incidences.find(c);
    std::vector<int> const empty;
    auto const &list = it == sys.incidences.end() ? empty : it->second;

    if (list.empty()) {
      if (std::find(sys.marked.begin(), sys.marked.end(), c) == sys.marked.end())
        throw Error(Errc::degenerate_curve, to_string(c) + " has no crossings");
      int v = static_cast<int>(rg.vertices.size());
      int e = static_cast<int>(rg.edges.size());
      rg.edges.push_back({c, v, v});
      rg.vertices.push_back({-1, {2 * e + 1, 2 * e}});
      continue;
    }

    for (std::size_t j = 0; j < list.size(); ++j) {
      int from = list[j];
      int to = list[(j + 1) % list.size()];
      int e = static_cast<int>(rg.edges.size());
      rg.edges.push_back({c, vertex_of_crossing.at(from), vertex_of_crossing.at(to)});
      out_half[{from, c}] = 2 * e;
      in_half[{to, c}] = 2 * e + 1;
    }
  }

  for (auto const &k : sys.crossings) {
    auto &rot = rg.vertices[static_cast<std::size_t>(vertex_of_crossing[k.id])].rotation;
    int ai = in_half.at({k.id, k.first}), ao = out_half.at({k.id, k.first});
    int bi = in_half.at({k.id, k.second}), bo = out_half.at({k.id, k.second});
    if (k.sign > 0)
      rot = {ai, bi, ao, bo};
    else
      rot = {ai, bo, ao, bi};
  }
  return rg;
}

std::vector<BoundaryWalk> trace_boundary(RibbonGraph const &rg)
{
  auto next = rg.successor();
  std::vector<bool> used(next.size(), false);
  std::vector<BoundaryWalk> walks;
  for (std::size_t start = 0; start < next.size(); ++start) {
    if (used[start])
      continue;
    BoundaryWalk w;
    int h = static_cast<int>(start);
    while (!used[static_cast<std::size_t>(h)]) {
      used[static_cast<std::size_t>(h)] = true;
      w.push_back(h);
      h = next[static_cast<std::size_t>(h ^ 1)];
    }
    if (h != static_cast<int>(start))
      throw Error(Errc::inconsistent_ribbon, "boundary walk failed to close");
    walks.push_back(std::move(w));
  }
  return walks;
}

bool is_connected(RibbonGraph const &rg)
{
  std::vector<int> parent(rg.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto const &e : rg.edges)
    parent[static_cast<std::size_t>(find(e.tail))] = find(e.head);
  std::set<int> roots;
  for (std::size_t v = 0; v < rg.vertices.size(); ++v)
    roots.insert(find(static_cast<int>(v)));
  return roots.size() <= 1;
}

Topology euler_and_genus(RibbonGraph const &rg)
{
  if (rg.vertices.empty() || !is_connected(rg))
    throw Error(Errc::must_be_connected, "ribbon graph is not connected");
  Topology t;
  t.euler_characteristic = static_cast<int>(rg.vertices.size()) - static_cast<int>(rg.edges.size());
  t.boundary_components = static_cast<int>(trace_boundary(rg).size());
  int twice = 2 - t.euler_characteristic - t.boundary_components;
  if (twice < 0 || twice % 2 != 0)
    throw Error(Errc::inconsistent_ribbon, "Euler characteristic has the wrong parity");
  t.genus = twice / 2;
  return t;
}

using nlohmann::ordered_json;

ordered_json to_json(CurveSystem const &sys)
{
  ordered_json j;
  j["b"] = sys.b;
  j["sigma_signs"] = sys.sigma_signs;
  j["curves"] = ordered_json::array();
  for (auto c : sys.curves)
    j["curves"].push_back(to_string(c));
  j["crossings"] = ordered_json::array();
  for (auto const &k : sys.crossings)
    j["crossings"].push_back({{"id", k.id},
                              {"first", to_string(k.first)},
                              {"second", to_string(k.second)},
                              {"sign", k.sign}});
  ordered_json inc = ordered_json::object();
  for (auto c : sys.curves) {
    auto it = sys.incidences.find(c);
    inc[to_string(c)] = it == sys.incidences.end() ? std::vector<int>{} : it->second;
  }
  j["incidences"] = inc;
  j["marked"] = ordered_json::array();
  for (auto c : sys.marked)
    j["marked"].push_back(to_string(c));
  return j;
}

CurveSystem curve_system_from_json(ordered_json const &j)
{
  try {
    CurveSystem sys;
    sys.b = j.value("b", 0);
    if (j.contains("sigma_signs"))
      sys.sigma_signs = j.at("sigma_signs").get<SigmaSigns>();
    for (auto const &c : j.at("curves"))
      sys.curves.push_back(parse_curve(c.get<std::string>()));
    for (auto const &k : j.at("crossings"))
      sys.crossings.push_back({k.at("id").get<int>(),
                               parse_curve(k.at("first").get<std::string>()),
                               parse_curve(k.at("second").get<std::string>()),
                               k.at("sign").get<int>()});
    for (auto const &[name, list] : j.at("incidences").items())
      sys.incidences[parse_curve(name)] = list.get<std::vector<int>>();
    if (j.contains("marked"))
      for (auto const &c : j.at("marked"))
        sys.marked.push_back(parse_curve(c.get<std::string>()));
    sys.validate();
    return sys;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

ordered_json to_json(RibbonGraph const &rg)
{
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (auto const &v : rg.vertices)
    j["vertices"].push_back({{"crossing", v.crossing}, {"rotation", v.rotation}});
  j["edges"] = ordered_json::array();
  for (auto const &e : rg.edges)
    j["edges"].push_back({{"curve", to_string(e.curve)}, {"tail", e.tail}, {"head", e.head}});
  return j;
}

RibbonGraph ribbon_from_json(ordered_json const &j)
{
  try {
    RibbonGraph rg;
    for (auto const &v : j.at("vertices"))
      rg.vertices.push_back({v.value("crossing", -1), v.at("rotation").get<std::vector<int>>()});
    for (auto const &e : j.at("edges")) {
      int tail = e.at("tail").get<int>(), head = e.at("head").get<int>();
      int nv = static_cast<int>(rg.vertices.size());
      if (tail < 0 || tail >= nv || head < 0 || head >= nv)
        throw Error(Errc::inconsistent_ribbon, "edge endpoint out of range");
      rg.edges.push_back({parse_curve(e.at("curve").get<std::string>()), tail, head});
    }
    rg.successor();
    return rg;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

std::string to_dot(CurveSystem const &sys)
{
  auto rg = ribbon_from_system(sys);
  std::ostringstream os;
  os << "digraph crossings {\n";
  for (std::size_t v = 0; v < rg.vertices.size(); ++v) {
    int id = rg.vertices[v].crossing;
    if (id < 0) {
      os << "  v" << v << " [shape=point];\n";
      continue;
    }
    auto const &k = *std::find_if(sys.crossings.begin(), sys.crossings.end(),
                                  [&](Crossing const &x) { return x.id == id; });
    os << "  v" << v << " [label=\"" << to_string(k.first) << " x " << to_string(k.second)
       << (k.sign > 0 ? " (+)" : " (-)") << "\"];\n";
  }
  for (auto const &e : rg.edges)
    os << "  v" << e.tail << " -> v" << e.head << " [label=\"" << to_string(e.curve) << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace monodromy::surface
