#include "monodromy/invariants.hpp"

#include <algorithm>

#include "monodromy/errors.hpp"

namespace monodromy::invariants
{

using linalg::add;
using linalg::mul;
using linalg::sub;

void validate(CoverType const &t)
{
  if (t.a < 1 || t.b < 1 || t.c < 1 || t.d < 1)
    throw Error(Errc::invalid_parameter, "cover type needs positive a, b, c, d");
}

SurfaceInvariants invariants(CoverType const &t)
{
  validate(t);
  Int n = mul(2, add(t.a, t.c)), m = mul(2, add(t.b, t.d));
  Int base = mul(sub(n, 4), sub(m, 4));
  Int chi4 = add(base, mul(4, add(mul(t.a, t.b), mul(t.c, t.d))));
  if (chi4 % 4 != 0)
    throw Error(Errc::invariant_violation, "chi is not integral");
  SurfaceInvariants s;
  s.chi = chi4 / 4;
  s.K2 = mul(2, base);
  s.divisibility = linalg::gcd(sub(add(t.a, t.c), 2), sub(add(t.b, t.d), 2));
  s.fibre_genus = sub(mul(2, add(t.b, t.d)), 3);
  return s;
}

std::optional<Int> chi_printed_variant(CoverType const &t)
{
  validate(t);
  if (t.d != t.b)
    return std::nullopt;
  Int ac = add(t.a, t.c);
  return add(mul(mul(2, sub(ac, 2)), sub(t.b, 1)), mul(mul(4, t.b), ac));
}

bool HypothesisReport::non_deformation() const
{ return std::all_of(conditions.begin(), conditions.begin() + 3, [](auto const &c) { return c.pass; }); }

bool HypothesisReport::diffeomorphism() const
{ return conditions.at(3).pass; }

std::vector<std::string> HypothesisReport::failed() const
{
  std::vector<std::string> out;
  for (auto const &c : conditions)
    if (!c.pass)
      out.push_back(c.name);
  return out;
}

HypothesisReport theorem_hypotheses(Int a, Int b, Int c, Int k)
{
  HypothesisReport r{a, b, c, k, {}};

  Condition one{"I", true, 0, ""};
  one.margin = std::min({sub(a, 4), sub(b, 4), sub(sub(c, k), 4), sub(k, 1)});
  std::vector<std::string> odd;
  for (auto [name, v] : {std::pair{"a", a}, {"b", b}, {"c", c}, {"k", k}})
    if (v % 2 != 0)
      odd.push_back(name);
  one.pass = one.margin >= 0 && odd.empty();
  if (!odd.empty()) {
    one.detail = "odd:";
    for (auto const &s : odd)
      one.detail += " " + s;
  } else if (one.margin < 0) {
    one.detail = "need a, b, c - k >= 4 and k > 0";
  }
  r.conditions.push_back(one);

  Int m2 = sub(a, add(mul(2, c), 1));
  r.conditions.push_back({"II", m2 >= 0, m2, m2 >= 0 ? "" : "need a >= 2c + 1"});
  Int m3 = sub(b, add(c, 2));
  r.conditions.push_back({"III", m3 >= 0, m3, m3 >= 0 ? "" : "need b >= c + 2"});
  Int md = std::min({sub(a, 2), sub(b, 2), sub(c, 3)});
  r.conditions.push_back({"diffeomorphism", md >= 0, md, md >= 0 ? "" : "need a, b, c - 1 >= 2"});
  return r;
}

std::vector<FamilyMember> family_enumerate(Int a, Int b, Int c, Int k, bool force)
{
  if (k <= 0 || k % 2 != 0)
    throw Error(Errc::invalid_parameter, "k must be a positive even integer");
  auto h = theorem_hypotheses(a, b, c, k);
  if (!force && !h.non_deformation()) {
    auto failed = h.failed();
    failed.erase(std::remove(failed.begin(), failed.end(), "diffeomorphism"), failed.end());
    std::string list;
    for (auto const &f : failed)
      list += (list.empty() ? "" : ", ") + f;
    throw HypothesisUnmet(failed, "hypotheses fail: " + list);
  }
  std::vector<FamilyMember> out;
  for (Int i = 0; i <= k / 2; ++i) {
    CoverType t{add(a, i), b, sub(c, i), b};
    if (t.c < 1)
      throw Error(Errc::invalid_parameter, "c - i must stay positive");
    out.push_back({t, invariants(t)});
  }
  for (auto const &m : out)
    if (!(m.invariants == out.front().invariants))
      throw Error(Errc::invariant_violation, "family members have different invariants");
  return out;
}

Int deformation_dimension(Int a, Int b, Int c)
{
  Int first = mul(add(b, 1), add(add(mul(4, a), c), 3));
  Int second = mul(mul(2, b), add(add(a, c), 1));
  return sub(add(first, second), 8);
}

DimensionReport dimension_report(Int a, Int b, Int c)
{
  DimensionReport r;
  r.M = deformation_dimension(a, b, c);
  Int alpha = add(a, c), beta = mul(2, b);
  // 3/2 alpha beta = 3 b alpha
  r.alternative = add(add(mul(mul(3, b), alpha), add(alpha, beta)), mul(mul(3, b), add(a, 1)));
  r.agree = r.M == r.alternative;
  return r;
}

using nlohmann::ordered_json;

ordered_json to_json(CoverType const &t)
{ return {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}}; }

ordered_json to_json(SurfaceInvariants const &s)
{ return {{"chi", s.chi}, {"K2", s.K2}, {"divisibility", s.divisibility}, {"fibre_genus", s.fibre_genus}}; }

ordered_json to_json(HypothesisReport const &r)
{
  ordered_json conds = ordered_json::array();
  for (auto const &c : r.conditions) {
    ordered_json j{{"condition", c.name}, {"pass", c.pass}, {"margin", c.margin}};
    if (!c.detail.empty())
      j["detail"] = c.detail;
    conds.push_back(j);
  }
  return {{"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"k", r.k},
          {"non_deformation", r.non_deformation()},
          {"diffeomorphism", r.diffeomorphism()},
          {"conditions", conds}};
}

ordered_json to_json(DimensionReport const &r)
{ return {{"M", r.M}, {"alternative", r.alternative}, {"agree", r.agree}}; }

} // namespace monodromy::invariants
