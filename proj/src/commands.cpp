#include "monodromy/commands.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "monodromy/braids.hpp"
#include "monodromy/chains.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/hash.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/invariants.hpp"
#include "monodromy/surface.hpp"
#include "monodromy/twist.hpp"

namespace monodromy::commands
{

using nlohmann::ordered_json;
using surface::CurveId;
using surface::CurveSystem;
using surface::HomologyModel;

std::string_view to_string(Status s)
{
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::add(std::string name, bool ok, std::string details)
{ add(std::move(name), ok ? Status::pass : Status::fail, std::move(details)); }

void Report::add(std::string name, Status s, std::string details)
{ checks.push_back({std::move(name), s, std::move(details)}); }

int Report::exit_code() const
{
  bool any_pass = false;
  for (auto const &c : checks) {
    if (c.status == Status::fail)
      return 1;
    any_pass = any_pass || c.status == Status::pass;
  }
  return checks.empty() || any_pass ? 0 : 3;
}

ordered_json environment()
{
  ordered_json j;
  j["tool"] = "mwb";
  j["version"] = "0.1.0";
#if defined(__clang__)
  j["compiler"] = "clang " __clang_version__;
#elif defined(__GNUC__)
  j["compiler"] = "gcc " __VERSION__;
#else
  j["compiler"] = "unknown";
#endif
  j["cplusplus"] = __cplusplus;
  j["arithmetic"] = "int64 checked, products in arbitrary precision";
  j["search_budget"] = hurwitz::default_budget();
  return j;
}

ordered_json to_json(Report const &r)
{
  ordered_json j;
  j["command"] = r.command;
  j["checks"] = ordered_json::array();
  for (auto const &c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  j["data"] = r.data;
  j["environment"] = environment();
  j["exit_code"] = r.exit_code();
  return j;
}

namespace
{

void flatten(ordered_json const &j, std::string const &prefix, std::vector<std::pair<std::string, std::string>> &out)
{
  if (j.is_object()) {
    for (auto const &[k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](auto const &e) { return e.is_primitive(); })) {
    std::string s;
    for (auto const &e : j)
      s += (s.empty() ? "" : " ") + (e.is_string() ? e.template get<std::string>() : e.dump());
    out.emplace_back(prefix, s);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string pad(std::string s, std::size_t w)
{
  s.resize(std::max(s.size(), w), ' ');
  return s;
}

} // namespace

std::string to_table(Report const &r)
{
  std::ostringstream os;
  os << "command: " << r.command << "\n\n";
  std::size_t w = 5;
  for (auto const &c : r.checks)
    w = std::max(w, c.name.size());
  os << pad("check", w) << "  " << pad("status", 12) << "  details\n";
  for (auto const &c : r.checks)
    os << pad(c.name, w) << "  " << pad(std::string(to_string(c.status)), 12) << "  " << c.details << "\n";

  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r.data, "", rows);
  if (!rows.empty()) {
    std::size_t kw = 0;
    for (auto const &[k, v] : rows)
      kw = std::max(kw, k.size());
    os << "\n";
    for (auto const &[k, v] : rows)
      os << pad(k, kw) << "  " << v << "\n";
  }
  os << "\nexit: " << r.exit_code() << "\n";
  return os.str();
}

namespace
{

void require_b(int b, int lo, int hi)
{
  if (b < lo || b > hi)
    throw UsageError("--b must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

ordered_json curve_names(std::vector<CurveId> const &cs)
{
  auto j = ordered_json::array();
  for (auto c : cs)
    j.push_back(surface::to_string(c));
  return j;
}

std::string script_summary(hurwitz::Script const &s)
{ return std::to_string(s.size()) + " moves"; }

HomologyModel model_for(int b, std::optional<surface::SigmaSigns> signs = std::nullopt)
{ return surface::homology_model(surface::build_reference_configuration(b, signs)); }

} // namespace

Report verify_psi(int b, std::string const &sign_mode)
{
  require_b(b, 2, 6);
  Report r;
  r.command = "verify-psi --b " + std::to_string(b) + " --sign-mode " + sign_mode;
  r.data["b"] = b;

  surface::SigmaSigns signs{};
  if (sign_mode == "auto") {
    auto search = surface::search_sigma_signs(b);
    auto cands = ordered_json::array();
    for (auto const &c : search.candidates) {
      ordered_json e{{"signs", surface::to_string(c.signs)}, {"admissible", c.admissible}};
      if (!c.reason.empty())
        e["reason"] = c.reason;
      cands.push_back(e);
    }
    r.data["candidates"] = cands;
    if (!search.accepted) {
      r.add("sign-convention", false, "no sigma-sign tuple admits a well-defined psi");
      return r;
    }
    signs = *search.accepted;
    r.add("sign-convention", true, "accepted " + surface::to_string(signs));
  } else if (sign_mode.starts_with("explicit:")) {
    try {
      signs = surface::parse_sigma_signs(sign_mode.substr(9));
    } catch (Error const &e) {
      throw UsageError(std::string("bad --sign-mode: ") + e.what());
    }
    r.add("sign-convention", true, "explicit " + surface::to_string(signs));
  } else {
    throw UsageError("--sign-mode must be auto or explicit:s1,s2,s3,s4");
  }
  r.data["sigma_signs"] = surface::to_string(signs);

  auto sys = surface::build_reference_configuration(b, signs);
  HomologyModel model;
  try {
    model = surface::homology_model(sys);
  } catch (Error const &e) {
    r.add("homology-model", false, e.what());
    return r;
  }
  r.data["genus"] = model.genus;
  r.data["boundary_components"] = model.boundary_components;
  r.data["rank"] = model.rank();
  bool topo = model.boundary_components == 4 && model.genus == 4 * b - 3 &&
              model.rank() == static_cast<std::size_t>(8 * b - 6);
  r.add("topology", topo,
        std::to_string(model.boundary_components) + " boundary walks, genus " + std::to_string(model.genus) +
          ", rank " + std::to_string(model.rank()));

  twist::MappingClassMatrix ref;
  try {
    ref = twist::psi_reference(model);
  } catch (Error const &e) {
    r.add("psi-well-defined", false, e.what());
    return r;
  }
  r.add("psi-well-defined", true);

  auto factors = chains::psi_factors(sys);
  auto fj = ordered_json::array();
  for (auto const &f : factors)
    fj.push_back({{"name", f.name}, {"chain", curve_names(f.chain.curves)}, {"power", f.power},
                  {"length", f.word.size()}});
  r.data["factors"] = fj;
  auto word = chains::psi_factorization(sys);
  r.data["word_length"] = word.size();

  auto prod = hurwitz::product_matrix(hurwitz::from_twist_word(model, word), model);
  r.add("product-equals-reference", prod == ref,
        prod == ref ? "exact integer equality" : "matrices differ");
  r.add("product-symplectic", twist::is_symplectic(prod, model));
  r.add("reference-symplectic", twist::is_symplectic(ref, model));
  return r;
}

namespace
{

ordered_json certificate_document(int b, std::string const &pattern, surface::SigmaSigns signs,
                                  twist::TwistWord const &psi, hurwitz::Factorization const &f,
                                  hurwitz::AurouxCertificate const &cert)
{
  ordered_json j;
  j["kind"] = "auroux-certificate";
  j["version"] = 1;
  j["b"] = b;
  j["pattern"] = pattern;
  j["sigma_signs"] = surface::to_string(signs);
  j["psi"] = twist::to_json(psi);
  j["factorization"] = hurwitz::to_json(f, hurwitz::twist_names());
  j["certificate"] = hurwitz::to_json(cert);
  return j;
}

std::string replay_details(hurwitz::ReplayResult const &rr)
{
  if (rr.ok)
    return "every entry replays";
  std::string s;
  if (rr.entry)
    s += "entry " + std::to_string(*rr.entry + 1);
  if (rr.move)
    s += ", first bad move " + std::to_string(*rr.move + 1);
  if (!rr.message.empty())
    s += (s.empty() ? "" : ": ") + rr.message;
  return s;
}

void add_replay(Report &r, hurwitz::ReplayResult const &rr)
{
  r.add("replay", rr.ok, replay_details(rr));
  if (!rr.ok) {
    ordered_json bad;
    bad["entry"] = rr.entry ? ordered_json(*rr.entry + 1) : ordered_json(nullptr);
    bad["move"] = rr.move ? ordered_json(*rr.move + 1) : ordered_json(nullptr);
    r.data["first_bad"] = bad;
  }
}

// distinct cores of psi, in order of first occurrence
std::vector<CurveId> distinct_cores(twist::TwistWord const &psi)
{
  std::vector<CurveId> out;
  for (auto const &l : psi)
    if (std::find(out.begin(), out.end(), l.curve) == out.end())
      out.push_back(l.curve);
  return out;
}

void add_coverage(Report &r, twist::TwistWord const &psi, hurwitz::AurouxCertificate const &cert)
{
  std::set<CurveId> got;
  for (auto const &e : cert.entries)
    got.insert(e.core);
  std::vector<std::string> missing;
  auto cores = distinct_cores(psi);
  for (auto c : cores)
    if (!got.count(c))
      missing.push_back(surface::to_string(c));
  std::string d = std::to_string(cores.size() - missing.size()) + "/" + std::to_string(cores.size()) + " cores exposed";
  for (auto const &m : missing)
    d += " " + m;
  r.add("cores-covered", missing.empty(), d);
}

} // namespace

Report auroux(AurouxOptions const &opt)
{
  if (opt.b < 2)
    throw UsageError("--b must be at least 2");
  if (opt.pattern.empty() || opt.pattern.find_first_not_of("XY") != std::string::npos)
    throw UsageError("--pattern is a word over X and Y");
  std::vector<int> omit;
  for (auto const &name : opt.omit) {
    try {
      omit.push_back(hurwitz::encode(surface::parse_curve(name)));
    } catch (Error const &e) {
      throw UsageError(std::string("bad --omit: ") + e.what());
    }
  }

  Report r;
  r.command = "auroux --b " + std::to_string(opt.b) + " --pattern " + opt.pattern;
  for (auto const &name : opt.omit)
    r.command += " --omit " + name;

  auto sys = surface::build_reference_configuration(opt.b, std::nullopt);
  auto model = surface::homology_model(sys);
  auto psi = chains::psi_factorization(sys);
  auto f = braids::monodromy_factorization(opt.b, model, opt.pattern);
  std::erase_if(f.letters, [&](auto const &l) {
    return std::find(omit.begin(), omit.end(), l.core.gen) != omit.end();
  });
  r.data["b"] = opt.b;
  r.data["pattern"] = opt.pattern;
  r.data["sigma_signs"] = surface::to_string(sys.sigma_signs);
  r.data["factorization_length"] = f.size();
  r.data["psi_length"] = psi.size();

  bool identity = hurwitz::product_matrix(f, model) == twist::identity(model);
  r.add("monodromy-identity", identity, identity ? "product is the identity on H_1" : "product is not the identity");

  hurwitz::AurouxCertificate cert;
  try {
    cert = hurwitz::auroux_certificate(f, psi, model);
  } catch (HypothesisUnmet const &e) {
    std::string missing;
    for (auto const &m : e.missing())
      missing += (missing.empty() ? "" : " ") + m;
    r.add("hypotheses", false, "hypothesis-unmet, missing cores: " + missing);
    r.data["missing"] = e.missing();
    return r;
  } catch (Error const &e) {
    r.add("certificate", false, e.what());
    return r;
  }
  r.add("hypotheses", true, "every core of psi occurs in the factorization");

  std::size_t moves = 0;
  for (auto const &e : cert.entries)
    moves += e.script.size();
  r.add("certificate", true, std::to_string(cert.entries.size()) + " entries, " + std::to_string(moves) + " moves");
  add_coverage(r, psi, cert);
  add_replay(r, hurwitz::replay(cert, f, model));
  r.data["certificate_entries"] = cert.entries.size();
  r.data["certificate_moves"] = moves;
  r.artifact = certificate_document(opt.b, opt.pattern, sys.sigma_signs, psi, f, cert);
  return r;
}

Report auroux_check(ordered_json const &file)
{
  Report r;
  r.command = "auroux-check";
  int b = 0;
  surface::SigmaSigns signs{};
  hurwitz::Factorization f;
  hurwitz::AurouxCertificate cert;
  twist::TwistWord psi;
  try {
    b = file.at("b").get<int>();
    signs = surface::parse_sigma_signs(file.at("sigma_signs").get<std::string>());
    psi = twist::word_from_json(file.at("psi"));
    f = hurwitz::factorization_from_json(file.at("factorization"), hurwitz::twist_parser());
    cert = hurwitz::certificate_from_json(file.at("certificate"));
  } catch (std::exception const &e) {
    r.add("parse", false, e.what());
    return r;
  }
  if (b < 2) {
    r.add("parse", false, "b must be at least 2");
    return r;
  }
  r.add("parse", true);
  r.data["b"] = b;
  r.data["entries"] = cert.entries.size();

  auto model = model_for(b, signs);
  r.add("model", cert.model == model.fingerprint && f.model == model.fingerprint,
        "fingerprint " + hex64(model.fingerprint));
  add_coverage(r, psi, cert);
  add_replay(r, hurwitz::replay(cert, f, model));
  return r;
}

Report regeneration(int b, std::size_t depth, std::size_t budget)
{
  if (b < 2)
    throw UsageError("--b must be at least 2");
  Report r;
  r.command = "regeneration --b " + std::to_string(b) + " --depth " + std::to_string(depth);
  auto model = model_for(b);
  auto a = braids::regeneration_factorization(model, b);
  r.data["b"] = b;
  r.data["length"] = a.mu_nu.size();

  bool same = hurwitz::product_matrix(a.mu_nu, model) == hurwitz::product_matrix(a.normal_form, model);
  r.add("homology-equal", same, same ? "mu/nu block and normal form agree on H_1" : "matrices differ");

  // alpha and gamma letters live on disjoint curves: sort by family first,
  // then search each half; plain search only if that is inconclusive
  auto cmp = hurwitz::homology_comparator(model);
  auto family = [](hurwitz::Letter const &l) { return static_cast<int>(hurwitz::decode(l.core.gen).family); };
  auto res = hurwitz::blockwise_search(a.mu_nu, a.normal_form, family, depth, cmp, budget);
  std::string strategy = "blockwise";
  if (res.status != hurwitz::SearchResult::Status::found) {
    auto plain = hurwitz::hurwitz_search(a.mu_nu, a.normal_form, depth, cmp, budget);
    plain.states += res.states;
    res = plain;
    strategy = "plain";
  }
  r.data["search"] = {{"strategy", strategy}, {"depth", depth}, {"budget", budget}, {"states", res.states}};
  if (res.status == hurwitz::SearchResult::Status::found) {
    r.add("hurwitz-search", true, strategy + " script of " + script_summary(*res.script));
    r.data["search"]["script"] = hurwitz::to_json(*res.script);
  } else {
    r.add("hurwitz-search", Status::inconclusive, res.reason);
  }
  return r;
}

Report invariants(linalg::Int a, linalg::Int b, linalg::Int c, std::optional<linalg::Int> d,
                  std::optional<linalg::Int> k)
{
  invariants::CoverType t{a, b, c, d.value_or(b)};
  try {
    invariants::validate(t);
  } catch (Error const &e) {
    throw UsageError(e.what());
  }
  if (k && (*k <= 0 || *k % 2 != 0))
    throw UsageError("--k must be a positive even integer");

  Report r;
  r.command = "invariants --a " + std::to_string(a) + " --b " + std::to_string(b) + " --c " + std::to_string(c) +
              " --d " + std::to_string(t.d) + (k ? " --k " + std::to_string(*k) : "");
  auto s = invariants::invariants(t);
  r.add("invariants", true);
  r.data["type"] = invariants::to_json(t);
  r.data["invariants"] = invariants::to_json(s);
  if (auto v = invariants::chi_printed_variant(t)) {
    r.data["chi_note"] = {{"closed_form", *v},
                          {"eigensheaf", s.chi},
                          {"difference", *v - s.chi},
                          {"note", "the d = b closed form exceeds the eigensheaf sum by 3b(a+c); the eigensheaf "
                                   "value is used"}};
  }
  r.data["dimension"] = invariants::to_json(invariants::dimension_report(a, b, c));
  r.data["dimension"]["note"] = "M and the alternative expression are both reported; they are not reconciled";

  if (k) {
    auto h = invariants::theorem_hypotheses(a, b, c, *k);
    for (auto const &cond : h.conditions)
      r.add("hypothesis " + cond.name, cond.pass,
            "margin " + std::to_string(cond.margin) + (cond.detail.empty() ? "" : ", " + cond.detail));
    r.data["hypotheses"] = invariants::to_json(h);
    if (h.non_deformation()) {
      auto fam = invariants::family_enumerate(a, b, c, *k);
      auto fj = ordered_json::array();
      for (auto const &m : fam)
        fj.push_back({{"type", invariants::to_json(m.type)}, {"invariants", invariants::to_json(m.invariants)}});
      r.data["family"] = fj;
      r.add("family-invariants-equal", true, std::to_string(fam.size()) + " members");
    }
  }
  return r;
}

Report braid_eq(int n, std::vector<int> const &w1, std::vector<int> const &w2)
{
  braids::BraidWord x{n, w1}, y{n, w2};
  try {
    braids::validate(x);
    braids::validate(y);
  } catch (Error const &e) {
    throw UsageError(e.what());
  }
  Report r;
  r.command = "braid eq --n " + std::to_string(n);
  bool eq = braids::braid_equal(x, y);
  r.data["n"] = n;
  r.data["w1"] = w1;
  r.data["w2"] = w2;
  r.data["equal"] = eq;
  r.add("equal", eq, eq ? "equal in the braid group" : "different braids");
  return r;
}

Report manfredini(int n, int k)
{
  braids::ManfrediniReport m;
  try {
    m = braids::verify_manfredini(n, k);
  } catch (Error const &e) {
    if (e.code() == Errc::invalid_parameter)
      throw UsageError(e.what());
    throw;
  }
  Report r;
  r.command = "braid manfredini --n " + std::to_string(n) + " --k " + std::to_string(k);
  for (auto const &c : m.checks)
    r.add(c.name, c.skipped ? Status::pass : c.ok ? Status::pass : Status::fail,
          c.skipped ? "not applicable: " + c.notice : c.notice);
  r.data = braids::to_json(m);
  return r;
}

namespace
{

template <class F>
auto parse_or_fail(Report &r, F f) -> std::optional<decltype(f())>
{
  try {
    return f();
  } catch (std::exception const &e) {
    r.add("parse", false, e.what());
    return std::nullopt;
  }
}

} // namespace

Report hurwitz_replay(ordered_json const &doc)
{
  Report r;
  r.command = "hurwitz replay";
  auto parsed = parse_or_fail(r, [&] {
    int b = doc.at("b").get<int>();
    auto f = hurwitz::factorization_from_json(doc.at("factorization"), hurwitz::twist_parser());
    auto s = hurwitz::script_from_json(doc.at("script"));
    std::optional<hurwitz::Factorization> e;
    if (doc.contains("expected"))
      e = hurwitz::factorization_from_json(doc.at("expected"), hurwitz::twist_parser());
    return std::tuple{b, f, s, e};
  });
  if (!parsed)
    return r;
  auto [b, f, s, expected] = *parsed;
  if (b < 2) {
    r.add("parse", false, "b must be at least 2");
    return r;
  }
  auto model = model_for(b);
  hurwitz::Factorization g;
  try {
    g = hurwitz::apply_script(f, s);
  } catch (Error const &e) {
    r.add("script", false, e.what());
    return r;
  }
  r.add("script", true, script_summary(s));
  try {
    bool same = hurwitz::product_matrix(f, model) == hurwitz::product_matrix(g, model);
    r.add("product-invariant", same);
  } catch (Error const &e) {
    r.add("product-invariant", false, e.what());
  }
  if (expected) {
    bool exact = g == *expected;
    r.add("bit-exact", exact, "digest " + hex64(hurwitz::digest(g)));
  }
  r.data["digest"] = hex64(hurwitz::digest(g));
  r.data["result"] = hurwitz::to_json(g, hurwitz::twist_names());
  return r;
}

Report hurwitz_search(ordered_json const &doc, std::size_t depth, std::size_t budget)
{
  Report r;
  std::string kind = doc.value("comparator", std::string("homology"));
  r.command = "hurwitz search --depth " + std::to_string(depth) + " (" + kind + ")";
  hurwitz::Comparator cmp;
  hurwitz::GenParse parse = hurwitz::twist_parser();
  if (kind == "homology") {
    if (!doc.contains("b"))
      throw UsageError("homology comparator needs \"b\"");
    auto model = model_for(doc.at("b").get<int>());
    cmp = hurwitz::homology_comparator(model);
  } else if (kind == "symbolic") {
    cmp = hurwitz::symbolic_comparator();
  } else if (kind == "braid") {
    if (!doc.contains("n"))
      throw UsageError("braid comparator needs \"n\"");
    cmp = braids::braid_comparator(doc.at("n").get<int>());
    parse = braids::artin_parser();
  } else {
    throw UsageError("comparator must be homology, symbolic or braid");
  }
  auto parsed = parse_or_fail(r, [&] {
    return std::pair{hurwitz::factorization_from_json(doc.at("from"), parse),
                     hurwitz::factorization_from_json(doc.at("to"), parse)};
  });
  if (!parsed)
    return r;
  auto [f, g] = *parsed;
  if (f.size() != g.size()) {
    r.add("lengths", false, "factorizations have different lengths");
    return r;
  }
  auto res = hurwitz::hurwitz_search(f, g, depth, cmp, budget);
  r.data["states"] = res.states;
  if (res.status == hurwitz::SearchResult::Status::found) {
    r.add("search", true, script_summary(*res.script));
    r.data["script"] = hurwitz::to_json(*res.script);
  } else {
    r.add("search", Status::inconclusive, res.reason);
  }
  return r;
}

Report hurwitz_random(int b, std::size_t length, std::size_t max_conj, std::size_t moves, std::uint64_t seed)
{
  if (b < 2)
    throw UsageError("--b must be at least 2");
  if (length < 2)
    throw UsageError("--length must be at least 2");
  Report r;
  r.command = "hurwitz random --b " + std::to_string(b) + " --length " + std::to_string(length) + " --conj " +
              std::to_string(max_conj) + " --moves " + std::to_string(moves) + " --seed " + std::to_string(seed);
  auto model = model_for(b);
  std::mt19937_64 rng(seed);
  auto f = hurwitz::random_factorization(model, length, max_conj, rng);
  auto s = hurwitz::random_script(length, moves, rng);
  auto g = hurwitz::apply_script(f, s);
  bool same = hurwitz::product_matrix(f, model) == hurwitz::product_matrix(g, model);
  r.add("product-invariant", same, script_summary(s));
  r.data["digest"] = hex64(hurwitz::digest(g));
  ordered_json doc;
  doc["b"] = b;
  doc["factorization"] = hurwitz::to_json(f, hurwitz::twist_names());
  doc["script"] = hurwitz::to_json(s);
  doc["expected"] = hurwitz::to_json(g, hurwitz::twist_names());
  r.artifact = doc;
  return r;
}

ordered_json monodromy_emit(int b, std::string const &pattern, bool lift)
{
  if (b < 2)
    throw UsageError("--b must be at least 2");
  if (pattern.empty() || pattern.find_first_not_of("XY") != std::string::npos)
    throw UsageError("--pattern is a word over X and Y");
  int m = 2 * b;
  auto names = braids::bicoloured_names(m);
  ordered_json j;
  j["b"] = b;
  j["m"] = m;
  j["strands"] = 2 * m;
  j["blocks"] = ordered_json::array();
  for (auto const &blk : braids::monodromy_blocks(b)) {
    auto printed = ordered_json::array(), liftable = ordered_json::array();
    for (auto const &l : blk.letters) {
      printed.push_back(hurwitz::to_string(l, names));
      liftable.push_back(hurwitz::to_string(braids::make_liftable(l, m), names));
    }
    j["blocks"].push_back({{"kind", blk.kind == braids::BlockKind::X ? "X" : "Y"},
                           {"letters", printed},
                           {"liftable", liftable},
                           {"braid", braids::to_json(braids::braid_of(blk.letters, 2 * m))}});
  }
  if (lift) {
    auto model = model_for(b);
    auto f = braids::monodromy_factorization(b, model, pattern);
    j["pattern"] = pattern;
    j["lifted"] = hurwitz::to_json(f, hurwitz::twist_names());
    j["lifted_identity"] = hurwitz::product_matrix(f, model) == twist::identity(model);
  }
  return j;
}

std::string export_target(std::string const &what, int b, std::string const &format)
{
  static std::set<std::string> const targets{"config", "ribbon", "homology", "psi", "monodromy"};
  if (!targets.count(what))
    throw UsageError("unknown export target '" + what + "'");
  if (format != "json" && format != "dot")
    throw UsageError("unknown format '" + format + "'");
  if (format == "dot" && what != "config")
    throw UsageError("dot export exists only for config");
  require_b(b, 2, 64);

  if (what == "monodromy")
    return monodromy_emit(b, "XXYY", true).dump(2) + "\n";

  auto sys = surface::build_reference_configuration(b, std::nullopt);
  if (what == "config")
    return format == "dot" ? surface::to_dot(sys) : surface::to_json(sys).dump(2) + "\n";
  if (what == "ribbon")
    return surface::to_json(surface::ribbon_from_system(sys)).dump(2) + "\n";
  auto model = surface::homology_model(sys);
  if (what == "homology")
    return surface::to_json(model).dump(2) + "\n";

  ordered_json j;
  j["b"] = b;
  j["sigma_signs"] = surface::to_string(sys.sigma_signs);
  j["factors"] = ordered_json::array();
  for (auto const &f : chains::psi_factors(sys))
    j["factors"].push_back({{"name", f.name},
                            {"chain", curve_names(f.chain.curves)},
                            {"orientation", f.chain.orientation},
                            {"power", f.power},
                            {"word", twist::to_json(f.word)}});
  auto word = chains::psi_factorization(sys);
  j["word"] = twist::to_json(word);
  j["text"] = twist::to_string(word);
  j["reference_matrix"] = twist::to_json(twist::psi_reference(model));
  return j.dump(2) + "\n";
}

} // namespace monodromy::commands
