#include "monodromy/braids.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "monodromy/errors.hpp"

namespace monodromy::braids
{

using hurwitz::Letter;
using hurwitz::Syllable;
using hurwitz::Word;
using linalg::Int;
using surface::CurveId;

void validate(BraidWord const &w)
{
  if (w.n < 1)
    throw Error(Errc::invalid_parameter, "braid needs at least one strand");
  for (int g : w.letters)
    if (g == 0 || std::abs(g) > w.n - 1)
      throw Error(Errc::invalid_parameter,
                  "generator " + std::to_string(g) + " out of range for " + std::to_string(w.n) + " strands");
}

BraidWord inverse(BraidWord const &w)
{
  BraidWord out{w.n, {w.letters.rbegin(), w.letters.rend()}};
  for (auto &g : out.letters)
    g = -g;
  return out;
}

BraidWord concat(BraidWord a, BraidWord const &b)
{
  if (a.n != b.n)
    throw Error(Errc::dimension, "braids on different strand counts");
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

namespace
{

Int pos(Int x) { return std::max<Int>(x, 0); }
Int neg(Int x) { return std::min<Int>(x, 0); }

using linalg::add;
using linalg::sub;

// sigma_i^{+-1} on the pairs (x1, y1) = (a_i, b_i) and (x2, y2) = (a_{i+1}, b_{i+1})
void act_letter(Lamination &L, int g)
{
  std::size_t i = 2 * static_cast<std::size_t>(std::abs(g) - 1);
  Int x1 = L[i], y1 = L[i + 1], x2 = L[i + 2], y2 = L[i + 3];
  if (g > 0) {
    Int z = sub(add(sub(x1, neg(y1)), pos(y2)), x2);
    L[i] = add(add(x1, pos(y1)), pos(sub(pos(y2), z)));
    L[i + 1] = sub(y2, pos(z));
    L[i + 2] = add(add(x2, neg(y2)), neg(add(neg(y1), z)));
    L[i + 3] = add(y1, pos(z));
  } else {
    Int z = sub(sub(add(x1, neg(y1)), x2), pos(y2));
    L[i] = sub(sub(x1, pos(y1)), pos(add(pos(y2), z)));
    L[i + 1] = add(y2, neg(z));
    L[i + 2] = sub(sub(x2, neg(y2)), neg(sub(neg(y1), z)));
    L[i + 3] = sub(y1, neg(z));
  }
}

// round curve around punctures p..q of the (k+2)-punctured disk, k pairs
Lamination round_curve(std::size_t k, std::size_t p, std::size_t q)
{
  Lamination L(2 * k, 0);
  if (p >= 2)
    L[2 * (p - 2) + 1] = -1;
  if (q <= k + 1)
    L[2 * (q - 2) + 1] = 1;
  return L;
}

} // namespace

Lamination lamination_act(BraidWord const &w, Lamination L)
{
  validate(w);
  if (L.size() != 2 * static_cast<std::size_t>(w.n))
    throw Error(Errc::dimension, "lamination has " + std::to_string(L.size()) + " coordinates, expected " +
                                   std::to_string(2 * w.n));
  for (int g : w.letters)
    act_letter(L, g);
  return L;
}

std::vector<Lamination> filling_family(int n)
{
  if (n < 1)
    throw Error(Errc::invalid_parameter, "braid needs at least one strand");
  std::size_t const k = static_cast<std::size_t>(n), N = k + 2;
  std::vector<Lamination> out;
  for (std::size_t i = 1; i < N; ++i)
    out.push_back(round_curve(k, i, i + 1));
  for (std::size_t j = 3; j < N; ++j)
    out.push_back(round_curve(k, 1, j));
  return out;
}

bool braid_equal(BraidWord const &w1, BraidWord const &w2)
{
  auto d = concat(w1, inverse(w2));
  for (auto const &L : filling_family(d.n))
    if (lamination_act(d, L) != L)
      return false;
  return true;
}

std::vector<int> permutation(BraidWord const &w)
{
  validate(w);
  std::vector<int> at(static_cast<std::size_t>(w.n)); // at[position] = strand
  for (int i = 0; i < w.n; ++i)
    at[i] = i + 1;
  for (int g : w.letters)
    std::swap(at[std::abs(g) - 1], at[std::abs(g)]);
  std::vector<int> out(at.size());
  for (std::size_t p = 0; p < at.size(); ++p)
    out[at[p] - 1] = static_cast<int>(p) + 1;
  return out;
}

Colouring bicolouring(int m)
{
  Colouring c{{{}, {}}};
  for (int i = 1; i <= m; ++i) {
    c.blocks[0].push_back(i);
    c.blocks[1].push_back(m + i);
  }
  return c;
}

// -- Manfredini ------------------------------------------------------------

bool ManfrediniReport::all_ok() const
{ return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.ok || c.skipped; }); }

ManfrediniReport verify_manfredini(int n, int k)
{
  if (k < 1 || n - k < 2)
    throw Error(Errc::invalid_parameter, "need k >= 1 and n - k >= 2");
  int const p = n - k;
  auto w = [n](std::vector<std::vector<int>> parts) {
    BraidWord out{n, {}};
    for (auto const &q : parts)
      out.letters.insert(out.letters.end(), q.begin(), q.end());
    return out;
  };
  std::vector<int> A{p - 1}, B{p, p}, C{p + 1}, Ai{-(p - 1)}, Ci{-(p + 1)};
  auto s = [](int i) { return "s" + std::to_string(i); };

  ManfrediniReport r{n, k, {}};
  auto check = [&](std::string name, BraidWord const &lhs, BraidWord const &rhs) {
    r.checks.push_back({std::move(name), braid_equal(lhs, rhs), false, {}});
  };

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == p || j == p)
        continue;
      check(s(i) + " " + s(j) + " = " + s(j) + " " + s(i), w({{i}, {j}}), w({{j}, {i}}));
    }
  for (int i = 1; i + 1 < n; ++i) {
    if (i == p || i + 1 == p)
      continue;
    check(s(i) + " " + s(i + 1) + " " + s(i) + " = " + s(i + 1) + " " + s(i) + " " + s(i + 1),
          w({{i}, {i + 1}, {i}}), w({{i + 1}, {i}, {i + 1}}));
  }
  for (int i = 1; i < n; ++i)
    if (std::abs(i - p) >= 2)
      check("B " + s(i) + " = " + s(i) + " B", w({B, {i}}), w({{i}, B}));

  check("ABAB = BABA", w({A, B, A, B}), w({B, A, B, A}));
  if (k >= 2) {
    check("BCBC = CBCB", w({B, C, B, C}), w({C, B, C, B}));
    check("ABA^-1 CBC^-1 = CBC^-1 ABA^-1", w({A, B, Ai, C, B, Ci}), w({C, B, Ci, A, B, Ai}));
  } else {
    for (auto name : {"BCBC = CBCB", "ABA^-1 CBC^-1 = CBC^-1 ABA^-1"})
      r.checks.push_back({name, false, true, "C = s" + std::to_string(p + 1) + " does not exist for k = 1"});
  }
  return r;
}

// -- blocks ----------------------------------------------------------------

BraidWord braid_of(Letter const &l, int n)
{
  BraidWord out{n, {}};
  for (auto s : hurwitz::expansion(l))
    for (int e = 0; e < std::abs(s.exp); ++e)
      out.letters.push_back(s.exp > 0 ? s.gen : -s.gen);
  validate(out);
  return out;
}

BraidWord braid_of(std::vector<Letter> const &ls, int n)
{
  BraidWord out{n, {}};
  for (auto const &l : ls)
    out = concat(std::move(out), braid_of(l, n));
  return out;
}

namespace
{

void check_m(int m)
{
  if (m < 2)
    throw Error(Errc::invalid_parameter, "blocks need m >= 2");
}

Word run(int from, int to) // sigma_from ... sigma_to, stepping by one
{
  Word w;
  for (int i = from;; i += from <= to ? 1 : -1) {
    w.push_back({i, 1});
    if (i == to)
      break;
  }
  return w;
}

Word join(std::vector<Word> const &parts)
{
  Word out;
  for (auto const &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace

Block x_block(int m)
{
  check_m(m);
  Block b{BlockKind::X, m, {}};
  // x_1 x_1 (x_2)_{x_1} (x_2)_{x_1} ... (x_{m-1})_{x_{m-2}..x_1} twice
  for (int i = 1; i < m; ++i) {
    Word conj = i > 1 ? run(i - 1, 1) : Word{};
    b.letters.push_back({{i, 1}, conj});
    b.letters.push_back({{i, 1}, conj});
  }
  Word W = run(m - 1, 1);
  b.letters.push_back({{m, 2}, W});
  // (y_k^2)_{y_{k-1}..y_1 z x_{m-1}..x_1}
  for (int k = 1; k < m; ++k) {
    Word conj = k > 1 ? run(m + k - 1, m + 1) : Word{};
    b.letters.push_back({{m + k, 2}, join({conj, {{m, 1}}, W})});
  }
  return b;
}

Block y_block(int m)
{
  check_m(m);
  Block b{BlockKind::Y, m, {}};
  // y_{m-1} y_{m-1} (y_{m-2})_{y_{m-1}} ... (y_1)_{y_2..y_{m-1}} twice
  for (int k = m - 1; k >= 1; --k) {
    Word conj = k < m - 1 ? run(m + k + 1, 2 * m - 1) : Word{};
    b.letters.push_back({{m + k, 1}, conj});
    b.letters.push_back({{m + k, 1}, conj});
  }
  Word V = run(m + 1, 2 * m - 1);
  b.letters.push_back({{m, 2}, V});
  // (x_i^2)_{x_{i+1}..x_{m-1} z y_1..y_{m-1}} for i = m-1 down to 1
  for (int i = m - 1; i >= 1; --i) {
    Word conj = i < m - 1 ? run(i + 1, m - 1) : Word{};
    b.letters.push_back({{i, 2}, join({conj, {{m, 1}}, V})});
  }
  return b;
}

std::vector<Block> monodromy_blocks(int b)
{
  if (b < 2)
    throw Error(Errc::invalid_parameter, "b must be at least 2");
  return {x_block(2 * b), y_block(2 * b)};
}

std::vector<Letter> compose_blocks(int b, std::string const &pattern)
{
  if (pattern.empty())
    throw Error(Errc::invalid_parameter, "empty block pattern");
  auto blocks = monodromy_blocks(b);
  std::vector<Letter> out;
  for (char c : pattern) {
    if (c != 'X' && c != 'Y')
      throw Error(Errc::invalid_parameter, std::string("block pattern letter '") + c + "' is not X or Y");
    auto const &ls = blocks[c == 'X' ? 0 : 1].letters;
    out.insert(out.end(), ls.begin(), ls.end());
  }
  return out;
}

Letter make_liftable(Letter const &l, int m)
{
  check_m(m);
  auto odd_z = [m](Syllable s) { return s.gen == m && s.exp % 2 != 0; };
  auto first = std::find_if(l.conj.begin(), l.conj.end(), odd_z);
  if (first == l.conj.end())
    return l;

  auto fail = [&](std::string const &why) {
    return Error(Errc::contract, "cannot rewrite letter with core s" + std::to_string(l.core.gen) + ": " + why);
  };
  int const c = l.core.gen;
  if (c == m)
    throw fail("core is z itself");
  if (first->exp != 1)
    throw fail("z enters the conjugator with exponent " + std::to_string(first->exp));
  if (std::any_of(first + 1, l.conj.end(), odd_z))
    throw fail("more than one odd power of z in the conjugator");

  // c, Q must read c, c -+ 1, ..., next to z
  Word chain{{c, 1}};
  chain.insert(chain.end(), l.conj.begin(), first);
  int step = c > m ? -1 : 1;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].gen != c + step * static_cast<int>(i) || chain[i].exp != 1)
      throw fail("conjugator does not run from the core to z");
  if (chain.back().gen + step != m)
    throw fail("conjugator does not reach z");

  Word conj = hurwitz::inverse(chain);
  conj.insert(conj.end(), first + 1, l.conj.end());
  Letter out = hurwitz::conjugate({{m, l.core.exp}, {}}, conj);

  int const n = 2 * m;
  if (!braid_equal(braid_of(l, n), braid_of(out, n)))
    throw fail("rewritten letter is a different braid");
  return out;
}

std::vector<Letter> make_liftable(std::vector<Letter> const &ls, int m)
{
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (auto const &l : ls)
    out.push_back(make_liftable(l, m));
  return out;
}

hurwitz::Factorization lift_to_twists(std::vector<Letter> const &ls, int m, surface::HomologyModel const &model)
{
  check_m(m);
  if (!model.has(CurveId::alpha(m - 1)) || model.has(CurveId::alpha(m)))
    throw Error(Errc::invalid_parameter, "model does not carry chains of length " + std::to_string(m - 1));

  auto pair = [m](int g) -> std::pair<CurveId, CurveId> {
    if (g < m)
      return {CurveId::alpha(m - g), CurveId::gamma(m - g)};
    return {CurveId::beta(g - m), CurveId::delta(g - m)};
  };
  auto sigma = hurwitz::encode(CurveId::sigma());

  hurwitz::Factorization f;
  f.model = model.fingerprint;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    auto const &l = ls[k];
    auto fail = [&](std::string const &why) {
      return Error(Errc::contract, "letter " + std::to_string(k + 1) + " is not liftable: " + why);
    };
    Word conj;
    for (auto s : l.conj) {
      if (s.gen < 1 || s.gen >= 2 * m)
        throw fail("generator s" + std::to_string(s.gen) + " out of range");
      if (s.gen == m) {
        if (s.exp % 2 != 0)
          throw fail("odd power of z in the conjugator");
        conj.push_back({sigma, s.exp / 2});
      } else {
        auto [p, q] = pair(s.gen);
        conj.push_back({hurwitz::encode(p), s.exp});
        conj.push_back({hurwitz::encode(q), s.exp});
      }
    }
    conj = hurwitz::reduce(conj);

    int g = l.core.gen, e = l.core.exp;
    if (g < 1 || g >= 2 * m)
      throw fail("generator s" + std::to_string(g) + " out of range");
    if (g == m) {
      if (e != 2 && e != -2)
        throw fail("a cross-colour core must be z^2 or z^-2");
      f.letters.push_back(hurwitz::conjugate({{sigma, e / 2}, {}}, conj));
    } else {
      if (e != 1 && e != -1)
        throw fail("a same-colour core must be a half twist");
      auto [p, q] = pair(g);
      f.letters.push_back(hurwitz::conjugate({{hurwitz::encode(p), e}, {}}, conj));
      f.letters.push_back(hurwitz::conjugate({{hurwitz::encode(q), e}, {}}, conj));
    }
  }
  return f;
}

hurwitz::Factorization monodromy_factorization(int b, surface::HomologyModel const &model,
                                               std::string const &pattern)
{ return lift_to_twists(make_liftable(compose_blocks(b, pattern), 2 * b), 2 * b, model); }

// -- regeneration factorization ---------------------------------------------

hurwitz::Factorization RegenerationFactorization::combined() const
{ return hurwitz::fiber_sum(hurwitz::fiber_sum(mu_nu, sigma), beta_delta); }

RegenerationFactorization regeneration_factorization(surface::HomologyModel const &model, int b)
{
  if (b < 2)
    throw Error(Errc::invalid_parameter, "b must be at least 2");
  int const n = 2 * b - 1;
  if (!model.has(CurveId::alpha(n)) || model.has(CurveId::alpha(n + 1)))
    throw Error(Errc::invalid_parameter, "model does not match b = " + std::to_string(b));

  using surface::Family;
  auto conjugated = [](Family f, int j) { // core c_{j-1}, conj c_{j-2}^-1 .. c_1^-1
    twist::TwistWord conj;
    for (int i = j - 2; i >= 1; --i)
      conj.push_back({{f, i}, -1});
    return hurwitz::twist_letter({f, j - 1}, 1, conj);
  };
  auto palindrome = [&](Family f, bool up) { // c_1 .. c_{n-1} c_n^2 c_{n-1} .. c_1, or around c_1
    twist::TwistWord w;
    if (up) {
      for (int i = 1; i < n; ++i)
        w.push_back({{f, i}, 1});
      w.push_back({{f, n}, 1});
      w.push_back({{f, n}, 1});
      for (int i = n - 1; i >= 1; --i)
        w.push_back({{f, i}, 1});
    } else {
      for (int i = n; i > 1; --i)
        w.push_back({{f, i}, 1});
      w.push_back({{f, 1}, 1});
      w.push_back({{f, 1}, 1});
      for (int i = 2; i <= n; ++i)
        w.push_back({{f, i}, 1});
    }
    return w;
  };
  auto cat = [](twist::TwistWord a, twist::TwistWord const &b2) {
    a.insert(a.end(), b2.begin(), b2.end());
    return a;
  };

  RegenerationFactorization out;
  out.mu_nu.model = model.fingerprint;
  for (int j = 2 * b; j >= 2; --j)
    for (Family f : {Family::Alpha, Family::Gamma})
      for (int r = 0; r < 2; ++r)
        out.mu_nu.letters.push_back(conjugated(f, j));
  out.normal_form = hurwitz::from_twist_word(model, cat(palindrome(Family::Alpha, true), palindrome(Family::Gamma, true)));
  out.sigma = hurwitz::from_twist_word(model, {{CurveId::sigma(), 1}});
  out.beta_delta =
    hurwitz::from_twist_word(model, cat(palindrome(Family::Beta, false), palindrome(Family::Delta, false)));
  return out;
}

// -- image-level checks ----------------------------------------------------

std::vector<int> permutation_image(std::vector<Letter> const &ls, int n, Colouring const &c)
{
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < c.blocks.size(); ++k)
    for (int s : c.blocks[k]) {
      if (s < 1 || s > n || block_of[s] != -1)
        throw Error(Errc::invalid_parameter, "colouring is not a partition of the strands");
      block_of[s] = static_cast<int>(k);
    }
  if (std::find(block_of.begin() + 1, block_of.end(), -1) != block_of.end())
    throw Error(Errc::invalid_parameter, "colouring does not cover every strand");

  std::vector<int> total(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    total[i] = i + 1;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    auto p = permutation(braid_of(ls[k], n));
    for (int s = 1; s <= n; ++s)
      if (block_of[s] != block_of[p[s - 1]])
        throw Error(Errc::colour_violation, "letter " + std::to_string(k + 1) + " sends strand " +
                                              std::to_string(s) + " to " + std::to_string(p[s - 1]));
    for (auto &t : total)
      t = p[t - 1];
  }
  return total;
}

std::string to_string(Presence p)
{
  switch (p) {
  case Presence::bare: return "bare";
  case Presence::conjugated: return "conjugated";
  case Presence::absent: return "absent";
  }
  return "?";
}

bool GenerationReport::all_present() const
{
  return std::all_of(generators.begin(), generators.end(),
                     [](auto const &g) { return g.presence != Presence::absent; });
}

GenerationReport generation_check(std::vector<Letter> const &ls, int m)
{
  check_m(m);
  auto names = bicoloured_names(m);
  GenerationReport r;
  for (int g = 1; g < 2 * m; ++g) {
    GeneratorPresence p{g == m ? "z2" : names(g), g, Presence::absent};
    for (auto const &l : ls) {
      if (l.core.gen != g || (g == m && l.core.exp % 2 != 0))
        continue;
      if (l.conj.empty()) {
        p.presence = Presence::bare;
        break;
      }
      p.presence = Presence::conjugated;
    }
    r.generators.push_back(p);
  }
  return r;
}

hurwitz::Comparator braid_comparator(int n)
{
  auto family = std::make_shared<std::vector<Lamination> const>(filling_family(n));
  return [family, n](Letter const &l) {
    auto w = braid_of(l, n);
    hurwitz::LetterKey key;
    for (auto const &L : *family) {
      auto img = lamination_act(w, L);
      key.insert(key.end(), img.begin(), img.end());
    }
    return key;
  };
}

hurwitz::GenName artin_names()
{ return [](int g) { return "s" + std::to_string(g); }; }

hurwitz::GenParse artin_parser()
{
  return [](std::string const &s) {
    std::string digits = !s.empty() && s[0] == 's' ? s.substr(1) : s;
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(digits, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used == 0 || used != digits.size() || g < 1)
      throw Error(Errc::parse, "not an Artin generator: '" + s + "'");
    return g;
  };
}

hurwitz::GenName bicoloured_names(int m)
{
  return [m](int g) {
    if (g < m)
      return "x" + std::to_string(g);
    if (g == m)
      return std::string("z");
    return "y" + std::to_string(g - m);
  };
}

using nlohmann::ordered_json;

ordered_json to_json(BraidWord const &w)
{ return {{"n", w.n}, {"word", w.letters}}; }

BraidWord braid_from_json(ordered_json const &j)
{
  try {
    BraidWord w{j.at("n").get<int>(), j.at("word").get<std::vector<int>>()};
    validate(w);
    return w;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, std::string("braid word: ") + e.what());
  }
}

ordered_json to_json(ManfrediniReport const &r)
{
  ordered_json checks = ordered_json::array();
  for (auto const &c : r.checks) {
    ordered_json x{{"relation", c.name}, {"status", c.skipped ? "skipped" : c.ok ? "holds" : "fails"}};
    if (!c.notice.empty())
      x["notice"] = c.notice;
    checks.push_back(x);
  }
  return {{"n", r.n}, {"k", r.k}, {"all_hold", r.all_ok()}, {"relations", checks}};
}

ordered_json to_json(GenerationReport const &r)
{
  ordered_json gens = ordered_json::array();
  for (auto const &g : r.generators)
    gens.push_back({{"generator", g.name}, {"presence", to_string(g.presence)}});
  return {{"all_present", r.all_present()}, {"generators", gens}};
}

} // namespace monodromy::braids
