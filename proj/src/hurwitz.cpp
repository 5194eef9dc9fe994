#include "monodromy/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "monodromy/errors.hpp"
#include "monodromy/hash.hpp"

namespace monodromy::hurwitz
{

using linalg::Int;
using linalg::IntVector;
using surface::CurveId;

Word reduce(Word const &w)
{
  Word out;
  for (auto s : w) {
    if (s.exp == 0)
      continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0)
        out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Word inverse(Word const &w)
{
  Word out(w.rbegin(), w.rend());
  for (auto &s : out)
    s.exp = -s.exp;
  return out;
}

Word concat(Word a, Word const &b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word expansion(Letter const &l)
{
  Word w = inverse(l.conj);
  w.push_back(l.core);
  return concat(std::move(w), l.conj);
}

Letter conjugate(Letter const &l, Word const &by)
{
  Letter out{l.core, reduce(concat(l.conj, by))};
  // (c^e)_{c^k w} = (c^e)_w
  if (!out.conj.empty() && out.conj.front().gen == out.core.gen)
    out.conj.erase(out.conj.begin());
  return out;
}

Move inverse(Move m)
{ return {m.index, m.dir == Direction::left ? Direction::right : Direction::left}; }

Script inverse(Script const &s)
{
  Script out;
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    out.push_back(inverse(*it));
  return out;
}

void apply_move(Factorization &f, Move m)
{
  if (m.index < 1 || m.index >= f.letters.size())
    throw Error(Errc::index_out_of_range,
                "move index " + std::to_string(m.index) + " outside [1, " +
                  std::to_string(f.letters.size() == 0 ? 0 : f.letters.size() - 1) + "]");
  auto &a = f.letters[m.index - 1];
  auto &b = f.letters[m.index];
  if (m.dir == Direction::right) {
    Letter moved = conjugate(a, expansion(b));
    a = std::move(b);
    b = std::move(moved);
  } else {
    Letter moved = conjugate(b, inverse(expansion(a)));
    b = std::move(a);
    a = std::move(moved);
  }
}

Factorization hurwitz_move(Factorization const &f, std::size_t index, Direction dir)
{
  Factorization out = f;
  apply_move(out, {index, dir});
  return out;
}

Factorization apply_script(Factorization f, Script const &s)
{
  for (auto m : s)
    apply_move(f, m);
  return f;
}

std::pair<Factorization, Script> rotate_to_front(Factorization const &f, std::size_t h)
{
  if (h < 1 || h > f.size())
    throw Error(Errc::index_out_of_range, "rotation index out of range");
  Script s;
  for (std::size_t i = h - 1; i >= 1; --i)
    s.push_back({i, Direction::right});
  return {apply_script(f, s), s};
}

std::uint64_t digest(Factorization const &f)
{
  Fnv1a h;
  h.i64(static_cast<std::int64_t>(f.letters.size()));
  for (auto const &l : f.letters) {
    h.i64(l.core.gen).i64(l.core.exp).i64(static_cast<std::int64_t>(l.conj.size()));
    for (auto s : l.conj)
      h.i64(s.gen).i64(s.exp);
  }
  return h.value();
}

int encode(CurveId c)
{ return static_cast<int>(c.family) * 4096 + c.index; }

CurveId decode(int gen)
{
  int fam = gen / 4096, index = gen % 4096;
  if (gen < 0 || fam > static_cast<int>(surface::Family::Sigma))
    throw Error(Errc::lookup, "not a curve generator: " + std::to_string(gen));
  CurveId c{static_cast<surface::Family>(fam), index};
  if ((c.family == surface::Family::Sigma) != (index == 0))
    throw Error(Errc::lookup, "not a curve generator: " + std::to_string(gen));
  return c;
}

Word to_word(twist::TwistWord const &w)
{
  Word out;
  for (auto const &l : w)
    out.push_back({encode(l.curve), l.sign});
  return reduce(out);
}

twist::TwistWord to_twist_word(Word const &w)
{
  twist::TwistWord out;
  for (auto s : w)
    for (int k = 0; k < std::abs(s.exp); ++k)
      out.push_back({decode(s.gen), s.exp > 0 ? 1 : -1});
  return out;
}

Letter twist_letter(CurveId core, int sign, twist::TwistWord const &conj)
{ return conjugate({{encode(core), sign}, {}}, to_word(conj)); }

Factorization from_twist_word(surface::HomologyModel const &model, twist::TwistWord const &w)
{
  Factorization f;
  f.model = model.fingerprint;
  for (auto const &l : w)
    f.letters.push_back(twist_letter(l.curve, l.sign));
  return f;
}

namespace
{

void check_model(Factorization const &f, surface::HomologyModel const &model)
{
  if (f.model != model.fingerprint)
    throw Error(Errc::cross_model, "factorization belongs to a different homology model");
}

using Big = boost::multiprecision::cpp_int;
using BigVector = std::vector<Big>;

Int narrow(Big const &x)
{
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw Error(Errc::overflow, "result does not fit in int64");
  return static_cast<Int>(x);
}

IntVector narrow(BigVector const &x)
{
  IntVector out;
  out.reserve(x.size());
  for (auto const &y : x)
    out.push_back(narrow(y));
  return out;
}

// Curve classes and their images under the form, per encoded generator.
class ClassTable
{
public:
  explicit ClassTable(surface::HomologyModel const &model) : _rank(model.rank())
  {
    for (auto c : model.curves) {
      IntVector v = model.curve_class(c);
      _gens[encode(c)] = {v, model.form * std::span<Int const>(v)};
    }
  }

  IntVector const &v(int gen) const { return at(gen).v; }
  IntVector const &Jv(int gen) const { return at(gen).Jv; }

  // conj^-1 T_c conj = T_{conj^-1 c}: apply the inverse syllables in order,
  // T_s^-e (x) = x + e <x,s> s. Entries grow exponentially along long
  // Hurwitz orbits, hence the unbounded integers.
  BigVector push(Letter const &l) const
  {
    auto const &c = v(l.core.gen);
    BigVector x(c.begin(), c.end());
    for (auto s : l.conj) {
      auto const &g = at(s.gen);
      Big p = 0;
      for (std::size_t i = 0; i < _rank; ++i)
        if (g.Jv[i] != 0)
          p += x[i] * g.Jv[i];
      if (p == 0)
        continue;
      p *= s.exp;
      for (std::size_t i = 0; i < _rank; ++i)
        if (g.v[i] != 0)
          x[i] += p * g.v[i];
    }
    return x;
  }

  BigVector form_times(surface::HomologyModel const &model, BigVector const &x) const
  {
    BigVector out(_rank);
    for (std::size_t i = 0; i < _rank; ++i)
      for (std::size_t j = 0; j < _rank; ++j)
        if (model.form(i, j) != 0)
          out[i] += x[j] * model.form(i, j);
    return out;
  }

private:
  struct Gen
  {
    IntVector v, Jv;
  };

  Gen const &at(int gen) const
  {
    auto it = _gens.find(gen);
    if (it == _gens.end())
      throw Error(Errc::lookup, "generator " + std::to_string(gen) + " is not a curve of the model");
    return it->second;
  }

  std::size_t _rank;
  std::map<int, Gen> _gens;
};

// M <- M * T_v^e = M - e (M v)(J v)^T, M row-major n x n
void right_multiply_twist(std::vector<Big> &M, std::size_t n, BigVector const &v, BigVector const &Jv, int e)
{
  for (std::size_t i = 0; i < n; ++i) {
    Big Mv = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0)
        Mv += M[i * n + j] * v[j];
    if (Mv == 0)
      continue;
    Mv *= e;
    for (std::size_t j = 0; j < n; ++j)
      if (Jv[j] != 0)
        M[i * n + j] -= Mv * Jv[j];
  }
}

twist::MappingClassMatrix product_of(std::vector<Letter> const &letters, surface::HomologyModel const &model)
{
  ClassTable table(model);
  std::size_t const n = model.rank();
  std::vector<Big> M(n * n);
  for (std::size_t i = 0; i < n; ++i)
    M[i * n + i] = 1;
  for (auto const &l : letters) {
    BigVector v = table.push(l);
    right_multiply_twist(M, n, v, table.form_times(model, v), l.core.exp);
  }
  linalg::IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = narrow(M[i * n + j]);
  return {std::move(out), model.fingerprint, {}};
}

} // namespace

IntVector letter_class(Letter const &l, surface::HomologyModel const &model)
{ return narrow(ClassTable(model).push(l)); }

twist::MappingClassMatrix letter_matrix(Letter const &l, surface::HomologyModel const &model)
{ return product_of({l}, model); }

twist::MappingClassMatrix product_matrix(Factorization const &f, surface::HomologyModel const &model)
{
  check_model(f, model);
  return product_of(f.letters, model);
}

Factorization fiber_sum(Factorization const &f, Factorization const &g)
{
  if (f.model != g.model)
    throw Error(Errc::cross_model, "fibre sum of factorizations over different models");
  Factorization out = f;
  out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
  return out;
}

Factorization twisted_fiber_sum(Factorization const &f, Factorization const &g,
                                twist::TwistWord const &psi)
{
  Factorization h = g;
  Word by = to_word(psi);
  for (auto &l : h.letters)
    l = conjugate(l, by);
  return fiber_sum(f, h);
}

Factorization random_factorization(surface::HomologyModel const &model, std::size_t length,
                                   std::size_t max_conj, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<std::size_t> pick(0, model.curves.size() - 1);
  std::uniform_int_distribution<std::size_t> conj_len(0, max_conj);
  std::bernoulli_distribution coin(0.5);
  Factorization f;
  f.model = model.fingerprint;
  for (std::size_t i = 0; i < length; ++i) {
    twist::TwistWord conj;
    for (std::size_t k = conj_len(rng); k > 0; --k)
      conj.push_back({model.curves[pick(rng)], coin(rng) ? 1 : -1});
    f.letters.push_back(twist_letter(model.curves[pick(rng)], coin(rng) ? 1 : -1, conj));
  }
  return f;
}

Script random_script(std::size_t length, std::size_t moves, std::mt19937_64 &rng)
{
  if (length < 2)
    return {};
  std::uniform_int_distribution<std::size_t> pick(1, length - 1);
  std::bernoulli_distribution coin(0.5);
  Script s;
  for (std::size_t k = 0; k < moves; ++k)
    s.push_back({pick(rng), coin(rng) ? Direction::left : Direction::right});
  return s;
}

// -- certificate ------------------------------------------------------------

namespace
{

// Strips the conjugator of one letter by pulling bare twists on the
// conjugating curves next to it, one syllable at a time from the right end.
// Candidates are themselves exposed recursively inside a shrinking window.
class Exposer
{
public:
  explicit Exposer(Factorization f) : _f(std::move(f)) {}

  Factorization const &factorization() const { return _f; }
  Script const &script() const { return _script; }

  bool expose(std::size_t &pos, std::size_t lo, std::size_t hi)
  {
    while (!_f.letters[pos].conj.empty()) {
      if (++_effort > effort_limit)
        return false;
      Syllable last = _f.letters[pos].conj.back();
      Syllable want{last.gen, 1};
      bool done = false;

      if (last.exp > 0) {
        for (std::size_t q = pos; q-- > lo && !done;) {
          if (_f.letters[q].core != want)
            continue;
          auto saved = save();
          std::size_t at = q;
          if (pos > lo && expose(at, lo, pos - 1)) {
            for (; at + 1 < pos; ++at)
              move({at + 1, Direction::left});
            move({pos, Direction::left});
            --pos;
            done = true;
          } else {
            restore(saved);
          }
        }
      } else {
        for (std::size_t q = pos + 1; q <= hi && !done; ++q) {
          if (_f.letters[q].core != want)
            continue;
          auto saved = save();
          std::size_t at = q;
          if (expose(at, pos + 1, hi)) {
            for (; at > pos + 1; --at)
              move({at, Direction::right});
            move({pos + 1, Direction::right});
            ++pos;
            done = true;
          } else {
            restore(saved);
          }
        }
      }
      if (!done)
        return false;
    }
    return true;
  }

private:
  static constexpr std::size_t effort_limit = 200000;

  struct Saved
  {
    Factorization f;
    std::size_t moves;
  };

  Saved save() const { return {_f, _script.size()}; }
  void restore(Saved const &s)
  {
    _f = s.f;
    _script.resize(s.moves);
  }

  void move(Move m)
  {
    apply_move(_f, m);
    _script.push_back(m);
  }

  Factorization _f;
  Script _script;
  std::size_t _effort = 0;
};

std::vector<std::uint64_t> digests_along(Factorization f, Script const &s)
{
  std::vector<std::uint64_t> out;
  for (auto m : s) {
    apply_move(f, m);
    out.push_back(digest(f));
  }
  return out;
}

} // namespace

AurouxCertificate auroux_certificate(Factorization const &f, twist::TwistWord const &psi,
                                     surface::HomologyModel const &model)
{
  check_model(f, model);
  AurouxCertificate cert{model.fingerprint, digest(f), {}};
  if (psi.empty())
    return cert;

  std::vector<CurveId> cores;
  for (auto const &l : psi)
    if (std::find(cores.begin(), cores.end(), l.curve) == cores.end())
      cores.push_back(l.curve);

  std::vector<std::string> missing;
  for (auto c : cores) {
    bool present = std::any_of(f.letters.begin(), f.letters.end(), [&](Letter const &l) {
      return l.core == Syllable{encode(c), 1};
    });
    if (!present)
      missing.push_back(surface::to_string(c));
  }
  if (!missing.empty()) {
    std::string list;
    for (auto const &m : missing)
      list += (list.empty() ? "" : ", ") + m;
    throw HypothesisUnmet(missing, "cores absent from the factorization: " + list);
  }
  if (product_matrix(f, model) != twist::identity(model))
    throw Error(Errc::contract, "factorization is not a factorization of the identity");

  std::vector<std::string> stuck;
  for (auto c : cores) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.letters[i].core == Syllable{encode(c), 1})
        candidates.push_back(i);
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t x, std::size_t y) {
      return f.letters[x].conj.size() < f.letters[y].conj.size();
    });

    bool found = false;
    for (auto h : candidates) {
      Exposer ex(f);
      std::size_t pos = h;
      if (!ex.expose(pos, 0, f.size() - 1))
        continue;
      Script s = ex.script();
      auto rotated = rotate_to_front(ex.factorization(), pos + 1);
      s.insert(s.end(), rotated.second.begin(), rotated.second.end());
      cert.entries.push_back({c, h + 1, s, digests_along(f, s)});
      found = true;
      break;
    }
    if (!found)
      stuck.push_back(surface::to_string(c));
  }
  if (!stuck.empty())
    throw HypothesisUnmet(stuck, "no bare occurrence could be exposed");
  return cert;
}

ReplayResult replay(AurouxCertificate const &cert, Factorization const &f,
                    surface::HomologyModel const &model)
{
  auto fail = [](std::optional<std::size_t> e, std::optional<std::size_t> m, std::string msg) {
    return ReplayResult{false, e, m, std::move(msg)};
  };
  if (cert.model != model.fingerprint || f.model != model.fingerprint)
    return fail({}, {}, "certificate belongs to a different homology model");
  if (cert.initial != digest(f))
    return fail({}, {}, "certificate was issued for a different factorization");

  auto identity = twist::identity(model);
  for (std::size_t k = 0; k < cert.entries.size(); ++k) {
    auto const &e = cert.entries[k];
    if (e.digests.size() != e.script.size())
      return fail(k, {}, "digest count does not match the script");
    Factorization g = f;
    for (std::size_t j = 0; j < e.script.size(); ++j) {
      try {
        apply_move(g, e.script[j]);
      } catch (Error const &err) {
        return fail(k, j, err.what());
      }
      if (digest(g) != e.digests[j])
        return fail(k, j, "digest mismatch after move");
    }
    Letter want{{encode(e.core), 1}, {}};
    if (g.letters.empty() || g.letters.front() != want)
      return fail(k, {}, "first letter is not the bare twist on " + surface::to_string(e.core));
    if (letter_matrix(g.letters.front(), model) != twist::dehn_twist(model, e.core, 1))
      return fail(k, {}, "first letter matrix differs from the twist");
    if (product_matrix(g, model) != identity)
      return fail(k, {}, "product changed");
  }
  return {};
}

// -- search -----------------------------------------------------------------

Comparator homology_comparator(surface::HomologyModel const &model)
{
  auto table = std::make_shared<ClassTable const>(model);
  return [table](Letter const &l) {
    IntVector x = narrow(table->push(l));
    auto nz = std::find_if(x.begin(), x.end(), [](Int y) { return y != 0; });
    if (nz != x.end() && *nz < 0)
      for (auto &y : x)
        y = linalg::neg(y);
    LetterKey key{l.core.exp};
    key.insert(key.end(), x.begin(), x.end());
    return key;
  };
}

Comparator symbolic_comparator()
{
  return [](Letter const &l) {
    LetterKey key{l.core.gen, l.core.exp};
    for (auto s : l.conj) {
      key.push_back(s.gen);
      key.push_back(s.exp);
    }
    return key;
  };
}

std::size_t default_budget()
{
  if (char const *env = std::getenv("MWB_BUDGET")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 200000;
}

namespace
{

std::string state_key(Factorization const &f, Comparator const &cmp)
{
  std::string out;
  for (auto const &l : f.letters) {
    auto k = cmp(l);
    auto n = static_cast<std::int64_t>(k.size());
    out.append(reinterpret_cast<char const *>(&n), sizeof n);
    out.append(reinterpret_cast<char const *>(k.data()), k.size() * sizeof(std::int64_t));
  }
  return out;
}

struct Tree
{
  struct Node
  {
    Factorization state;
    long parent;
    Move move;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> frontier;
  std::size_t depth = 0;

  Script path(std::size_t id) const
  {
    Script s;
    for (long k = static_cast<long>(id); nodes[static_cast<std::size_t>(k)].parent >= 0;
         k = nodes[static_cast<std::size_t>(k)].parent)
      s.push_back(nodes[static_cast<std::size_t>(k)].move);
    std::reverse(s.begin(), s.end());
    return s;
  }
};

} // namespace

bool letterwise_equal(Factorization const &f, Factorization const &g, Comparator const &cmp)
{
  if (f.size() != g.size())
    return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (cmp(f.letters[i]) != cmp(g.letters[i]))
      return false;
  return true;
}

SearchResult hurwitz_search(Factorization const &f, Factorization const &g, std::size_t max_depth,
                            Comparator const &cmp, std::size_t budget)
{
  if (f.model != g.model)
    throw Error(Errc::cross_model, "search between factorizations over different models");
  if (f.size() != g.size())
    throw Error(Errc::dimension, "Hurwitz moves preserve length; lengths differ");

  SearchResult result;
  Tree fwd, bwd;
  auto seed = [&](Tree &t, Factorization const &x) {
    t.nodes.push_back({x, -1, {}});
    t.index.emplace(state_key(x, cmp), 0);
    t.frontier = {0};
  };
  seed(fwd, f);
  seed(bwd, g);

  auto finish = [&](std::size_t in_fwd, std::size_t in_bwd) {
    Script s = fwd.path(in_fwd);
    Script back = inverse(bwd.path(in_bwd));
    s.insert(s.end(), back.begin(), back.end());
    result.states = fwd.nodes.size() + bwd.nodes.size();
    if (letterwise_equal(apply_script(f, s), g, cmp)) {
      result.status = SearchResult::Status::found;
      result.script = std::move(s);
    } else {
      result.reason = "candidate script failed replay";
    }
    return result;
  };

  if (auto it = bwd.index.find(state_key(f, cmp)); it != bwd.index.end())
    return finish(0, it->second);

  std::size_t const n = f.size();
  while (fwd.depth + bwd.depth < max_depth) {
    bool grow_fwd = fwd.frontier.size() <= bwd.frontier.size();
    Tree &t = grow_fwd ? fwd : bwd;
    Tree &other = grow_fwd ? bwd : fwd;
    if (t.frontier.empty())
      break;

    std::vector<std::size_t> next;
    for (auto id : t.frontier) {
      for (std::size_t i = 1; i < n; ++i)
        for (auto dir : {Direction::right, Direction::left}) {
          Factorization s = hurwitz_move(t.nodes[id].state, i, dir);
          std::string key = state_key(s, cmp);
          if (t.index.count(key))
            continue;
          std::size_t nid = t.nodes.size();
          t.nodes.push_back({std::move(s), static_cast<long>(id), {i, dir}});
          t.index.emplace(key, nid);
          next.push_back(nid);
          if (auto hit = other.index.find(key); hit != other.index.end())
            return grow_fwd ? finish(nid, hit->second) : finish(hit->second, nid);
          if (fwd.nodes.size() + bwd.nodes.size() > budget) {
            result.states = fwd.nodes.size() + bwd.nodes.size();
            result.reason = "state budget exhausted";
            return result;
          }
        }
    }
    t.frontier = std::move(next);
    ++t.depth;
  }
  result.states = fwd.nodes.size() + bwd.nodes.size();
  result.reason = "no script within depth " + std::to_string(max_depth);
  return result;
}

SearchResult blockwise_search(Factorization const &f, Factorization const &g, Grouping const &group,
                              std::size_t max_depth, Comparator const &cmp, std::size_t budget)
{
  if (f.model != g.model)
    throw Error(Errc::cross_model, "search between factorizations over different models");
  if (f.size() != g.size())
    throw Error(Errc::dimension, "Hurwitz moves preserve length; lengths differ");

  SearchResult result;
  std::size_t const n = g.size();
  // block boundaries of the target, which must be grouped already
  std::vector<std::size_t> starts{0};
  std::vector<int> order;
  for (std::size_t i = 0; i < n; ++i) {
    int k = group(g.letters[i]);
    if (order.empty() || order.back() != k) {
      if (std::find(order.begin(), order.end(), k) != order.end()) {
        result.reason = "target letters are not grouped";
        return result;
      }
      if (i > 0)
        starts.push_back(i);
      order.push_back(k);
    }
  }
  starts.push_back(n);
  auto rank = [&](Letter const &l) {
    auto it = std::find(order.begin(), order.end(), group(l));
    return static_cast<std::size_t>(it - order.begin());
  };

  // insertion sort by block rank; each right move carries the later letter
  // forward unchanged
  Script script;
  Factorization sorted = f;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j > 0 && rank(sorted.letters[j]) < rank(sorted.letters[j - 1]); --j) {
      Move m{j, Direction::right};
      apply_move(sorted, m);
      script.push_back(m);
    }
  for (std::size_t b = 0; b + 1 < starts.size(); ++b)
    for (std::size_t i = starts[b]; i < starts[b + 1]; ++i)
      if (rank(sorted.letters[i]) != b) {
        result.reason = "block sizes differ";
        return result;
      }

  for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
    Factorization x{{}, f.model}, y{{}, g.model};
    x.letters.assign(sorted.letters.begin() + starts[b], sorted.letters.begin() + starts[b + 1]);
    y.letters.assign(g.letters.begin() + starts[b], g.letters.begin() + starts[b + 1]);
    auto r = hurwitz_search(x, y, max_depth, cmp, budget > result.states ? budget - result.states : 0);
    result.states += r.states;
    if (r.status != SearchResult::Status::found) {
      result.reason = "block " + std::to_string(b + 1) + ": " + r.reason;
      return result;
    }
    for (auto m : *r.script)
      script.push_back({m.index + starts[b], m.dir});
  }
  if (!letterwise_equal(apply_script(f, script), g, cmp)) {
    result.reason = "blockwise script failed replay";
    return result;
  }
  result.status = SearchResult::Status::found;
  result.script = std::move(script);
  return result;
}

// -- serialisation ----------------------------------------------------------

GenName twist_names()
{ return [](int g) { return surface::to_string(decode(g)); }; }

GenParse twist_parser()
{ return [](std::string const &s) { return encode(surface::parse_curve(s)); }; }

using nlohmann::ordered_json;

ordered_json to_json(Factorization const &f, GenName const &name)
{
  ordered_json j;
  j["model"] = f.model ? ordered_json(hex64(f.model)) : ordered_json(nullptr);
  j["letters"] = ordered_json::array();
  for (auto const &l : f.letters) {
    auto conj = ordered_json::array();
    for (auto s : l.conj)
      conj.push_back(ordered_json::array({name(s.gen), s.exp}));
    j["letters"].push_back({{"core", name(l.core.gen)}, {"exp", l.core.exp}, {"conj", conj}});
  }
  return j;
}

namespace
{

std::uint64_t parse_hex(std::string const &s)
{
  char *end = nullptr;
  auto v = std::strtoull(s.c_str(), &end, 16);
  if (s.empty() || *end != '\0')
    throw Error(Errc::parse, "bad hex digest '" + s + "'");
  return v;
}

} // namespace

Factorization factorization_from_json(ordered_json const &j, GenParse const &parse)
{
  try {
    Factorization f;
    if (j.contains("model") && !j.at("model").is_null())
      f.model = parse_hex(j.at("model").get<std::string>());
    for (auto const &l : j.at("letters")) {
      Letter letter{{parse(l.at("core").get<std::string>()), l.value("exp", 1)}, {}};
      if (l.contains("conj"))
        for (auto const &s : l.at("conj"))
          letter.conj.push_back({parse(s.at(0).get<std::string>()), s.at(1).get<int>()});
      f.letters.push_back(std::move(letter));
    }
    return f;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

ordered_json to_json(Script const &s)
{
  auto j = ordered_json::array();
  for (auto m : s)
    j.push_back({{"index", m.index}, {"dir", m.dir == Direction::right ? "right" : "left"}});
  return j;
}

Script script_from_json(ordered_json const &j)
{
  try {
    Script s;
    for (auto const &m : j) {
      auto dir = m.at("dir").get<std::string>();
      if (dir != "left" && dir != "right")
        throw Error(Errc::parse, "move direction must be left or right");
      s.push_back({m.at("index").get<std::size_t>(), dir == "right" ? Direction::right : Direction::left});
    }
    return s;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

ordered_json to_json(AurouxCertificate const &c)
{
  ordered_json j;
  j["model"] = hex64(c.model);
  j["initial"] = hex64(c.initial);
  j["entries"] = ordered_json::array();
  for (auto const &e : c.entries) {
    auto ds = ordered_json::array();
    for (auto d : e.digests)
      ds.push_back(hex64(d));
    j["entries"].push_back({{"core", surface::to_string(e.core)},
                            {"source", e.source},
                            {"moves", to_json(e.script)},
                            {"digests", ds}});
  }
  return j;
}

AurouxCertificate certificate_from_json(ordered_json const &j)
{
  try {
    AurouxCertificate c;
    c.model = parse_hex(j.at("model").get<std::string>());
    c.initial = parse_hex(j.at("initial").get<std::string>());
    for (auto const &e : j.at("entries")) {
      CertificateEntry entry;
      entry.core = surface::parse_curve(e.at("core").get<std::string>());
      entry.source = e.at("source").get<std::size_t>();
      entry.script = script_from_json(e.at("moves"));
      for (auto const &d : e.at("digests"))
        entry.digests.push_back(parse_hex(d.get<std::string>()));
      c.entries.push_back(std::move(entry));
    }
    return c;
  } catch (nlohmann::json::exception const &e) {
    throw Error(Errc::parse, e.what());
  }
}

std::string to_string(Letter const &l, GenName const &name)
{
  auto syl = [&](Syllable s) {
    return name(s.gen) + (s.exp == 1 ? "" : "^" + std::to_string(s.exp));
  };
  if (l.conj.empty())
    return syl(l.core);
  std::string out = "(" + syl(l.core) + ")_{";
  for (std::size_t i = 0; i < l.conj.size(); ++i)
    out += (i ? " " : "") + syl(l.conj[i]);
  return out + "}";
}

} // namespace monodromy::hurwitz
