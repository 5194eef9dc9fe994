#ifndef MONODROMY_HURWITZ_HPP
#define MONODROMY_HURWITZ_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/twist.hpp"

namespace monodromy::hurwitz
{

// Generator power. Generators are plain integers so the same machinery
// serves Dehn twists (encoded curve ids) and Artin generators.
struct Syllable
{
  int gen = 0;
  int exp = 1;

  friend bool operator==(Syllable const &, Syllable const &) = default;
};

using Word = std::vector<Syllable>;

// free reduction: merges adjacent powers of one generator, drops zeros
Word reduce(Word const &w);
Word inverse(Word const &w);
Word concat(Word a, Word const &b);

/// conj^-1 * core * conj, written (core)_conj.
struct Letter
{
  Syllable core;
  Word conj;

  friend bool operator==(Letter const &, Letter const &) = default;
};

Word expansion(Letter const &l);
Letter conjugate(Letter const &l, Word const &by); // (l)_by

struct Factorization
{
  std::vector<Letter> letters;
  std::uint64_t model = 0; // fingerprint of the model the letters refer to; 0 if none

  std::size_t size() const { return letters.size(); }
  friend bool operator==(Factorization const &, Factorization const &) = default;
};

enum class Direction { left, right };

// index is 1-based and acts on positions (index, index + 1)
struct Move
{
  std::size_t index = 1;
  Direction dir = Direction::right;

  friend bool operator==(Move const &, Move const &) = default;
};

using Script = std::vector<Move>;

Move inverse(Move m);
Script inverse(Script const &s);

/// right: (t_i, t_i+1) -> (t_i+1, (t_i)_{t_i+1})
/// left:  (t_i, t_i+1) -> ((t_i+1)_{t_i^-1}, t_i)
Factorization hurwitz_move(Factorization const &f, std::size_t index, Direction dir);
void apply_move(Factorization &f, Move m);
Factorization apply_script(Factorization f, Script const &s);

/// Moves the h-th letter (1-based) to the front with h-1 right moves; the
/// moved letter is unchanged.
std::pair<Factorization, Script> rotate_to_front(Factorization const &f, std::size_t h);

std::uint64_t digest(Factorization const &f);

// -- twist letters ----------------------------------------------------------

int encode(surface::CurveId c);
surface::CurveId decode(int gen);

Word to_word(twist::TwistWord const &w);
twist::TwistWord to_twist_word(Word const &w); // powers expanded

Letter twist_letter(surface::CurveId core, int sign = 1, twist::TwistWord const &conj = {});
Factorization from_twist_word(surface::HomologyModel const &model, twist::TwistWord const &w);

/// The letter acts as T_v^exp with v the core class pushed through conj^-1.
linalg::IntVector letter_class(Letter const &l, surface::HomologyModel const &model);
twist::MappingClassMatrix letter_matrix(Letter const &l, surface::HomologyModel const &model);

/// Letters composed right to left; cross-model if fingerprints differ.
twist::MappingClassMatrix product_matrix(Factorization const &f, surface::HomologyModel const &model);

Factorization fiber_sum(Factorization const &f, Factorization const &g);
/// every letter of g conjugated by psi before concatenation
Factorization twisted_fiber_sum(Factorization const &f, Factorization const &g,
                                twist::TwistWord const &psi);

Factorization random_factorization(surface::HomologyModel const &model, std::size_t length,
                                   std::size_t max_conj, std::mt19937_64 &rng);
Script random_script(std::size_t length, std::size_t moves, std::mt19937_64 &rng);

// -- Lefschetz fibre sum rewrite -------------------------------------------

struct CertificateEntry
{
  surface::CurveId core;
  std::size_t source = 0; // 1-based position of the letter that was exposed
  Script script;
  std::vector<std::uint64_t> digests; // factorization digest after each move
};

/// For every distinct core of the gluing word, a move script taking F to a
/// factorization whose first letter is the bare positive twist on that core.
struct AurouxCertificate
{
  std::uint64_t model = 0;
  std::uint64_t initial = 0; // digest of F
  std::vector<CertificateEntry> entries;
};

/// Pre: every core of `psi` occurs as a letter core in f (hypothesis-unmet
/// listing the missing ones otherwise, checked first) and product_matrix(f)
/// is the identity (contract error otherwise).
AurouxCertificate auroux_certificate(Factorization const &f, twist::TwistWord const &psi,
                                     surface::HomologyModel const &model);

struct ReplayResult
{
  bool ok = true;
  std::optional<std::size_t> entry; // 0-based
  std::optional<std::size_t> move;  // 0-based within the entry, if a move failed
  std::string message;
};

ReplayResult replay(AurouxCertificate const &cert, Factorization const &f,
                    surface::HomologyModel const &model);

// -- bounded equivalence search --------------------------------------------

using LetterKey = std::vector<std::int64_t>;
using Comparator = std::function<LetterKey(Letter const &)>;

/// Letterwise equality of the twist matrices: primitive class of the
/// conjugated core, normalised up to sign, plus the exponent.
Comparator homology_comparator(surface::HomologyModel const &model);
/// Core plus freely reduced conjugator.
Comparator symbolic_comparator();

struct SearchResult
{
  enum class Status { found, inconclusive } status = Status::inconclusive;
  std::optional<Script> script;
  std::size_t states = 0;
  std::string reason;
};

/// Default state budget, overridable through the MWB_BUDGET environment
/// variable.
std::size_t default_budget();

/// Bidirectional breadth-first search over the Hurwitz orbit. Any script it
/// returns has been replayed and checked letterwise under `cmp`.
SearchResult hurwitz_search(Factorization const &f, Factorization const &g, std::size_t max_depth,
                            Comparator const &cmp, std::size_t budget = default_budget());

bool letterwise_equal(Factorization const &f, Factorization const &g, Comparator const &cmp);

using Grouping = std::function<int(Letter const &)>;

/// For targets whose letters come in contiguous groups: sorts f into the
/// same group order by right moves (the letter moved forward is unchanged),
/// then searches each block on its own up to max_depth. The joined script is
/// replayed against g; inconclusive if that fails.
SearchResult blockwise_search(Factorization const &f, Factorization const &g, Grouping const &group,
                              std::size_t max_depth, Comparator const &cmp, std::size_t budget = default_budget());

// -- serialisation ----------------------------------------------------------

using GenName = std::function<std::string(int)>;
using GenParse = std::function<int(std::string const &)>;

GenName twist_names();
GenParse twist_parser();

nlohmann::ordered_json to_json(Factorization const &f, GenName const &name);
Factorization factorization_from_json(nlohmann::ordered_json const &j, GenParse const &parse);
nlohmann::ordered_json to_json(Script const &s);
Script script_from_json(nlohmann::ordered_json const &j);
nlohmann::ordered_json to_json(AurouxCertificate const &c);
AurouxCertificate certificate_from_json(nlohmann::ordered_json const &j);

std::string to_string(Letter const &l, GenName const &name);

} // namespace monodromy::hurwitz

#endif // MONODROMY_HURWITZ_HPP
