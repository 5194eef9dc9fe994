#ifndef MONODROMY_BRAIDS_HPP
#define MONODROMY_BRAIDS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/homology.hpp"
#include "monodromy/hurwitz.hpp"

namespace monodromy::braids
{

/// Artin word on n strands; letter +i / -i is sigma_i^{+1} / sigma_i^{-1}.
struct BraidWord
{
  int n = 1;
  std::vector<int> letters;

  friend bool operator==(BraidWord const &, BraidWord const &) = default;
};

void validate(BraidWord const &w); // invalid-parameter
BraidWord inverse(BraidWord const &w);
BraidWord concat(BraidWord a, BraidWord const &b); // dimension if n differs

// -- lamination coordinates ------------------------------------------------

/// Dynnikov coordinates (a_1, b_1, ..., a_k, b_k) of an integral lamination
/// in the disk with n + 2 punctures on a line. A braid on n strands acts on
/// the middle n punctures; the two outer ones stay fixed, which makes the
/// action faithful (the boundary twist of B_n moves curves around them).
using Lamination = std::vector<linalg::Int>;

/// Letters are applied left to right. dimension error unless L has 2n entries.
Lamination lamination_act(BraidWord const &w, Lamination L);

/// Round curves around neighbouring punctures {i, i+1} and around the initial
/// segments {1..j}, in the (n+2)-punctured disk.
std::vector<Lamination> filling_family(int n);

/// w1 * w2^-1 fixes every curve of the filling family.
bool braid_equal(BraidWord const &w1, BraidWord const &w2);

/// Strand permutation: out[i-1] is the final position of the strand starting at i.
std::vector<int> permutation(BraidWord const &w);

// -- colourings and Manfredini's relations ---------------------------------

struct Colouring
{
  std::vector<std::vector<int>> blocks; // strands, 1-based
};

/// {1..m} and {m+1..2m}
Colouring bicolouring(int m);

struct RelationCheck
{
  std::string name;
  bool ok = false;
  bool skipped = false;
  std::string notice;
};

struct ManfrediniReport
{
  int n = 0, k = 0;
  std::vector<RelationCheck> checks;

  bool all_ok() const;
};

/// Relations of the two coloured group B_{n,k} with A = sigma_{n-k-1},
/// B = sigma_{n-k}^2, C = sigma_{n-k+1}, plus the braid relations among the
/// remaining sigma_i. Needs 1 <= k and n - k >= 2; for k = 1 the C relations
/// are reported as skipped.
ManfrediniReport verify_manfredini(int n, int k);

// -- bicoloured letters ----------------------------------------------------

// Letters of B_{2m} use hurwitz::Letter with the Artin index as generator:
// x_i = sigma_i, z = sigma_m, y_j = sigma_{m+j}.

BraidWord braid_of(hurwitz::Letter const &l, int n);
BraidWord braid_of(std::vector<hurwitz::Letter> const &ls, int n);

enum class BlockKind { X, Y };

struct Block
{
  BlockKind kind = BlockKind::X;
  int m = 0;
  std::vector<hurwitz::Letter> letters;
};

/// The two blocks for m = 2b, letter by letter as printed (3m - 2 letters
/// each; several conjugators contain z).
Block x_block(int m);
Block y_block(int m);
std::vector<Block> monodromy_blocks(int b);

/// Concatenates blocks following a pattern over {X, Y}, e.g. "XXYY".
std::vector<hurwitz::Letter> compose_blocks(int b, std::string const &pattern);

/// Rewrites (c^2)_{Q z W}, Q the generators from c toward z, as
/// (z^2)_{(c Q)^-1 W} so that the conjugator is bicoloured. Letters whose
/// conjugators carry only even powers of z are returned unchanged.
/// contract error if the pattern does not apply or the braids differ.
hurwitz::Letter make_liftable(hurwitz::Letter const &l, int m);
std::vector<hurwitz::Letter> make_liftable(std::vector<hurwitz::Letter> const &ls, int m);

/// x_i -> (alpha_{m-i}, gamma_{m-i}), y_j -> (beta_j, delta_j), z^2 -> sigma,
/// conjugators lifted syllable by syllable. contract error on an odd power of
/// z or a same-colour core with exponent other than +-1.
hurwitz::Factorization lift_to_twists(std::vector<hurwitz::Letter> const &ls, int m,
                                      surface::HomologyModel const &model);

/// compose_blocks, make_liftable and lift_to_twists in one go.
hurwitz::Factorization monodromy_factorization(int b, surface::HomologyModel const &model,
                                               std::string const &pattern = "XXYY");

// -- regeneration factorization --------------------------------------------

struct RegenerationFactorization
{
  hurwitz::Factorization mu_nu;       // mu_2b^2 nu_2b^2 ... mu_2^2 nu_2^2
  hurwitz::Factorization normal_form; // alpha_1 .. alpha_{2b-1}^2 .. alpha_1 gamma_1 .. gamma_1
  hurwitz::Factorization sigma;       // the single sigma letter
  hurwitz::Factorization beta_delta;  // beta_{2b-1} .. beta_1^2 .. beta_{2b-1} delta_{2b-1} ..

  hurwitz::Factorization combined() const; // mu_nu, sigma, beta_delta
};

/// mu_j = (alpha_{j-1}) conjugated by alpha_1 ... alpha_{j-2}, nu_j likewise with gamma.
RegenerationFactorization regeneration_factorization(surface::HomologyModel const &model, int b);

// -- image-level checks ----------------------------------------------------

/// Permutation of the product; colour-violation if a letter does not
/// preserve every block.
std::vector<int> permutation_image(std::vector<hurwitz::Letter> const &ls, int n, Colouring const &c);

enum class Presence { bare, conjugated, absent };

std::string to_string(Presence p);

struct GeneratorPresence
{
  std::string name; // "x1", "z2", "y3"
  int gen = 0;
  Presence presence = Presence::absent;
};

struct GenerationReport
{
  std::vector<GeneratorPresence> generators;

  bool all_present() const;
};

/// Which of x_1..x_{m-1}, z^2, y_1..y_{m-1} occur as letter cores, bare or
/// only conjugated. Says nothing about generating the group.
GenerationReport generation_check(std::vector<hurwitz::Letter> const &ls, int m);

/// Letter key: images of the filling family under the letter's braid.
hurwitz::Comparator braid_comparator(int n);

/// Names sigma_i as "s<i>"; bicoloured names use x/z/y.
hurwitz::GenName artin_names();
hurwitz::GenParse artin_parser();
hurwitz::GenName bicoloured_names(int m);

nlohmann::ordered_json to_json(BraidWord const &w);
/// {"n": .., "word": [..]}
BraidWord braid_from_json(nlohmann::ordered_json const &j);
nlohmann::ordered_json to_json(ManfrediniReport const &r);
nlohmann::ordered_json to_json(GenerationReport const &r);

} // namespace monodromy::braids

#endif // MONODROMY_BRAIDS_HPP
