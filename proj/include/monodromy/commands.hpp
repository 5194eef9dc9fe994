#ifndef MONODROMY_COMMANDS_HPP
#define MONODROMY_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/int_matrix.hpp"

namespace monodromy::commands
{

/// Bad flags or arguments; the tool exits with 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class Status
{
  pass,
  fail,
  inconclusive
};

std::string_view to_string(Status s);

struct Check
{
  std::string name;
  Status status = Status::pass;
  std::string details;
};

struct Report
{
  std::string command; // echo of the invocation
  std::vector<Check> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::optional<nlohmann::ordered_json> artifact; // written by --out

  void add(std::string name, bool ok, std::string details = {});
  void add(std::string name, Status s, std::string details = {});

  /// 0 if nothing failed and something passed, 1 on any failure,
  /// 3 when every check is inconclusive.
  int exit_code() const;
};

nlohmann::ordered_json environment();
nlohmann::ordered_json to_json(Report const &r);
/// Aligned check table followed by the payload.
std::string to_table(Report const &r);

/// sign_mode is "auto" or "explicit:s1,s2,s3,s4" with each s in {+,-}.
Report verify_psi(int b, std::string const &sign_mode);

struct AurouxOptions
{
  int b = 2;
  std::string pattern = "XXYY";
  std::vector<std::string> omit; // curve names dropped from the lifted factorization
};

/// On success the artifact is the replayable certificate document.
Report auroux(AurouxOptions const &opt);

/// Rebuilds the model from the file's b and signs and replays every entry.
Report auroux_check(nlohmann::ordered_json const &file);

/// mu/nu block against the normal form, on H_1 and by bounded search.
Report regeneration(int b, std::size_t depth, std::size_t budget);

Report invariants(linalg::Int a, linalg::Int b, linalg::Int c, std::optional<linalg::Int> d,
                  std::optional<linalg::Int> k);

Report braid_eq(int n, std::vector<int> const &w1, std::vector<int> const &w2);
Report manfredini(int n, int k);

/// doc: {"b", "factorization", "script", "expected"?}. Replays the script,
/// checks the product is unchanged and, if given, that the result matches
/// `expected` bit for bit.
Report hurwitz_replay(nlohmann::ordered_json const &doc);

/// doc: {"from", "to", "comparator"?, "b"?, "n"?}. comparator is
/// "homology" (default, needs b), "symbolic" or "braid" (needs n; Artin
/// generator names).
Report hurwitz_search(nlohmann::ordered_json const &doc, std::size_t depth, std::size_t budget);

/// Random factorization over the b model and a random script; the artifact
/// is a replay document.
Report hurwitz_random(int b, std::size_t length, std::size_t max_conj, std::size_t moves, std::uint64_t seed);

/// what: config, ribbon, homology, psi, monodromy; format: json or dot
/// (dot only for config). UsageError otherwise.
std::string export_target(std::string const &what, int b, std::string const &format);

/// Printed blocks, their liftable rewrite and, with `lift`, the twist
/// factorization.
nlohmann::ordered_json monodromy_emit(int b, std::string const &pattern, bool lift);

} // namespace monodromy::commands

#endif // MONODROMY_COMMANDS_HPP
