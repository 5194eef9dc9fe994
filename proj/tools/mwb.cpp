#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodromy/commands.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/hurwitz.hpp"

namespace cmd = monodromy::commands;
using nlohmann::ordered_json;

namespace
{

struct Globals
{
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
};

ordered_json read_json(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw cmd::UsageError("cannot read " + path);
  try {
    return ordered_json::parse(in);
  } catch (nlohmann::json::exception const &e) {
    throw cmd::UsageError(path + ": " + e.what());
  }
}

void write_text(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw cmd::UsageError("cannot write " + path);
  out << text;
}

std::vector<int> parse_word(std::string const &text)
{
  try {
    return ordered_json::parse(text).get<std::vector<int>>();
  } catch (nlohmann::json::exception const &) {
    throw cmd::UsageError("braid words are JSON integer arrays, got '" + text + "'");
  }
}

int emit(cmd::Report r, Globals const &g)
{
  if (r.artifact) {
    if (!g.out.empty()) {
      write_text(g.out, r.artifact->dump(2) + "\n");
      r.data["artifact_path"] = g.out;
    } else {
      r.data["artifact"] = *r.artifact;
    }
  }
  if (g.format == "table")
    std::cout << cmd::to_table(r);
  else if (g.format == "json")
    std::cout << cmd::to_json(r).dump(2) << "\n";
  else
    throw cmd::UsageError("reports are printed as json or table");
  return r.exit_code();
}

void emit_text(std::string const &text, Globals const &g)
{
  if (g.out.empty())
    std::cout << text;
  else
    write_text(g.out, text);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Monodromy workbench: Dehn twist factorizations, Hurwitz moves, braids and bidouble cover "
               "invariants.\nExit codes: 0 pass, 1 fail, 2 usage, 3 inconclusive only.\nThe search state "
               "budget defaults to MWB_BUDGET when set."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json, table or dot")
    ->check(CLI::IsMember({"json", "table", "dot"}))
    ->capture_default_str();
  app.add_option("--out", g.out, "write the artifact (certificate, replay document, export) here");
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--budget", g.budget, "search state budget");

  std::function<int()> run;

  int b = 2;

  auto *vp = app.add_subcommand("verify-psi", "compare the psi factorization with the reference map on H_1");
  std::string sign_mode = "auto";
  vp->add_option("--b", b, "configuration parameter, 2..6")->required();
  vp->add_option("--sign-mode", sign_mode, "auto or explicit:s1,s2,s3,s4")->capture_default_str();
  vp->callback([&] { run = [&] { return emit(cmd::verify_psi(b, sign_mode), g); }; });

  auto *au = app.add_subcommand("auroux", "lifted monodromy factorization and its Hurwitz certificate");
  cmd::AurouxOptions aopt;
  au->add_option("--b", aopt.b, "configuration parameter")->required();
  au->add_option("--pattern", aopt.pattern, "block composition over X and Y")->capture_default_str();
  au->add_option("--omit", aopt.omit, "drop letters with this core (repeatable)");
  au->callback([&] { run = [&] { return emit(cmd::auroux(aopt), g); }; });

  auto *ac = app.add_subcommand("auroux-check", "replay a certificate file");
  std::string cert_path;
  ac->add_option("file", cert_path, "certificate written by auroux --out")->required();
  ac->callback([&] { run = [&] { return emit(cmd::auroux_check(read_json(cert_path)), g); }; });

  auto *rg = app.add_subcommand("regeneration", "mu/nu block against the normal form");
  int depth = 4;
  rg->add_option("--b", b, "configuration parameter")->required();
  rg->add_option("--depth", depth, "search depth")->capture_default_str();
  rg->callback([&] {
    run = [&] {
      return emit(cmd::regeneration(b, depth, g.budget.value_or(monodromy::hurwitz::default_budget())), g);
    };
  });

  auto *iv = app.add_subcommand("invariants", "invariants of a bidouble cover and the family hypotheses");
  std::int64_t ia = 0, ib = 0, ic = 0;
  std::optional<std::int64_t> id, ik;
  iv->add_option("--a", ia)->required();
  iv->add_option("--b", ib)->required();
  iv->add_option("--c", ic)->required();
  iv->add_option("--d", id, "defaults to b");
  iv->add_option("--k", ik, "family parameter, even");
  iv->callback([&] { run = [&] { return emit(cmd::invariants(ia, ib, ic, id, ik), g); }; });

  auto *br = app.add_subcommand("braid", "braid group checks");
  br->require_subcommand(1);
  auto *beq = br->add_subcommand("eq", "word problem");
  int n = 3, k = 1;
  std::string w1, w2;
  beq->add_option("--n", n, "strands")->required();
  beq->add_option("--w1", w1, "JSON integer array, e.g. [1,-2]")->required();
  beq->add_option("--w2", w2, "JSON integer array")->required();
  beq->callback([&] { run = [&] { return emit(cmd::braid_eq(n, parse_word(w1), parse_word(w2)), g); }; });
  auto *bman = br->add_subcommand("manfredini", "relations of the bicoloured subgroup");
  bman->add_option("--n", n, "strands")->required();
  bman->add_option("--k", k, "first colour block size")->required();
  bman->callback([&] { run = [&] { return emit(cmd::manfredini(n, k), g); }; });

  auto *hw = app.add_subcommand("hurwitz", "Hurwitz move tools");
  hw->require_subcommand(1);
  auto *hrep = hw->add_subcommand("replay", "replay a move script");
  std::string doc_path;
  hrep->add_option("file", doc_path, "{b, factorization, script, expected?}")->required();
  hrep->callback([&] { run = [&] { return emit(cmd::hurwitz_replay(read_json(doc_path)), g); }; });
  auto *hsea = hw->add_subcommand("search", "bounded equivalence search");
  hsea->add_option("file", doc_path, "{from, to, comparator?, b?, n?}")->required();
  hsea->add_option("--depth", depth, "search depth")->capture_default_str();
  hsea->callback([&] {
    run = [&] {
      return emit(cmd::hurwitz_search(read_json(doc_path), depth,
                                      g.budget.value_or(monodromy::hurwitz::default_budget())),
                  g);
    };
  });
  auto *hran = hw->add_subcommand("random", "random factorization and script");
  std::size_t length = 8, conj = 3, moves = 20;
  hran->add_option("--b", b)->required();
  hran->add_option("--length", length)->capture_default_str();
  hran->add_option("--conj", conj, "maximal conjugator length")->capture_default_str();
  hran->add_option("--moves", moves)->capture_default_str();
  hran->callback([&] { run = [&] { return emit(cmd::hurwitz_random(b, length, conj, moves, g.seed), g); }; });

  auto *mo = app.add_subcommand("monodromy", "braid monodromy blocks");
  mo->require_subcommand(1);
  auto *memit = mo->add_subcommand("emit", "printed blocks and their lift");
  std::string pattern = "XXYY";
  bool lift = false;
  memit->add_option("--b", b)->required();
  memit->add_option("--pattern", pattern)->capture_default_str();
  memit->add_flag("--lift", lift, "include the lifted twist factorization");
  memit->callback([&] {
    run = [&] {
      if (g.format != "json")
        throw cmd::UsageError("monodromy emit writes json");
      emit_text(cmd::monodromy_emit(b, pattern, lift).dump(2) + "\n", g);
      return 0;
    };
  });

  auto *ex = app.add_subcommand("export", "config, ribbon, homology, psi or monodromy as json or dot");
  std::string what;
  ex->add_option("what", what, "target")->required();
  ex->add_option("--b", b)->required();
  ex->callback([&] {
    run = [&] {
      emit_text(cmd::export_target(what, b, g.format), g);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (cmd::UsageError const &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (monodromy::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == monodromy::Errc::invalid_parameter || e.code() == monodromy::Errc::parse ? 2 : 1;
  }
}
