// deckrecon: deal decks, recover degrees and clique counts, run verification.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deckrecon.hpp"
#include "deckrecon/report.hpp"

namespace fs = std::filesystem;
using namespace deckrecon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitContradiction = 4;

int exit_code(Errc code) {
  switch (code) {
    case Errc::UnsupportedOrder:
    case Errc::TooLarge:
    case Errc::InconsistentDeck:
    case Errc::AmbiguousDegreeSequence:
    case Errc::NegativeDegree:
    case Errc::NonDivisible:
      return kExitUnsupported;
    case Errc::IdentificationAmbiguous:
    case Errc::InternalContradiction:
      return kExitContradiction;
    default:
      return kExitInput;
  }
}

nlohmann::json count_json(const CliqueCount& c) {
  if (c.fits_u64() && c.value() <= static_cast<Wide>(INT64_MAX)) {
    return static_cast<long long>(c.value());
  }
  return c.to_string();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MalformedFile, "cannot write " + path);
  out << text;
}

struct DealArgs {
  std::string graph6;
  int hide = -1;
  bool hide_all = false;
  std::string out;
  std::string out_dir;
};

int run_deal(const DealArgs& args) {
  const Graph g = parse_graph6(args.graph6);
  if (g.order() < 2) fail(Errc::InvalidArgument, "deal needs at least 2 vertices");
  const FullDeck deck = deal(g);
  if (args.hide_all) {
    const fs::path dir = args.out_dir.empty() ? fs::path(".") : fs::path(args.out_dir);
    fs::create_directories(dir);
    for (Vertex v = 0; v < g.order(); ++v) {
      save_deck(hide(deck, g, v), dir / ("hide_" + std::to_string(v) + ".deck"));
    }
    return kExitOk;
  }
  if (args.hide < 0 || args.hide >= g.order()) {
    fail(Errc::InvalidArgument, "--hide must name a vertex in [0, " +
                                    std::to_string(g.order() - 1) + "]");
  }
  const PartialDeck partial = hide(deck, g, args.hide);
  if (args.out.empty()) {
    std::cout << format_deck(partial);
  } else {
    save_deck(partial, args.out);
  }
  return kExitOk;
}

int run_degrees(const std::string& path) {
  const PartialDeck deck = load_deck(path);
  const DegreeProfile p = reconstruct_degrees(deck);
  nlohmann::json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["degrees"] = p.degree_sequence();
  j["owner_degrees"] = p.owner_degree;
  j["hidden_degree"] = p.hidden_degree;
  j["delta"] = p.max_degree;
  j["min_degree"] = p.min_degree;
  j["ell"] = p.ell;
  j["holes"] = p.holes;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_cliques(const std::string& path, int r, bool all, bool cross_check) {
  const PartialDeck deck = load_deck(path);
  const int n = deck.original_order();
  if (!all && (r < 1 || r > n)) {
    fail(Errc::InvalidArgument, "--r must lie in [1, " + std::to_string(n) + "]");
  }
  const DegreeProfile p = reconstruct_degrees(deck);
  const ReconstructionOutcome out = reconstruct_all(deck, p, {cross_check});
  nlohmann::json rows = nlohmann::json::array();
  for (int k = all ? 1 : r; k <= (all ? n : r); ++k) {
    nlohmann::json row;
    row["r"] = k;
    if (const auto* d = std::get_if<Determined>(&out.at(k))) {
      row["status"] = "determined";
      row["count"] = count_json(d->count);
      row["resolver"] = std::string(to_string(d->resolver));
    } else {
      const auto& two = std::get<TwoCandidates>(out.at(k));
      row["status"] = "two_candidates";
      row["low"] = count_json(two.low);
      row["high"] = count_json(two.high);
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["n"] = n;
  j["ell"] = out.ell;
  j["rows"] = std::move(rows);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  int n = 0;
  std::string corpus;
  std::vector<std::string> random;
  int max_r = 0;
  double max_avg_degree = -1;
  std::string report;
  std::string csv;
  unsigned threads = 0;
  bool no_cross_check = false;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.max_r = args.max_r;
  options.threads = args.threads;
  options.cross_check = !args.no_cross_check;

  VerificationReport report;
  if (!args.random.empty()) {
    RandomSpec spec;
    try {
      spec.n = std::stoi(args.random[0]);
      spec.samples = std::stoi(args.random[1]);
      spec.p = std::stod(args.random[2]);
      spec.seed = std::stoull(args.random[3]);
    } catch (const std::exception&) {
      fail(Errc::InvalidArgument, "--random expects: n samples p seed");
    }
    spec.max_avg_degree = args.max_avg_degree;
    report = verify_random(spec, options);
  } else if (!args.corpus.empty()) {
    report = verify_graphs(args.n, read_corpus(args.corpus), options);
  } else {
    if (args.n < kMinReconstructibleOrder) {
      fail(Errc::UnsupportedOrder, "verification needs n >= 7");
    }
    report = verify_exhaustive(args.n, options);
  }
  write_text(args.report, to_json(report).dump(2) + "\n");
  if (!args.csv.empty()) write_text(args.csv, to_csv(report));
  if (!report.passed()) {
    std::cerr << report.mismatches.size() << " mismatches\n";
    return kExitContradiction;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique counts and degree sequences from n-1 cards"};
  app.require_subcommand(1);

  DealArgs deal_args;
  auto* deal_cmd = app.add_subcommand("deal", "write the partial deck(s) of a graph");
  deal_cmd->add_option("graph6", deal_args.graph6, "graph in graph6")->required();
  auto* hide_opt = deal_cmd->add_option("--hide", deal_args.hide, "vertex whose card is dropped");
  auto* hide_all = deal_cmd->add_flag("--hide-all", deal_args.hide_all, "one deck per vertex");
  hide_opt->excludes(hide_all);
  deal_cmd->add_option("--out", deal_args.out, "deck file (default stdout)")->excludes(hide_all);
  deal_cmd->add_option("--out-dir", deal_args.out_dir, "directory for --hide-all")->needs(hide_all);

  std::string deck_path;
  auto* degrees_cmd = app.add_subcommand("degrees", "recover the degree sequence");
  degrees_cmd->add_option("deckfile", deck_path, "partial deck file")->required();

  int r = 0;
  bool all = false;
  bool cross_check = false;
  auto* cliques_cmd = app.add_subcommand("cliques", "recover clique counts");
  cliques_cmd->add_option("deckfile", deck_path, "partial deck file")->required();
  auto* r_opt = cliques_cmd->add_option("--r", r, "clique size");
  auto* all_opt = cliques_cmd->add_flag("--all", all, "every size 1..n");
  r_opt->excludes(all_opt);
  cliques_cmd->add_flag("--cross-check", cross_check, "run every applicable resolver");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "compare reconstructions with ground truth");
  auto* n_opt = verify_cmd->add_option("--n", verify_args.n, "order for exhaustive runs");
  verify_cmd->add_option("--corpus", verify_args.corpus, "graph6 file of order-n graphs")
      ->needs(n_opt);
  auto* random_opt = verify_cmd->add_option("--random", verify_args.random,
                                            "n samples p seed")
                         ->expected(4);
  random_opt->excludes(n_opt);
  verify_cmd->add_option("--max-r", verify_args.max_r, "compare r <= max-r only");
  verify_cmd->add_option("--max-avg-degree", verify_args.max_avg_degree,
                         "reject random graphs above this average degree")
      ->needs(random_opt);
  verify_cmd->add_option("--report", verify_args.report, "JSON report path (default stdout)");
  verify_cmd->add_option("--csv", verify_args.csv, "CSV summary path");
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads");
  verify_cmd->add_flag("--no-cross-check", verify_args.no_cross_check,
                       "only run the first applicable resolver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*deal_cmd) {
      if (deal_args.hide < 0 && !deal_args.hide_all) {
        fail(Errc::InvalidArgument, "deal needs --hide <v> or --hide-all");
      }
      return run_deal(deal_args);
    }
    if (*degrees_cmd) return run_degrees(deck_path);
    if (*cliques_cmd) {
      if (!all && r_opt->count() == 0) fail(Errc::InvalidArgument, "cliques needs --r <r> or --all");
      return run_cliques(deck_path, r, all, cross_check);
    }
    if (*verify_cmd) {
      if (verify_args.random.empty() && n_opt->count() == 0) {
        fail(Errc::InvalidArgument, "verify needs --n <n> or --random n samples p seed");
      }
      return run_verify(verify_args);
    }
  } catch (const ReconError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
