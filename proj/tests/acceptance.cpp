// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Reports from the exhaustive sweeps are written to the working directory.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "deckrecon.hpp"
#include "deckrecon/report.hpp"

using namespace deckrecon;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Verdict()>& check) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.ok) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", v.ok ? "PASS" : "FAIL", number,
              title.c_str(), v.detail.c_str(), secs);
  std::fflush(stdout);
}

void save(const std::string& name, const std::string& text) {
  std::ofstream(name, std::ios::binary) << text;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool blocked_rows_only(const VerificationReport& r) {
  for (const auto& rec : r.two_candidates) {
    if (rec.r != r.n - rec.ell) return false;
  }
  return true;
}

std::string seconds(double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  return buf;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream out;
  out << r.totals.instances << " instances, " << r.totals.rows << " rows, "
      << r.totals.determined << " determined, " << r.totals.two_candidates
      << " two-candidate, " << r.mismatches.size() << " mismatches";
  return out.str();
}

}  // namespace

int main() {
  VerificationReport sweep7;
  const auto t0 = std::chrono::steady_clock::now();
  sweep7 = verify_exhaustive(7);
  const double sweep_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  save("acceptance_n7_report.json", to_json(sweep7).dump(2) + "\n");
  save("acceptance_n7_report.csv", to_csv(sweep7));

  criterion(1, "exhaustive soundness, n=7", [&] {
    const bool ok = sweep7.totals.graphs == 1044 && sweep7.totals.instances == 7308 &&
                    sweep7.mismatches.empty() && blocked_rows_only(sweep7) &&
                    sweep_secs <= 300;
    return Verdict{ok, summary(sweep7) + ", sweep " + seconds(sweep_secs)};
  });

  criterion(2, "degree reconstruction, n=7", [&] {
    const auto& t = sweep7.totals;
    const bool ok = t.degree_mismatches == 0 && t.ambiguous_degree_sequences == 0 &&
                    t.errors == 0;
    return Verdict{ok, std::to_string(t.degree_mismatches) + " degree mismatches, " +
                           std::to_string(t.ambiguous_degree_sequences) +
                           " ambiguous, " + std::to_string(t.errors) + " errors"};
  });

  criterion(3, "max degree <= n/2 - 1 fully determined", [&] {
    const auto& t = sweep7.totals;
    const bool ok = t.small_delta_instances > 0 && t.small_delta_two_candidates == 0;
    return Verdict{ok, std::to_string(t.small_delta_instances) + " instances, " +
                           std::to_string(t.small_delta_two_candidates) +
                           " two-candidate rows"};
  });

  criterion(4, "average degree <= 3 at n=16", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_random({16, 1000, 0.2, 1, 3.0});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.passed() && r.totals.fully_determined_instances == 1000 &&
                    r.totals.two_candidates == 0 && secs <= 120;
    return Verdict{ok, summary(r)};
  });

  criterion(5, "r <= log2 n at n=16, p=0.5", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_random({16, 1000, 0.5, 1}, {.max_r = 4});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.passed() && r.totals.rows == 4000 && r.totals.determined == 4000 &&
                    secs <= 120;
    return Verdict{ok, summary(r)};
  });

  criterion(6, "counting identities", [] {
    std::mt19937_64 rng(6);
    long graphs = 0, checks = 0, bad = 0;
    for (; graphs < 10000; ++graphs) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const double p = static_cast<double>(rng() % 101) / 100;
      const Graph g = random_graph(n, p, rng);
      std::vector<std::vector<Wide>> cards;
      for (Vertex v = 0; v < n; ++v) cards.push_back(clique_profile(delete_vertex(g, v)));
      for (int r = 1; r <= n; ++r) {
        const Wide kr = count_cliques(g, r).value();
        Wide deck_sum = 0, degrees = 0;
        for (Vertex v = 0; v < n; ++v) {
          if (r < n) deck_sum += cards[v][r];
          degrees += clique_degree(g, v, r).value();
        }
        bad += (n - r) * kr != deck_sum;
        bad += r * kr != degrees;
        bad += kr != brute_force_kr(g, r).value();
        checks += 3;
      }
    }
    return Verdict{bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(checks) +
                                 " checks, " + std::to_string(bad) + " failures"};
  });

  criterion(7, "relabeling and card-order invariance", [] {
    std::mt19937_64 rng(7);
    int same = 0;
    const int trials = 100;
    for (int i = 0; i < trials; ++i) {
      const int n = 7 + i % 6;
      const Graph g = random_graph(n, 0.15 + 0.007 * i, rng);
      const Vertex v = static_cast<Vertex>(rng() % n);
      const auto perm = random_permutation(n, rng);
      const Graph h = relabel(g, perm);
      const PartialDeck a = hide(deal(g), g, v);
      const PartialDeck b0 = hide(deal(h), h, perm[v]);
      std::vector<Card> cards;
      for (const Card& c : b0.cards()) {
        cards.emplace_back(relabel(c.graph(), random_permutation(n - 1, rng)));
      }
      std::shuffle(cards.begin(), cards.end(), rng);
      const PartialDeck b(n, std::move(cards));
      const auto pa = reconstruct_degrees(a);
      const auto pb = reconstruct_degrees(b);
      same += pa == pb && reconstruct_all(a, pa) == reconstruct_all(b, pb);
    }
    return Verdict{same == trials, std::to_string(same) + "/" + std::to_string(trials) +
                                       " identical"};
  });

  criterion(8, "graph6 and deck file round trips", [] {
    const auto lines = read_lines(std::string(DECKRECON_TEST_DATA) + "/graph6_corpus.g6");
    int exact = 0;
    for (const auto& line : lines) exact += emit_graph6(parse_graph6(line)) == line;
    std::mt19937_64 rng(8);
    int decks = 0;
    const auto path = std::filesystem::temp_directory_path() / "deckrecon_acceptance.deck";
    for (int i = 0; i < 100; ++i) {
      const int n = 7 + i % 10;
      const Graph g = random_graph(n, 0.4, rng);
      const PartialDeck d = hide(deal(g), g, static_cast<Vertex>(rng() % n));
      save_deck(d, path);
      decks += deck_equal(load_deck(path), d) && deck_equal(parse_deck(format_deck(d)), d);
    }
    std::filesystem::remove(path);
    const bool ok = lines.size() == 500 && exact == 500 && decks == 100;
    return Verdict{ok, std::to_string(exact) + "/" + std::to_string(lines.size()) +
                           " graph6 lines, " + std::to_string(decks) + "/100 decks"};
  });

  criterion(9, "blocked-row census at n=7 and n=8", [&] {
    const auto classes8 = extend_classes(enumerate_graphs(7));
    const auto sweep8 = verify_graphs(8, classes8);
    save("acceptance_n8_report.json", to_json(sweep8).dump(2) + "\n");
    save("acceptance_n8_report.csv", to_csv(sweep8));
    const bool ok =
        classes8.size() == 12346 && sweep8.passed() && blocked_rows_only(sweep7) &&
        blocked_rows_only(sweep8) &&
        static_cast<long>(sweep7.two_candidates.size()) == sweep7.totals.two_candidates &&
        static_cast<long>(sweep8.two_candidates.size()) == sweep8.totals.two_candidates;
    return Verdict{ok, "n=7: " + std::to_string(sweep7.totals.two_candidates) +
                           " two-candidate rows of " + std::to_string(sweep7.totals.rows) +
                           "; n=8: " + std::to_string(sweep8.totals.two_candidates) + " of " +
                           std::to_string(sweep8.totals.rows) +
                           " (reports: acceptance_n{7,8}_report.json)"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
