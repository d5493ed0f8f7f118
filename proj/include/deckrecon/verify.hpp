#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "deckrecon/clique_recon.hpp"
#include "deckrecon/deck.hpp"
#include "deckrecon/degree_recon.hpp"
#include "deckrecon/graph6.hpp"
#include "deckrecon/oracle.hpp"

namespace deckrecon {

struct VerifyOptions {
  int max_r = 0;             // compare rows r <= max_r only; 0 means all
  bool cross_check = true;   // run every applicable resolver per row
  unsigned threads = 0;      // 0: DECKRECON_THREADS or hardware concurrency
};

struct TwoCandidateRecord {
  std::string graph6;
  Vertex hidden = 0;
  int r = 0;
  int ell = 0;
  std::string low;
  std::string high;
  std::string truth;
};

struct MismatchRecord {
  std::string graph6;
  Vertex hidden = 0;
  int r = 0;            // 0 for instance-level problems
  std::string kind;
  std::string expected;
  std::string got;
};

struct InstanceResult {
  std::string graph6;
  Vertex hidden = 0;
  int max_degree = 0;
  int rows = 0;
  int determined = 0;
  bool all_determined = false;
  bool degrees_ok = false;
  std::map<Resolver, long> histogram;
  std::vector<TwoCandidateRecord> two_candidates;
  std::vector<MismatchRecord> mismatches;
  std::vector<std::string> errors;
};

struct VerificationTotals {
  long graphs = 0;
  long instances = 0;
  long rows = 0;
  long determined = 0;
  long two_candidates = 0;
  long degree_mismatches = 0;
  long ambiguous_degree_sequences = 0;
  long errors = 0;
  long small_delta_instances = 0;       // max degree <= n/2 - 1
  long small_delta_two_candidates = 0;
  long fully_determined_instances = 0;
};

struct VerificationReport {
  int n = 0;
  VerificationTotals totals;
  std::map<Resolver, long> resolver_histogram;
  std::vector<TwoCandidateRecord> two_candidates;
  std::vector<MismatchRecord> mismatches;
  double seconds = 0;

  bool passed() const { return mismatches.empty(); }
};

namespace detail {

inline CliqueCount truth_kr(const Graph& g, int r) {
  if (g.order() <= 16 || r <= 4) return brute_force_kr(g, r);
  return count_cliques(g, r);
}

inline unsigned worker_count(unsigned requested) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DECKRECON_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return requested == 0 ? hw : std::min(requested, hw);
}

// out[i] = fn(i) for i < count, spread over worker threads.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
  };
  const unsigned k = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

// Deals g, hides `hidden`, reconstructs, and compares against g itself.
inline InstanceResult verify_instance(const Graph& g, Vertex hidden,
                                      const VerifyOptions& options = {}) {
  const int n = g.order();
  InstanceResult res;
  res.graph6 = emit_graph6(g);
  res.hidden = hidden;
  res.max_degree = g.max_degree();
  auto mismatch = [&](int r, std::string kind, std::string expected,
                      std::string got) {
    res.mismatches.push_back(MismatchRecord{res.graph6, hidden, r, std::move(kind),
                                            std::move(expected), std::move(got)});
  };
  try {
    const PartialDeck deck = hide(deal(g), g, hidden);
    const DegreeProfile profile = reconstruct_degrees(deck);

    std::vector<int> truth_degrees = g.degrees();
    std::sort(truth_degrees.begin(), truth_degrees.end(), std::greater<>());
    res.degrees_ok = profile.m == g.edge_count() &&
                     profile.degree_sequence() == truth_degrees &&
                     profile.hidden_degree == g.degree(hidden);
    if (!res.degrees_ok) {
      mismatch(0, "degree_sequence", std::to_string(g.edge_count()),
               std::to_string(profile.m));
      return res;
    }

    const ReconstructionOutcome out =
        reconstruct_all(deck, profile, ReconOptions{options.cross_check});
    const int top = options.max_r > 0 ? std::min(options.max_r, n) : n;
    res.all_determined = true;
    for (int r = 1; r <= top; ++r) {
      ++res.rows;
      const CliqueCount truth = detail::truth_kr(g, r);
      if (const auto* d = std::get_if<Determined>(&out.at(r))) {
        ++res.determined;
        ++res.histogram[d->resolver];
        if (d->count != truth) {
          mismatch(r, std::string("wrong_count:") + std::string(to_string(d->resolver)),
                   truth.to_string(), d->count.to_string());
        }
        continue;
      }
      res.all_determined = false;
      const auto& two = std::get<TwoCandidates>(out.at(r));
      res.two_candidates.push_back(TwoCandidateRecord{
          res.graph6, hidden, r, profile.ell, two.low.to_string(),
          two.high.to_string(), truth.to_string()});
      if (r != n - profile.ell) {
        mismatch(r, "two_candidates_off_blocked_row", std::to_string(n - profile.ell),
                 std::to_string(r));
      }
      if (truth != two.low && truth != two.high) {
        mismatch(r, "two_candidates_miss_truth", truth.to_string(),
                 two.low.to_string() + "|" + two.high.to_string());
      }
    }
  } catch (const ReconError& e) {
    res.errors.emplace_back(to_string(e.code()));
    mismatch(0, std::string("error:") + std::string(to_string(e.code())), "",
             e.what());
  }
  return res;
}

namespace detail {

struct Job {
  std::size_t graph = 0;
  Vertex hidden = 0;
};

inline VerificationReport run_jobs(int n, const std::vector<Graph>& graphs,
                                   const std::vector<Job>& jobs,
                                   const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = parallel_map<InstanceResult>(
      jobs.size(), worker_count(options.threads), [&](std::size_t i) {
        return verify_instance(graphs[jobs[i].graph], jobs[i].hidden, options);
      });

  VerificationReport report;
  report.n = n;
  for (Resolver r : kAllResolvers) report.resolver_histogram[r] = 0;
  report.totals.graphs = static_cast<long>(graphs.size());
  for (const InstanceResult& res : results) {
    auto& t = report.totals;
    ++t.instances;
    t.rows += res.rows;
    t.determined += res.determined;
    t.two_candidates += static_cast<long>(res.two_candidates.size());
    t.errors += static_cast<long>(res.errors.size());
    for (const auto& e : res.errors) {
      if (e == to_string(Errc::AmbiguousDegreeSequence)) ++t.ambiguous_degree_sequences;
    }
    if (!res.degrees_ok) ++t.degree_mismatches;
    if (res.all_determined && res.errors.empty() && res.degrees_ok) {
      ++t.fully_determined_instances;
    }
    if (2 * res.max_degree <= n - 2) {
      ++t.small_delta_instances;
      t.small_delta_two_candidates += static_cast<long>(res.two_candidates.size());
    }
    for (const auto& [resolver, hits] : res.histogram) {
      report.resolver_histogram[resolver] += hits;
    }
    report.two_candidates.insert(report.two_candidates.end(),
                                 res.two_candidates.begin(),
                                 res.two_candidates.end());
    report.mismatches.insert(report.mismatches.end(), res.mismatches.begin(),
                             res.mismatches.end());
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace detail

// Every graph (every class for the built-in enumeration, or every corpus
// line) with every vertex hidden in turn.
inline VerificationReport verify_graphs(int n, const std::vector<Graph>& graphs,
                                        const VerifyOptions& options = {}) {
  std::vector<detail::Job> jobs;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != n) {
      fail(Errc::MixedOrders, "graph " + std::to_string(i) + " has order " +
                                  std::to_string(graphs[i].order()));
    }
    for (Vertex v = 0; v < n; ++v) jobs.push_back({i, v});
  }
  return detail::run_jobs(n, graphs, jobs, options);
}

inline VerificationReport verify_exhaustive(int n,
                                            const VerifyOptions& options = {}) {
  return verify_graphs(n, enumerate_graphs(n), options);
}

struct RandomSpec {
  int n = 0;
  int samples = 0;
  double p = 0.5;
  unsigned long long seed = 0;
  // Reject samples whose average degree 2m/n exceeds this (negative: keep all).
  double max_avg_degree = -1;
};

// Samples are drawn sequentially from one seeded stream (graph, then hidden
// vertex) so the instance list does not depend on the thread count.
inline VerificationReport verify_random(const RandomSpec& spec,
                                        const VerifyOptions& options = {}) {
  if (spec.n < kMinReconstructibleOrder || spec.n > kMaxOrder) {
    fail(Errc::UnsupportedOrder, "random verification needs 7 <= n <= 62");
  }
  if (spec.samples < 0 || spec.p < 0 || spec.p > 1) {
    fail(Errc::InvalidArgument, "bad sample count or edge probability");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> pick(0, spec.n - 1);
  std::vector<Graph> graphs;
  std::vector<detail::Job> jobs;
  long rejected = 0;
  while (static_cast<int>(graphs.size()) < spec.samples) {
    Graph g = random_graph(spec.n, spec.p, rng);
    if (spec.max_avg_degree >= 0 &&
        2.0 * static_cast<double>(g.edge_count()) >
            spec.max_avg_degree * spec.n) {
      if (++rejected > 1000L * (spec.samples + 1)) {
        fail(Errc::InvalidArgument, "degree bound rejects nearly every sample");
      }
      continue;
    }
    jobs.push_back({graphs.size(), pick(rng)});
    graphs.push_back(std::move(g));
  }
  return detail::run_jobs(spec.n, graphs, jobs, options);
}

}  // namespace deckrecon
