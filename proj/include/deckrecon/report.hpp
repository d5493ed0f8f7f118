#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "deckrecon/verify.hpp"

namespace deckrecon {

namespace detail {

// Counts travel as JSON integers while they fit, as decimal strings beyond.
inline nlohmann::ordered_json count_json(const std::string& digits) {
  if (digits.empty()) return nullptr;
  if (digits.size() < 19) return std::stoll(digits);
  return digits;
}

}  // namespace detail

// Field order is fixed: n, totals, resolver_histogram, two_candidates,
// mismatches, seconds.
inline nlohmann::ordered_json to_json(const VerificationReport& report,
                                      bool with_time = true) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  const auto& t = report.totals;
  j["totals"] = {
      {"graphs", t.graphs},
      {"instances", t.instances},
      {"rows", t.rows},
      {"determined", t.determined},
      {"two_candidates", t.two_candidates},
      {"fully_determined_instances", t.fully_determined_instances},
      {"degree_mismatches", t.degree_mismatches},
      {"ambiguous_degree_sequences", t.ambiguous_degree_sequences},
      {"errors", t.errors},
      {"small_delta_instances", t.small_delta_instances},
      {"small_delta_two_candidates", t.small_delta_two_candidates},
      {"mismatches", static_cast<long>(report.mismatches.size())},
  };
  auto& hist = j["resolver_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [resolver, hits] : report.resolver_histogram) {
    hist[std::string(to_string(resolver))] = hits;
  }
  auto& two = j["two_candidates"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.two_candidates) {
    two.push_back({{"graph6", rec.graph6},
                   {"hidden", rec.hidden},
                   {"r", rec.r},
                   {"ell", rec.ell},
                   {"low", detail::count_json(rec.low)},
                   {"high", detail::count_json(rec.high)},
                   {"truth", detail::count_json(rec.truth)}});
  }
  auto& bad = j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.mismatches) {
    bad.push_back({{"graph6", rec.graph6},
                   {"hidden", rec.hidden},
                   {"r", rec.r},
                   {"kind", rec.kind},
                   {"expected", rec.expected},
                   {"got", rec.got}});
  }
  if (with_time) j["seconds"] = report.seconds;
  return j;
}

inline std::string to_csv(const VerificationReport& report) {
  const auto& t = report.totals;
  std::ostringstream out;
  out << "metric,value\n";
  out << "n," << report.n << "\n";
  out << "graphs," << t.graphs << "\n";
  out << "instances," << t.instances << "\n";
  out << "rows," << t.rows << "\n";
  out << "determined," << t.determined << "\n";
  out << "two_candidates," << t.two_candidates << "\n";
  out << "fully_determined_instances," << t.fully_determined_instances << "\n";
  out << "degree_mismatches," << t.degree_mismatches << "\n";
  out << "ambiguous_degree_sequences," << t.ambiguous_degree_sequences << "\n";
  out << "errors," << t.errors << "\n";
  out << "small_delta_instances," << t.small_delta_instances << "\n";
  out << "small_delta_two_candidates," << t.small_delta_two_candidates << "\n";
  out << "mismatches," << report.mismatches.size() << "\n";
  for (const auto& [resolver, hits] : report.resolver_histogram) {
    out << "resolver." << to_string(resolver) << "," << hits << "\n";
  }
  out << "seconds," << report.seconds << "\n";
  return out.str();
}

}  // namespace deckrecon
