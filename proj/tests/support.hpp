#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deckrecon.hpp"

namespace testing_support {

using namespace deckrecon;

inline std::string data_path(const std::string& name) {
  return std::string(DECKRECON_TEST_DATA) + "/" + name;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

inline Graph relabeled(const Graph& g, std::mt19937_64& rng) {
  return relabel(g, random_permutation(g.order(), rng));
}

inline PartialDeck partial(const Graph& g, Vertex hidden) {
  return hide(deal(g), g, hidden);
}

}  // namespace testing_support
