// Writes one graph6 line per isomorphism class of order-n graphs, built by
// extending the classes of order n-1 by one vertex. Used to produce corpus
// files for `deckrecon verify --n N --corpus FILE` beyond the built-in n <= 7.

#include <iostream>
#include <string>

#include "deckrecon.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: enumerate_graphs N\n";
    return 2;
  }
  int n = 0;
  try {
    n = std::stoi(argv[1]);
  } catch (const std::exception&) {
    std::cerr << "N must be an integer\n";
    return 2;
  }
  if (n < 1 || n > 9) {
    std::cerr << "N must lie in [1, 9]\n";
    return 3;
  }
  std::vector<deckrecon::Graph> classes{deckrecon::Graph(1)};
  for (int k = 2; k <= n; ++k) classes = deckrecon::extend_classes(classes);
  for (const auto& g : classes) std::cout << deckrecon::emit_graph6(g) << "\n";
  return 0;
}
