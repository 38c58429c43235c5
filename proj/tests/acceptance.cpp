// Runs the acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "fim/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& r : fim::run_acceptance(only)) {
    std::printf("%s %2d %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
