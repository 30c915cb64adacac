// Slow acceptance suite (opt-in, 30 min budget): the large-orbit
// non-conjugacy checks.  An inconclusive (capped) search counts as a
// failure here, not merely a skip.

#include <chrono>
#include <cstdio>

#include "ctk/witness.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = ctk::witness::run_witness("W-SU4", "slow");
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  bool pass = rep.pass && !rep.claims.empty();
  for (const auto& cl : rep.claims)
    std::printf("criterion 9 claim (%s): %s%s%s\n", cl.name.c_str(),
                cl.pass ? "PASS" : "FAIL",
                cl.detail.empty() ? "" : "  ", cl.detail.c_str());
  std::printf("criterion 9 (large-orbit non-conjugacy): %s  [%.2fs]\n",
              pass ? "PASS" : "FAIL", secs);
  return pass ? 0 : 1;
}
