// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status 0 iff all criteria pass.

#include "garside/verify.hpp"

#include <cstdio>

int main() {
  const auto results = garside::run_acceptance();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("criterion %2d: %s  %s (%s) [%.2fs]\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
