// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "tightspan/acceptance.hpp"
#include "tightspan/parallel.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<tightspan::acceptance::CriterionResult> results(13);
  tightspan::parallel_for(13, [&](std::size_t i) {
    results[i] = tightspan::acceptance::run_one(static_cast<int>(i) + 1, seed);
  });

  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id
              << ": " << r.name << " — " << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES present")
            << " (seed " << seed << ")\n";
  return all_pass ? 0 : 1;
}
