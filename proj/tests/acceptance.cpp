// Acceptance gate: runs every pinned criterion and prints one line per result.
// Exit status is the number of failing criteria. An optional argument restricts
// the run to a single criterion id.

#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

#include "parab/verify.hpp"

int main(int argc, char** argv) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("PARAB_TEST_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) threads = static_cast<unsigned>(v);
  }

  std::printf("running acceptance criteria on %u threads\n", threads);
  std::vector<parab::CriterionResult> results;
  if (argc > 1) {
    results.push_back(parab::run_criterion(std::atoi(argv[1]), threads));
  } else {
    results = parab::run_all_criteria(threads);
  }
  int failures = 0;
  for (const parab::CriterionResult& r : results) {
    std::printf("%s %2d %-26s %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.label.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
