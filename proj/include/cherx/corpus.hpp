#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherx {

// One frozen CLI invocation with its expected byte-exact output.
struct GoldenCase {
  std::string id;
  std::vector<std::string> args;
  std::string expected;
};

const std::vector<GoldenCase>& golden_cases();

// Runs every golden case; logs one line per case. True when all pass.
bool run_corpus(std::ostream& log);

// Corpus plus seeded randomized property samples.
bool run_selftest(unsigned seed, std::ostream& log);

}  // namespace cherx
