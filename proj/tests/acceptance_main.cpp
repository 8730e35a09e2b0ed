// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <iostream>

#include "arcext/suite.hpp"

int main(int argc, char** argv) {
  arcext::SuiteConfig cfg;
  if (argc > 1) cfg = arcext::SuiteConfig::from_file(argv[1]);
  arcext::SuiteReport rep = arcext::run_suite(cfg);
  std::cout << rep.to_lines();
  return rep.all_pass() ? 0 : 1;
}
