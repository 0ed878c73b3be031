#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syzkit/cring.hpp"

namespace syz {

// Declaration of one worked example: ring block, module block, analysis
// parameters. Parsed from a small TOML subset (tables, integer / string /
// array values, comments); parse errors carry file:line:column positions.
struct ExampleSpec {
  std::string name;

  uint32_t p = 101;
  std::vector<std::string> vars;
  std::vector<std::string> f_text;

  int rank = 0;
  std::vector<int> shifts;                               // defaults to all zero
  std::vector<std::vector<std::string>> relation_columns;  // one vector per column

  int steps = 12;
  int degree_bound = 12;
  int period = 2;
  int trials = 20;
  uint64_t seed = 1;
};

ExampleSpec parse_spec(const std::string& path);
ExampleSpec parse_spec_text(const std::string& text, const std::string& name);

struct ModelObjects {
  CIRing ring;
  Presentation module;
};

// Builds the validated ring and module; rejects bad polynomials, non-prime
// moduli and inhomogeneous relations with located messages.
ModelObjects build_model(const ExampleSpec& spec);

}  // namespace syz
