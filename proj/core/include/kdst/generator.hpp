#pragma once

#include <cstdint>
#include <string>

namespace kdst {

struct GeneratorParams {
  int steiner_count = 1;
  int terminal_count = 2;
  double density = 0.5;  // candidate-edge keep probability, in (0,1]
  int max_weight = 10;   // integer weights drawn uniformly from 1..max_weight
  int k = 1;
  std::uint64_t seed = 0;
};

// Random instance in the text format, byte-deterministic under the seed.
// Terminals have out-degree 0 by construction; candidate edges run from the
// root and the Steiner nodes to everything else. Terminals left short of k
// edge-disjoint paths get k parallel root edges of maximal weight, so the
// output is always k-feasible. Throws Error on out-of-range parameters.
std::string generate_instance(const GeneratorParams& params);

} // namespace kdst
