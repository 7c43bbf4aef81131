#include "kdst/rounding.hpp"

#include "kdst/errors.hpp"

#include <cmath>
#include <random>

namespace kdst {

int default_rounds(const Instance& inst) {
  // log2 of min(2^|S| * |T|, 2^(|V|-1)), decided by exact integer compare
  const int steiner = inst.steiner_count();
  const int terminals = inst.terminal_count();
  const int vertices = inst.vertex_count();

  bool strict_count_smaller;
  if (steiner >= vertices - 1) {
    strict_count_smaller = false;
  } else {
    int shift = vertices - 1 - steiner;
    strict_count_smaller =
        shift >= 63 || static_cast<std::uint64_t>(terminals) <= (std::uint64_t{1} << shift);
  }

  long double log2_bound = strict_count_smaller
                               ? steiner + std::log2l(static_cast<long double>(terminals))
                               : vertices - 1;
  // ln(2N) = ln2 * (1 + log2 N)
  long double rounds = std::ceill(0.69314718055994530942L * (1.0L + log2_bound));
  return std::max(1, static_cast<int>(rounds));
}

std::vector<int> round_cover(const FractionalSolution& x, const CoreGraph& core_graph,
                             const AugState& state, const MinimalCoreFamily& cores,
                             const RoundingConfig& config) {
  const std::size_t num_edges = core_graph.edges.size();
  if (x.values.size() != num_edges) {
    throw Error("fractional solution does not match the core graph");
  }
  const int rounds = config.rounds > 0 ? config.rounds : default_rounds(state.instance());
  if (config.max_attempts < 1) throw Error("rounding needs at least one attempt");

  // per-edge inclusion thresholds against a uniform 64-bit draw:
  // keep iff draw < floor(min(1, x_e) * 2^64)
  std::vector<bool> always(num_edges, false);
  std::vector<std::uint64_t> threshold(num_edges, 0);
  for (std::size_t i = 0; i < num_edges; ++i) {
    if (x.values[i] >= 1) {
      always[i] = true;
      continue;
    }
    mpz_class scaled = (x.values[i].get_num() << 64) / x.values[i].get_den();
    // x < 1 keeps scaled below 2^64, which fits unsigned long on LP64
    static_assert(sizeof(unsigned long) == 8);
    threshold[i] = scaled.get_ui();
  }

  const Rational weight_cap = Rational(2 * rounds) * x.objective(core_graph);

  std::mt19937_64 rng(config.seed);
  for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
    std::vector<bool> in_cover(num_edges, false);
    for (int round = 0; round < rounds; ++round) {
      for (std::size_t i = 0; i < num_edges; ++i) {
        std::uint64_t draw = rng();  // one draw per (round, edge), always
        if (always[i] || draw < threshold[i]) in_cover[i] = true;
      }
    }

    std::vector<int> picked;
    FractionalSolution indicator;
    indicator.values.assign(num_edges, Rational(0));
    for (std::size_t i = 0; i < num_edges; ++i) {
      if (in_cover[i]) {
        picked.push_back(static_cast<int>(i));
        indicator.values[i] = 1;
      }
    }

    // accept only on an oracle-verified cover within the weight bound,
    // never on the probabilistic argument alone
    if (core_graph.weight_of(picked) > weight_cap) continue;
    if (!separation_oracle(core_graph, state, cores, indicator).feasible()) continue;
    return picked;
  }

  throw InternalError("randomized rounding failed " + std::to_string(config.max_attempts) +
                      " attempts at " + std::to_string(rounds) +
                      " rounds; per-attempt success should be a positive constant");
}

} // namespace kdst
