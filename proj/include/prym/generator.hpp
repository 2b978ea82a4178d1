#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "prym/cover.hpp"
#include "prym/graph.hpp"

namespace prym {

enum class GenMode { Free, EdgeFree, General };

const char* to_string(GenMode m);
/// Throws ParseError for unknown names.
GenMode parse_gen_mode(const std::string& name);

/// Random connected multigraph on vertices v1..vN with edges e1..eM
/// (loops and parallel edges allowed) and lengths p/q, 1 <= p <= 5,
/// 1 <= q <= 3. Throws InfeasibleError when M < N - 1.
MetricGraph random_connected_graph(int vertices, int edges, std::mt19937_64& rng);

/// Voltage data for a random cover of the requested class with connected
/// total graph. Deterministic in the seed. Throws InfeasibleError outside
/// 1 <= N <= 10, M <= 14, M >= N - 1, or when the class cannot be met
/// (a free cover needs a cycle; a general one needs an edge).
VoltageSpec generate_cover(int vertices, int edges, GenMode mode, std::uint64_t seed);

}  // namespace prym
