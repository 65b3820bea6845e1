#ifndef DYNBC_DYNAMICS_HPP_
#define DYNBC_DYNAMICS_HPP_

#include <random>
#include <vector>

#include <dynbc/edge_list.hpp>
#include <dynbc/graph.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

/// Base graph plus the batch sequence to replay against it.
struct DynamicsPlan {
    DynamicGraph base;
    std::vector<std::vector<EdgeEvent>> batches; // internal ids of `base`
    count truncatedEvents = 0; // events dropped because no edge was available
};

/**
 * Replay of recorded history: the x newest unique edges (ties keep input
 * order) are withheld from the base graph and handed back as insert batches
 * in timestamp order; the last batch may be smaller.
 */
DynamicsPlan genRealDynamics(const std::vector<EdgeRecord> &records, EdgeListMode mode, count x,
                             count batchSize);

/**
 * Random churn: x uniformly chosen edges are withheld from the base graph;
 * each generated event is, with probability 1/2, the reinsertion of a
 * currently withheld edge, otherwise the deletion of a uniformly random
 * present edge. ceil(x / batchSize) batches of batchSize events are emitted
 * (no two events on the same pair within a batch); if one side runs out the
 * event count is truncated and reported.
 */
DynamicsPlan genRandomDynamics(const DynamicGraph &graph, count x, count batchSize,
                               std::mt19937_64 &rng);

/**
 * Random weight churn on a weighted graph: x distinct edges each get their
 * weight multiplied by a uniform factor in (0,2), floored at 1e-9 to stay
 * positive, split into batches of batchSize.
 */
DynamicsPlan genWeightDynamics(const DynamicGraph &graph, count x, count batchSize,
                               std::mt19937_64 &rng);

/**
 * Seeded small-world graph for benchmarks: a ring for connectivity plus
 * random chords with geometrically distributed span, giving locality and a
 * small diameter. A stand-in, not a model of any particular generator.
 */
DynamicGraph syntheticGraph(count n, count m, std::uint64_t seed);

} // namespace dynbc

#endif // DYNBC_DYNAMICS_HPP_
