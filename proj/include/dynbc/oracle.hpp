#ifndef DYNBC_ORACLE_HPP_
#define DYNBC_ORACLE_HPP_

#include <vector>

#include <dynbc/bc_sampler.hpp>
#include <dynbc/graph.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

/**
 * Ground-truth engines for tests and benchmarks. Pure functions over an
 * unmutated graph; safe to call concurrently. Correctness anchors, not
 * performance code.
 */

/// Exact betweenness, normalized by n*(n-1): for each node the fraction of
/// shortest paths over all ordered pairs that pass through it as an interior
/// node. Disconnected pairs contribute nothing.
std::vector<double> brandes(const DynamicGraph &graph);

/// Exact vertex diameter: the maximum, over all connected node pairs, of the
/// largest node count among minimum-weight paths between them. Equals
/// diameter + 1 on unweighted graphs; 0 on the empty graph.
count exactVertexDiameter(const DynamicGraph &graph);

/// From-scratch sampling baseline: fresh diameter bound, fresh sample count,
/// fresh SSSPs and path draws. Seed-for-seed it produces exactly the scores
/// of initBC; used as the recomputation baseline in benchmarks.
std::vector<std::pair<std::uint64_t, double>> staticRK(const DynamicGraph &graph,
                                                       const BCParams &params);

} // namespace dynbc

#endif // DYNBC_ORACLE_HPP_
