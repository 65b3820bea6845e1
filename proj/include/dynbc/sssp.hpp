#ifndef DYNBC_SSSP_HPP_
#define DYNBC_SSSP_HPP_

#include <map>
#include <vector>

#include <dynbc/graph.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

/**
 * Shared per-node visit counters: how many maintained SSSP states currently
 * reach each node. A node dropping to zero means some component lost its
 * last covering source and a new one must be spawned.
 *
 * Increments and decrements are commutative, but this implementation assumes
 * serialized access.
 */
class VisCounters {
public:
    VisCounters() = default;
    explicit VisCounters(count n) : counts_(n, 0) {}

    count size() const { return counts_.size(); }
    std::uint32_t operator[](node v) const { return counts_[v]; }

    void increment(node v) { ++counts_[v]; }

    /// Returns true when the count reaches zero.
    bool decrement(node v) {
        if (counts_[v] == 0)
            throw ConsistencyError("vis counter underflow at node " + std::to_string(v));
        return --counts_[v] == 0;
    }

private:
    std::vector<std::uint32_t> counts_;
};

/// What a dynamic SSSP update did: reachability transitions (already applied
/// to the vis counters), nodes whose counter dropped to zero (candidates for
/// the caller's uncovered queue), and touch statistics.
struct UpdateReport {
    std::vector<node> newlyReachable;
    std::vector<node> newlyUnreachable;
    std::vector<node> visZeroed;
    count affectedCount = 0; // nodes whose distance or path count changed
    count touchedCount = 0;  // nodes examined at all, changed or not
    edgeweight maxLevelTouched = 0;
};

/**
 * Single-source shortest-path state for one sampled source: distances,
 * shortest-path counts, and the data backing the component's vertex-diameter
 * estimate (top-two distances over a counting multiset, minimum edge weight).
 *
 * One state has a single writer. Distinct states over the same graph can be
 * maintained concurrently by a caller that serializes access to the shared
 * vis counters; this implementation itself never spawns threads.
 */
class SSSPState {
public:
    SSSPState() = default;

    node source() const { return source_; }
    count numberOfNodes() const { return dist_.size(); }

    edgeweight distance(node v) const { return dist_[v]; }
    bool reachable(node v) const { return dist_[v] != infiniteDistance; }
    const pathcount &sigma(node v) const { return sigma_[v]; }

    /// Largest and second-largest finite distance from the source, counting
    /// multiplicity over nodes (the source itself contributes distance 0).
    edgeweight dFirst() const;
    edgeweight dSecond() const;

    /// Minimum edge weight observed for this state; monotone nonincreasing,
    /// +inf until the first edge is seen.
    edgeweight minWeight() const { return minWeight_; }

    /// Upper bound on the component's vertex diameter: 1 + (d' + d'') / w_min.
    /// A single-node component yields exactly 1.
    edgeweight vdEstimate() const;

    template <typename F>
    void forEachReachable(F handle) const {
        for (node v = 0; v < dist_.size(); ++v)
            if (dist_[v] != infiniteDistance)
                handle(v);
    }

    /// Consistency audit for tests: sigma additivity, multiset vs distances,
    /// triangle condition, all colors white. Throws ConsistencyError.
    void audit(const DynamicGraph &graph) const;

    /// Rebuilds a state from persisted arrays (derived structures are
    /// reconstructed). sigma[v] must be zero exactly where dist[v] is infinite.
    static SSSPState restore(node source, std::vector<edgeweight> dist,
                             std::vector<pathcount> sigma, edgeweight minWeight);

    friend SSSPState initSssp(const DynamicGraph &graph, node source);
    friend UpdateReport updateSsspWeighted(const DynamicGraph &graph, SSSPState &state,
                                           const UpdateBatch &batch, VisCounters &vis);
    friend UpdateReport updateSsspUnweighted(const DynamicGraph &graph, SSSPState &state,
                                             const UpdateBatch &batch, VisCounters &vis);

private:
    void setDistance(node v, edgeweight d);
    void recordTouch(node v, std::map<node, std::pair<edgeweight, pathcount>> &touched) const;

    node source_ = none;
    std::vector<edgeweight> dist_;
    std::vector<pathcount> sigma_;
    std::map<edgeweight, count> distHistogram_; // finite distances, with multiplicity
    edgeweight minWeight_ = infiniteDistance;
    // Workspace for the unweighted level-queue updater; all false between updates.
    mutable std::vector<bool> black_;
};

/// Exact SSSP from scratch: Dijkstra on weighted graphs, BFS on unweighted
/// ones. The caller bumps vis counters via forEachReachable.
SSSPState initSssp(const DynamicGraph &graph, node source);

/**
 * Batch-dynamic SSSP repair for weighted graphs. The graph must already
 * contain the batch; the state must be consistent with the pre-batch graph
 * and the batch must be normalized (one event per pair). Reachability
 * transitions are pushed into `vis`.
 */
UpdateReport updateSsspWeighted(const DynamicGraph &graph, SSSPState &state,
                                const UpdateBatch &batch, VisCounters &vis);

/// Level-queue variant for unit-weight graphs; rejects weight-change events.
UpdateReport updateSsspUnweighted(const DynamicGraph &graph, SSSPState &state,
                                  const UpdateBatch &batch, VisCounters &vis);

/// Dispatches on graph.isWeighted().
UpdateReport updateSssp(const DynamicGraph &graph, SSSPState &state, const UpdateBatch &batch,
                        VisCounters &vis);

/// Neighbors z of v with d(v) = d(z) + w(z,v), recomputed by scanning the
/// adjacency of v. Throws DomainError if v is unreachable.
std::vector<node> predecessors(const DynamicGraph &graph, const SSSPState &state, node v);

} // namespace dynbc

#endif // DYNBC_SSSP_HPP_
