#ifndef DYNBC_VD_TRACKER_HPP_
#define DYNBC_VD_TRACKER_HPP_

#include <vector>

#include <dynbc/graph.hpp>
#include <dynbc/sssp.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

/**
 * Maintains one vertex-diameter estimate per connected component under batch
 * updates: one SSSP state per component plus shared visit counters. When
 * components merge, the superfluous source is retired (its contribution to
 * the counters is released node by node, so the counters always equal the
 * number of tracked states reaching each node); when components split, nodes
 * whose counter drains to zero seed fresh sources.
 *
 * Single writer per tracker; the current estimate may be read freely between
 * updates.
 */
class VDTracker {
public:
    struct Entry {
        node source;
        SSSPState state;
        edgeweight vd;
    };

    VDTracker() = default;

    /// One source per component, discovered by scanning the node queue and
    /// skipping already-visited nodes. Returns the tracker and the global
    /// estimate (max over components; 0 for an empty graph).
    static VDTracker init(const DynamicGraph &graph);

    /// Repairs per-component estimates after `batch` (already applied to
    /// `graph`): retires merged-away sources, updates the survivors, spawns
    /// sources for freshly uncovered components. Returns the new global estimate.
    edgeweight update(const DynamicGraph &graph, const UpdateBatch &batch);

    edgeweight globalEstimate() const;
    count numberOfComponents() const { return entries_.size(); }
    const std::vector<Entry> &entries() const { return entries_; }
    const VisCounters &vis() const { return vis_; }

    /// Invariants: vis >= 1 everywhere, vis equals the number of states
    /// reaching each node, exactly one source per component, every estimate
    /// at least 1. Throws ConsistencyError.
    void audit(const DynamicGraph &graph) const;

private:
    void spawnFrom(const DynamicGraph &graph, std::vector<node> &queue);
    void retire(count index, std::vector<node> &uncovered);

    std::vector<Entry> entries_;
    VisCounters vis_;
};

/// Fresh global estimate without keeping any state: init-scan, take the max,
/// discard. This is what the sampler uses to size its initial sample set.
edgeweight approxVertexDiameter(const DynamicGraph &graph);

} // namespace dynbc

#endif // DYNBC_VD_TRACKER_HPP_
