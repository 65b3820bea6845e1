#ifndef DYNBC_GRAPH_HPP_
#define DYNBC_GRAPH_HPP_

#include <functional>
#include <optional>
#include <vector>

#include <dynbc/types.hpp>

namespace dynbc {

/**
 * Undirected graph with positive edge weights and a node set that is fixed
 * at construction time. Unweighted graphs carry weight 1 on every edge so
 * that weighted and unweighted shortest-path code share one representation.
 *
 * Mutation is exclusive: one writer, no concurrent readers while a batch is
 * being applied. Between mutations any number of readers is safe.
 */
class DynamicGraph {
public:
    struct Neighbor {
        node v;
        edgeweight weight;
    };

    DynamicGraph() = default;
    DynamicGraph(count n, bool weighted);

    count numberOfNodes() const { return adjacency_.size(); }
    count numberOfEdges() const { return edgeCount_; }
    bool isWeighted() const { return weighted_; }

    const std::vector<Neighbor> &neighbors(node u) const { return adjacency_[u]; }
    count degree(node u) const { return adjacency_[u].size(); }

    bool hasEdge(node u, node v) const;
    std::optional<edgeweight> edgeWeight(node u, node v) const;

    /// Direct mutation primitives. Batch processing goes through applyBatch;
    /// these are for loaders and tests.
    void addEdge(node u, node v, edgeweight w);
    void removeEdge(node u, node v);
    void setWeight(node u, node v, edgeweight w);

    /// Smallest and largest edge weight currently in the graph (scan).
    edgeweight minEdgeWeight() const;
    edgeweight maxEdgeWeight() const;

    void forEdges(const std::function<void(node, node, edgeweight)> &handle) const;

    /// External ids as they appeared in the input; identity unless the graph
    /// came from an edge list with gaps.
    std::uint64_t externalId(node u) const { return externalIds_[u]; }
    const std::vector<std::uint64_t> &externalIds() const { return externalIds_; }
    void setExternalIds(std::vector<std::uint64_t> ids);

    /// Throws ConsistencyError if adjacency symmetry, weight positivity,
    /// the no-self-loop/no-parallel-edge rules or the edge count are violated.
    void audit() const;

    bool structurallyEqual(const DynamicGraph &other) const;

private:
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::uint64_t> externalIds_;
    count edgeCount_ = 0;
    bool weighted_ = false;
};

enum class EventKind { Insert, Delete, SetWeight };

/// One element of a batch. Node pairs are unordered; weight is meaningful
/// for Insert and SetWeight only.
struct EdgeEvent {
    node u;
    node v;
    EventKind kind;
    edgeweight weight = 1.0;

    static EdgeEvent insert(node u, node v, edgeweight w) { return {u, v, EventKind::Insert, w}; }
    static EdgeEvent remove(node u, node v) { return {u, v, EventKind::Delete, 1.0}; }
    static EdgeEvent setWeight(node u, node v, edgeweight w) {
        return {u, v, EventKind::SetWeight, w};
    }
};

struct UpdateBatch {
    std::vector<EdgeEvent> events;

    bool empty() const { return events.empty(); }
    count size() const { return events.size(); }
};

/// Record of what normalization did to the raw event list. Emitted as
/// structured lines on the diagnostics channel, never thrown.
struct BatchDigest {
    std::vector<std::pair<node, node>> droppedDeletes;   // delete of an absent edge
    std::vector<std::pair<node, node>> droppedInserts;   // re-insert on an unweighted graph
    std::vector<std::pair<node, node>> rewrittenInserts; // insert of an existing weighted edge
    std::vector<std::pair<node, node>> unresolvedSetWeights; // set-weight on an absent edge
    count supersededEvents = 0; // earlier events overridden by later ones

    bool empty() const {
        return droppedDeletes.empty() && droppedInserts.empty() && rewrittenInserts.empty()
               && unresolvedSetWeights.empty() && supersededEvents == 0;
    }
    std::vector<std::string> lines() const;
};

/**
 * Collapses a raw event list so that at most one event per unordered node
 * pair remains (later events win) and classifies each survivor against the
 * current graph: inserts of existing edges become weight updates, deletes of
 * absent edges are dropped. A weight update on an absent edge is kept and
 * reported; applying it raises a ConsistencyError rather than guessing
 * insert semantics.
 */
UpdateBatch normalizeBatch(const std::vector<EdgeEvent> &events, const DynamicGraph &graph,
                           BatchDigest *digest = nullptr);

/// Applies a normalized batch. The node set never changes.
void applyBatch(DynamicGraph &graph, const UpdateBatch &batch);

/// Events that undo `batch` on the post-batch graph. Weights for re-inserts
/// and weight restores are taken from `graph`, which must be the pre-batch state.
std::vector<EdgeEvent> inverseEvents(const DynamicGraph &preBatchGraph, const UpdateBatch &batch);

/// Component labels, dense in [0, #components), assigned in order of the
/// smallest node id contained in each component.
std::vector<count> connectedComponents(const DynamicGraph &graph);

count countComponents(const DynamicGraph &graph);

} // namespace dynbc

#endif // DYNBC_GRAPH_HPP_
