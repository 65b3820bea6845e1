#include <dynbc/vd_tracker.hpp>

#include <algorithm>

namespace dynbc {

VDTracker VDTracker::init(const DynamicGraph &graph) {
    VDTracker tracker;
    const count n = graph.numberOfNodes();
    tracker.vis_ = VisCounters(n);

    std::vector<node> queue(n);
    for (node v = 0; v < n; ++v)
        queue[v] = v;
    tracker.spawnFrom(graph, queue);
    return tracker;
}

void VDTracker::spawnFrom(const DynamicGraph &graph, std::vector<node> &queue) {
    for (count i = 0; i < queue.size(); ++i) {
        const node s = queue[i];
        if (vis_[s] != 0)
            continue;
        Entry entry;
        entry.source = s;
        entry.state = initSssp(graph, s);
        entry.state.forEachReachable([this](node v) { vis_.increment(v); });
        entry.vd = entry.state.vdEstimate();
        entries_.push_back(std::move(entry));
    }
    queue.clear();
}

void VDTracker::retire(count index, std::vector<node> &uncovered) {
    entries_[index].state.forEachReachable([&](node v) {
        if (vis_.decrement(v))
            uncovered.push_back(v);
    });
}

edgeweight VDTracker::update(const DynamicGraph &graph, const UpdateBatch &batch) {
    std::vector<node> uncovered;
    std::vector<Entry> kept;
    kept.reserve(entries_.size());

    for (count i = 0; i < entries_.size(); ++i) {
        // A source seen by more than its own state sits in a component that
        // some earlier state already covers; retire it instead of updating.
        if (vis_[entries_[i].source] > 1) {
            retire(i, uncovered);
            continue;
        }
        Entry entry = std::move(entries_[i]);
        UpdateReport report = updateSssp(graph, entry.state, batch, vis_);
        for (node v : report.visZeroed)
            uncovered.push_back(v);
        entry.vd = entry.state.vdEstimate();
        kept.push_back(std::move(entry));
    }
    entries_ = std::move(kept);

    spawnFrom(graph, uncovered);
    return globalEstimate();
}

edgeweight VDTracker::globalEstimate() const {
    edgeweight vd = 0;
    for (const Entry &entry : entries_)
        vd = std::max(vd, entry.vd);
    return vd;
}

void VDTracker::audit(const DynamicGraph &graph) const {
    const count n = graph.numberOfNodes();
    std::vector<std::uint32_t> expected(n, 0);
    for (const Entry &entry : entries_) {
        entry.state.audit(graph);
        entry.state.forEachReachable([&](node v) { ++expected[v]; });
        if (entry.vd != entry.state.vdEstimate())
            throw ConsistencyError("vd tracker audit: stale estimate");
        if (entry.vd < 1)
            throw ConsistencyError("vd tracker audit: estimate below 1");
    }
    for (node v = 0; v < n; ++v) {
        if (expected[v] != vis_[v])
            throw ConsistencyError("vd tracker audit: vis counter mismatch at node "
                                   + std::to_string(v));
        if (vis_[v] < 1)
            throw ConsistencyError("vd tracker audit: uncovered node " + std::to_string(v));
    }
    auto label = connectedComponents(graph);
    std::vector<count> sourcesPerComponent(countComponents(graph), 0);
    for (const Entry &entry : entries_)
        ++sourcesPerComponent[label[entry.source]];
    for (count c = 0; c < sourcesPerComponent.size(); ++c)
        if (sourcesPerComponent[c] != 1)
            throw ConsistencyError("vd tracker audit: component " + std::to_string(c) + " has "
                                   + std::to_string(sourcesPerComponent[c]) + " sources");
}

edgeweight approxVertexDiameter(const DynamicGraph &graph) {
    const count n = graph.numberOfNodes();
    edgeweight vd = 0;
    std::vector<bool> visited(n, false);
    for (node s = 0; s < n; ++s) {
        if (visited[s])
            continue;
        SSSPState state = initSssp(graph, s);
        state.forEachReachable([&](node v) { visited[v] = true; });
        vd = std::max(vd, state.vdEstimate());
    }
    return vd;
}

} // namespace dynbc
