#include <dynbc/sssp.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include <dynbc/addressable_heap.hpp>

namespace dynbc {

namespace {

void checkNormalized(const UpdateBatch &batch) {
    std::set<std::pair<node, node>> pairs;
    for (const EdgeEvent &ev : batch.events) {
        auto key = ev.u < ev.v ? std::make_pair(ev.u, ev.v) : std::make_pair(ev.v, ev.u);
        if (!pairs.insert(key).second)
            throw ConsistencyError("batch not normalized: duplicate pair {"
                                   + std::to_string(ev.u) + "," + std::to_string(ev.v) + "}");
    }
}

struct TouchLog {
    // Original (distance, sigma) per node, captured on first modification.
    std::map<node, std::pair<edgeweight, pathcount>> original;

    void record(node v, edgeweight d, const pathcount &s) { original.try_emplace(v, d, s); }
};

UpdateReport finalizeReport(const TouchLog &log, const SSSPState &state, VisCounters &vis,
                            edgeweight maxLevel) {
    UpdateReport report;
    report.maxLevelTouched = maxLevel;
    report.touchedCount = log.original.size();
    for (const auto &[v, orig] : log.original) {
        const bool wasReachable = orig.first != infiniteDistance;
        const bool isReachable = state.reachable(v);
        if (orig.first != state.distance(v) || orig.second != state.sigma(v))
            ++report.affectedCount;
        if (!wasReachable && isReachable) {
            report.newlyReachable.push_back(v);
            vis.increment(v);
        } else if (wasReachable && !isReachable) {
            report.newlyUnreachable.push_back(v);
            if (vis.decrement(v))
                report.visZeroed.push_back(v);
        }
    }
    return report;
}

} // namespace

edgeweight SSSPState::dFirst() const {
    if (distHistogram_.empty())
        return 0;
    return distHistogram_.rbegin()->first;
}

edgeweight SSSPState::dSecond() const {
    auto it = distHistogram_.rbegin();
    if (it == distHistogram_.rend())
        return 0;
    if (it->second >= 2)
        return it->first;
    ++it;
    return it == distHistogram_.rend() ? 0 : it->first;
}

edgeweight SSSPState::vdEstimate() const {
    const edgeweight top = dFirst() + dSecond();
    if (top == 0)
        return 1; // single-node component
    return 1 + top / minWeight_;
}

void SSSPState::setDistance(node v, edgeweight d) {
    const edgeweight old = dist_[v];
    if (old != infiniteDistance) {
        auto it = distHistogram_.find(old);
        if (--it->second == 0)
            distHistogram_.erase(it);
    }
    dist_[v] = d;
    if (d != infiniteDistance)
        ++distHistogram_[d];
}

SSSPState initSssp(const DynamicGraph &graph, node source) {
    const count n = graph.numberOfNodes();
    if (source >= n)
        throw DomainError("source node out of range");

    SSSPState state;
    state.source_ = source;
    state.dist_.assign(n, infiniteDistance);
    state.sigma_.assign(n, pathcount(0));
    state.black_.assign(n, false);
    state.minWeight_ = infiniteDistance;

    state.dist_[source] = 0;
    state.sigma_[source] = 1;
    ++state.distHistogram_[0];

    if (graph.isWeighted()) {
        AddressableHeap heap(n);
        std::vector<bool> settled(n, false);
        heap.insertOrDecrease(source, 0);
        while (!heap.empty()) {
            auto [u, du] = heap.extractMin();
            settled[u] = true;
            for (const auto &nb : graph.neighbors(u)) {
                state.minWeight_ = std::min(state.minWeight_, nb.weight);
                if (settled[nb.v])
                    continue;
                const edgeweight cand = du + nb.weight;
                if (cand < state.dist_[nb.v]) {
                    state.setDistance(nb.v, cand);
                    state.sigma_[nb.v] = state.sigma_[u];
                    heap.insertOrDecrease(nb.v, cand);
                } else if (cand == state.dist_[nb.v]) {
                    state.sigma_[nb.v] += state.sigma_[u];
                }
            }
        }
    } else {
        std::queue<node> queue;
        queue.push(source);
        while (!queue.empty()) {
            node u = queue.front();
            queue.pop();
            const edgeweight du = state.dist_[u];
            for (const auto &nb : graph.neighbors(u)) {
                state.minWeight_ = std::min(state.minWeight_, nb.weight);
                if (state.dist_[nb.v] == infiniteDistance) {
                    state.setDistance(nb.v, du + 1);
                    state.sigma_[nb.v] = state.sigma_[u];
                    queue.push(nb.v);
                } else if (state.dist_[nb.v] == du + 1) {
                    state.sigma_[nb.v] += state.sigma_[u];
                }
            }
        }
    }
    return state;
}

UpdateReport updateSsspWeighted(const DynamicGraph &graph, SSSPState &state,
                                const UpdateBatch &batch, VisCounters &vis) {
    checkNormalized(batch);
    const count n = graph.numberOfNodes();
    if (state.dist_.size() != n)
        throw ConsistencyError("state size does not match graph");

    AddressableHeap heap(n);
    TouchLog log;
    edgeweight maxLevel = 0;

    // Seed the queue from the batch. For weight-bearing events the candidate
    // for the farther endpoint is min(d(near) + w, d(far)); a deletion has no
    // weight, so the farther endpoint re-derives at its current distance.
    for (const EdgeEvent &ev : batch.events) {
        if (ev.kind != EventKind::Delete)
            state.minWeight_ = std::min(state.minWeight_, ev.weight);
        const edgeweight du = state.dist_[ev.u];
        const edgeweight dv = state.dist_[ev.v];
        if (du == dv)
            continue; // equal-distance (or both-unreachable) pairs carry no shortest path
        const node nearN = du < dv ? ev.u : ev.v;
        const node farN = du < dv ? ev.v : ev.u;
        if (state.dist_[farN] == infiniteDistance && ev.kind == EventKind::Delete)
            continue;
        edgeweight candidate;
        if (ev.kind == EventKind::Delete)
            candidate = state.dist_[farN];
        else
            candidate = std::min(state.dist_[nearN] + ev.weight, state.dist_[farN]);
        heap.insertOrDecrease(farN, candidate);
    }

    while (!heap.empty()) {
        auto [w, p] = heap.extractMin();
        maxLevel = std::max(maxLevel, p);

        edgeweight con = infiniteDistance;
        for (const auto &nb : graph.neighbors(w)) {
            con = std::min(con, state.dist_[nb.v] + nb.weight);
            // Nodes reached across a component merge bring edges the batch
            // scan never saw; fold them in here to keep the bound valid.
            state.minWeight_ = std::min(state.minWeight_, nb.weight);
        }

        if (con < p) {
            // A better candidate appeared after this entry was queued; retry there.
            heap.insertOrDecrease(w, con);
            continue;
        }

        if (con == p) {
            const edgeweight oldD = state.dist_[w];
            log.record(w, oldD, state.sigma_[w]);
            pathcount sigma = 0;
            for (const auto &nb : graph.neighbors(w))
                if (state.dist_[nb.v] + nb.weight == p)
                    sigma += state.sigma_[nb.v];
            const bool changed = oldD != p || sigma != state.sigma_[w];
            state.setDistance(w, p);
            state.sigma_[w] = std::move(sigma);
            for (const auto &nb : graph.neighbors(w)) {
                if (state.dist_[nb.v] > p + nb.weight)
                    heap.insertOrDecrease(nb.v, p + nb.weight);
                else if (changed && state.dist_[nb.v] == p + nb.weight)
                    heap.insertOrDecrease(nb.v, state.dist_[nb.v]);
            }
        } else {
            if (state.dist_[w] != infiniteDistance) {
                // No path of length p exists; drop w and re-examine the nodes
                // whose shortest paths ran through it.
                const edgeweight oldD = state.dist_[w];
                log.record(w, oldD, state.sigma_[w]);
                state.setDistance(w, infiniteDistance);
                state.sigma_[w] = 0;
                for (const auto &nb : graph.neighbors(w))
                    if (state.dist_[nb.v] == oldD + nb.weight)
                        heap.insertOrDecrease(nb.v, state.dist_[nb.v]);
            }
            // Keep the candidate alive even when w is currently unreachable;
            // this entry may have swallowed (via a key decrease) the only
            // queued re-derivation of w.
            if (con != infiniteDistance)
                heap.insertOrDecrease(w, con);
        }
    }

    return finalizeReport(log, state, vis, maxLevel);
}

UpdateReport updateSsspUnweighted(const DynamicGraph &graph, SSSPState &state,
                                  const UpdateBatch &batch, VisCounters &vis) {
    if (graph.isWeighted())
        throw DomainError("unweighted updater requires a unit-weight graph");
    for (const EdgeEvent &ev : batch.events)
        if (ev.kind == EventKind::SetWeight)
            throw DomainError("weight changes are undefined on unweighted graphs");
    checkNormalized(batch);
    const count n = graph.numberOfNodes();
    if (state.dist_.size() != n)
        throw ConsistencyError("state size does not match graph");
    if (state.black_.size() != n)
        state.black_.assign(n, false);

    std::vector<std::vector<node>> queues;
    count pending = 0;
    auto enqueue = [&](node v, count level) {
        if (queues.size() <= level)
            queues.resize(level + 1);
        queues[level].push_back(v);
        ++pending;
    };

    for (const EdgeEvent &ev : batch.events) {
        const edgeweight du = state.dist_[ev.u];
        const edgeweight dv = state.dist_[ev.v];
        if (du == dv)
            continue;
        const node nearN = du < dv ? ev.u : ev.v;
        const node farN = du < dv ? ev.v : ev.u;
        if (state.dist_[farN] == infiniteDistance && ev.kind == EventKind::Delete)
            continue;
        enqueue(farN, static_cast<count>(state.dist_[nearN]) + 1);
    }

    TouchLog log;
    std::vector<node> blackened;
    count maxLevel = 0;

    for (count k = 1; pending > 0 && k < queues.size(); ++k) {
        for (count i = 0; i < queues[k].size(); ++i) {
            const node w = queues[k][i];
            --pending;
            if (state.black_[w])
                continue;
            maxLevel = std::max(maxLevel, k);

            edgeweight con = infiniteDistance;
            for (const auto &nb : graph.neighbors(w)) {
                con = std::min(con, state.dist_[nb.v] + 1);
                state.minWeight_ = std::min(state.minWeight_, nb.weight);
            }

            if (con < static_cast<edgeweight>(k))
                throw ConsistencyError("level scan passed a valid candidate for node "
                                       + std::to_string(w));

            if (con == static_cast<edgeweight>(k)) {
                const edgeweight oldD = state.dist_[w];
                log.record(w, oldD, state.sigma_[w]);
                pathcount sigma = 0;
                for (const auto &nb : graph.neighbors(w))
                    if (state.dist_[nb.v] + 1 == con)
                        sigma += state.sigma_[nb.v];
                const bool changed = oldD != con || sigma != state.sigma_[w];
                state.setDistance(w, con);
                state.sigma_[w] = std::move(sigma);
                state.black_[w] = true;
                blackened.push_back(w);
                if (changed)
                    for (const auto &nb : graph.neighbors(w))
                        if (state.dist_[nb.v] > static_cast<edgeweight>(k))
                            enqueue(nb.v, k + 1);
            } else {
                if (state.dist_[w] != infiniteDistance) {
                    log.record(w, state.dist_[w], state.sigma_[w]);
                    state.setDistance(w, infiniteDistance);
                    state.sigma_[w] = 0;
                    for (const auto &nb : graph.neighbors(w))
                        if (state.dist_[nb.v] > static_cast<edgeweight>(k))
                            enqueue(nb.v, k + 1);
                }
                // Also for already-unreachable nodes: a transiently wiped
                // neighbor may have inflated this entry's level, so the
                // candidate at con must stay alive.
                if (con != infiniteDistance)
                    enqueue(w, static_cast<count>(con));
            }
        }
        queues[k].clear();
    }

    for (node w : blackened)
        state.black_[w] = false;

    return finalizeReport(log, state, vis, static_cast<edgeweight>(maxLevel));
}

UpdateReport updateSssp(const DynamicGraph &graph, SSSPState &state, const UpdateBatch &batch,
                        VisCounters &vis) {
    return graph.isWeighted() ? updateSsspWeighted(graph, state, batch, vis)
                              : updateSsspUnweighted(graph, state, batch, vis);
}

std::vector<node> predecessors(const DynamicGraph &graph, const SSSPState &state, node v) {
    if (!state.reachable(v))
        throw DomainError("predecessors of an unreachable node");
    std::vector<node> preds;
    const edgeweight dv = state.distance(v);
    for (const auto &nb : graph.neighbors(v))
        if (state.distance(nb.v) + nb.weight == dv)
            preds.push_back(nb.v);
    return preds;
}

SSSPState SSSPState::restore(node source, std::vector<edgeweight> dist,
                             std::vector<pathcount> sigma, edgeweight minWeight) {
    if (dist.size() != sigma.size())
        throw ConsistencyError("restore: array size mismatch");
    if (source >= dist.size() || dist[source] != 0)
        throw ConsistencyError("restore: source must exist with distance 0");
    SSSPState state;
    state.source_ = source;
    state.dist_ = std::move(dist);
    state.sigma_ = std::move(sigma);
    state.black_.assign(state.dist_.size(), false);
    state.minWeight_ = minWeight;
    for (node v = 0; v < state.dist_.size(); ++v) {
        const bool reach = state.dist_[v] != infiniteDistance;
        if (reach != (state.sigma_[v] > 0))
            throw ConsistencyError("restore: sigma/reachability mismatch");
        if (reach)
            ++state.distHistogram_[state.dist_[v]];
    }
    return state;
}

void SSSPState::audit(const DynamicGraph &graph) const {
    const count n = graph.numberOfNodes();
    if (dist_.size() != n || sigma_.size() != n)
        throw ConsistencyError("sssp audit: size mismatch");
    if (dist_[source_] != 0 || sigma_[source_] != 1)
        throw ConsistencyError("sssp audit: source must have d=0, sigma=1");

    std::map<edgeweight, count> hist;
    for (node v = 0; v < n; ++v) {
        const bool reach = dist_[v] != infiniteDistance;
        if (reach)
            ++hist[dist_[v]];
        if (reach != (sigma_[v] > 0))
            throw ConsistencyError("sssp audit: sigma/reachability mismatch at node "
                                   + std::to_string(v));
        for (const auto &nb : graph.neighbors(v)) {
            if (reach && dist_[nb.v] != infiniteDistance
                && dist_[nb.v] > dist_[v] + nb.weight)
                throw ConsistencyError("sssp audit: triangle violation at edge {"
                                       + std::to_string(v) + "," + std::to_string(nb.v) + "}");
            if (reach && minWeight_ > nb.weight)
                throw ConsistencyError("sssp audit: minWeight above an incident edge weight");
        }
        if (reach && v != source_) {
            pathcount sum = 0;
            for (node z : predecessors(graph, *this, v))
                sum += sigma_[z];
            if (sum != sigma_[v])
                throw ConsistencyError("sssp audit: sigma not additive at node "
                                       + std::to_string(v));
        }
    }
    if (hist != distHistogram_)
        throw ConsistencyError("sssp audit: distance histogram out of sync");
    for (node v = 0; v < black_.size(); ++v)
        if (black_[v])
            throw ConsistencyError("sssp audit: node left black after update");
}

} // namespace dynbc
