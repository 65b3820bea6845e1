#include <dynbc/graph.hpp>

#include <algorithm>
#include <map>
#include <queue>

namespace dynbc {

DynamicGraph::DynamicGraph(count n, bool weighted)
    : adjacency_(n), externalIds_(n), weighted_(weighted) {
    for (count i = 0; i < n; ++i)
        externalIds_[i] = i;
}

bool DynamicGraph::hasEdge(node u, node v) const {
    const auto &adj = adjacency_[u];
    return std::any_of(adj.begin(), adj.end(), [v](const Neighbor &nb) { return nb.v == v; });
}

std::optional<edgeweight> DynamicGraph::edgeWeight(node u, node v) const {
    for (const Neighbor &nb : adjacency_[u])
        if (nb.v == v)
            return nb.weight;
    return std::nullopt;
}

void DynamicGraph::addEdge(node u, node v, edgeweight w) {
    if (u == v)
        throw DomainError("self-loops are not allowed");
    if (u >= numberOfNodes() || v >= numberOfNodes())
        throw DomainError("node id out of range");
    if (!(w > 0))
        throw DomainError("edge weight must be strictly positive");
    if (hasEdge(u, v))
        throw ConsistencyError("edge already present");
    adjacency_[u].push_back({v, w});
    adjacency_[v].push_back({u, w});
    ++edgeCount_;
}

void DynamicGraph::removeEdge(node u, node v) {
    auto erase = [this](node a, node b) {
        auto &adj = adjacency_[a];
        auto it = std::find_if(adj.begin(), adj.end(), [b](const Neighbor &nb) { return nb.v == b; });
        if (it == adj.end())
            throw ConsistencyError("removeEdge: edge not present");
        adj.erase(it);
    };
    erase(u, v);
    erase(v, u);
    --edgeCount_;
}

void DynamicGraph::setWeight(node u, node v, edgeweight w) {
    if (!(w > 0))
        throw DomainError("edge weight must be strictly positive");
    auto assign = [this, w](node a, node b) {
        for (Neighbor &nb : adjacency_[a]) {
            if (nb.v == b) {
                nb.weight = w;
                return;
            }
        }
        throw ConsistencyError("setWeight: edge not present");
    };
    assign(u, v);
    assign(v, u);
}

edgeweight DynamicGraph::minEdgeWeight() const {
    edgeweight w = infiniteDistance;
    for (const auto &adj : adjacency_)
        for (const Neighbor &nb : adj)
            w = std::min(w, nb.weight);
    return w;
}

edgeweight DynamicGraph::maxEdgeWeight() const {
    edgeweight w = 0;
    for (const auto &adj : adjacency_)
        for (const Neighbor &nb : adj)
            w = std::max(w, nb.weight);
    return w;
}

void DynamicGraph::forEdges(const std::function<void(node, node, edgeweight)> &handle) const {
    for (node u = 0; u < adjacency_.size(); ++u)
        for (const Neighbor &nb : adjacency_[u])
            if (u < nb.v)
                handle(u, nb.v, nb.weight);
}

void DynamicGraph::setExternalIds(std::vector<std::uint64_t> ids) {
    if (ids.size() != adjacency_.size())
        throw ConsistencyError("external id table size mismatch");
    externalIds_ = std::move(ids);
}

void DynamicGraph::audit() const {
    count entries = 0;
    for (node u = 0; u < adjacency_.size(); ++u) {
        std::vector<node> seen;
        for (const Neighbor &nb : adjacency_[u]) {
            if (nb.v == u)
                throw ConsistencyError("audit: self-loop at node " + std::to_string(u));
            if (nb.v >= adjacency_.size())
                throw ConsistencyError("audit: neighbor id out of range");
            if (!(nb.weight > 0))
                throw ConsistencyError("audit: nonpositive weight");
            if (!weighted_ && nb.weight != 1.0)
                throw ConsistencyError("audit: non-unit weight in unweighted graph");
            auto back = edgeWeight(nb.v, u);
            if (!back || *back != nb.weight)
                throw ConsistencyError("audit: adjacency not symmetric at {"
                                       + std::to_string(u) + "," + std::to_string(nb.v) + "}");
            seen.push_back(nb.v);
            ++entries;
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw ConsistencyError("audit: parallel edge at node " + std::to_string(u));
    }
    if (entries != 2 * edgeCount_)
        throw ConsistencyError("audit: edge count does not match adjacency size");
}

bool DynamicGraph::structurallyEqual(const DynamicGraph &other) const {
    if (numberOfNodes() != other.numberOfNodes() || edgeCount_ != other.edgeCount_
        || weighted_ != other.weighted_)
        return false;
    for (node u = 0; u < adjacency_.size(); ++u) {
        auto a = adjacency_[u];
        auto b = other.adjacency_[u];
        auto byId = [](const Neighbor &x, const Neighbor &y) { return x.v < y.v; };
        std::sort(a.begin(), a.end(), byId);
        std::sort(b.begin(), b.end(), byId);
        if (a.size() != b.size())
            return false;
        for (count i = 0; i < a.size(); ++i)
            if (a[i].v != b[i].v || a[i].weight != b[i].weight)
                return false;
    }
    return true;
}

namespace {

std::pair<node, node> orderedPair(node u, node v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::string pairStr(std::pair<node, node> p) {
    return std::to_string(p.first) + " " + std::to_string(p.second);
}

} // namespace

std::vector<std::string> BatchDigest::lines() const {
    std::vector<std::string> out;
    for (auto p : droppedDeletes)
        out.push_back("dropped-delete\t" + pairStr(p) + "\tedge absent");
    for (auto p : droppedInserts)
        out.push_back("dropped-insert\t" + pairStr(p) + "\tedge present, unit weight");
    for (auto p : rewrittenInserts)
        out.push_back("insert-to-set-weight\t" + pairStr(p) + "\tedge present");
    for (auto p : unresolvedSetWeights)
        out.push_back("set-weight-on-absent\t" + pairStr(p) + "\twill fail on apply");
    if (supersededEvents > 0)
        out.push_back("superseded-events\t" + std::to_string(supersededEvents));
    return out;
}

UpdateBatch normalizeBatch(const std::vector<EdgeEvent> &events, const DynamicGraph &graph,
                           BatchDigest *digest) {
    BatchDigest local;
    BatchDigest &dig = digest ? *digest : local;

    // Last event per unordered pair wins; pairs keep first-seen order.
    std::map<std::pair<node, node>, count> slot;
    std::vector<EdgeEvent> last;
    for (const EdgeEvent &ev : events) {
        if (ev.u == ev.v)
            throw DomainError("batch event with identical endpoints");
        if (ev.u >= graph.numberOfNodes() || ev.v >= graph.numberOfNodes())
            throw DomainError("batch event on unknown node");
        if (ev.kind != EventKind::Delete && !(ev.weight > 0))
            throw DomainError("batch event with nonpositive weight");
        auto key = orderedPair(ev.u, ev.v);
        auto it = slot.find(key);
        if (it == slot.end()) {
            slot.emplace(key, last.size());
            last.push_back(ev);
        } else {
            last[it->second] = ev;
            ++dig.supersededEvents;
        }
    }

    UpdateBatch batch;
    for (const EdgeEvent &ev : last) {
        const bool present = graph.hasEdge(ev.u, ev.v);
        switch (ev.kind) {
        case EventKind::Insert:
            if (present) {
                if (graph.isWeighted()) {
                    dig.rewrittenInserts.push_back(orderedPair(ev.u, ev.v));
                    batch.events.push_back(EdgeEvent::setWeight(ev.u, ev.v, ev.weight));
                } else {
                    // Unit weights make a re-insert a no-op.
                    dig.droppedInserts.push_back(orderedPair(ev.u, ev.v));
                }
            } else {
                batch.events.push_back(ev);
            }
            break;
        case EventKind::Delete:
            if (present)
                batch.events.push_back(ev);
            else
                dig.droppedDeletes.push_back(orderedPair(ev.u, ev.v));
            break;
        case EventKind::SetWeight:
            if (!present)
                dig.unresolvedSetWeights.push_back(orderedPair(ev.u, ev.v));
            batch.events.push_back(ev);
            break;
        }
    }
    return batch;
}

void applyBatch(DynamicGraph &graph, const UpdateBatch &batch) {
    for (const EdgeEvent &ev : batch.events) {
        switch (ev.kind) {
        case EventKind::Insert:
            if (graph.hasEdge(ev.u, ev.v))
                throw ConsistencyError("applyBatch: insert of existing edge (batch not normalized?)");
            graph.addEdge(ev.u, ev.v, graph.isWeighted() ? ev.weight : 1.0);
            break;
        case EventKind::Delete:
            if (!graph.hasEdge(ev.u, ev.v))
                throw ConsistencyError("applyBatch: delete of absent edge");
            graph.removeEdge(ev.u, ev.v);
            break;
        case EventKind::SetWeight:
            if (!graph.hasEdge(ev.u, ev.v))
                throw ConsistencyError("applyBatch: weight update on absent edge");
            graph.setWeight(ev.u, ev.v, ev.weight);
            break;
        }
    }
}

std::vector<EdgeEvent> inverseEvents(const DynamicGraph &preBatchGraph, const UpdateBatch &batch) {
    std::vector<EdgeEvent> inverse;
    for (const EdgeEvent &ev : batch.events) {
        switch (ev.kind) {
        case EventKind::Insert:
            inverse.push_back(EdgeEvent::remove(ev.u, ev.v));
            break;
        case EventKind::Delete: {
            auto w = preBatchGraph.edgeWeight(ev.u, ev.v);
            if (!w)
                throw ConsistencyError("inverseEvents: deleted edge missing in pre-batch graph");
            inverse.push_back(EdgeEvent::insert(ev.u, ev.v, *w));
            break;
        }
        case EventKind::SetWeight: {
            auto w = preBatchGraph.edgeWeight(ev.u, ev.v);
            if (!w)
                throw ConsistencyError("inverseEvents: weight-updated edge missing in pre-batch graph");
            inverse.push_back(EdgeEvent::setWeight(ev.u, ev.v, *w));
            break;
        }
        }
    }
    return inverse;
}

std::vector<count> connectedComponents(const DynamicGraph &graph) {
    const count n = graph.numberOfNodes();
    std::vector<count> label(n, none);
    count next = 0;
    std::queue<node> queue;
    for (node s = 0; s < n; ++s) {
        if (label[s] != none)
            continue;
        label[s] = next;
        queue.push(s);
        while (!queue.empty()) {
            node u = queue.front();
            queue.pop();
            for (const auto &nb : graph.neighbors(u)) {
                if (label[nb.v] == none) {
                    label[nb.v] = next;
                    queue.push(nb.v);
                }
            }
        }
        ++next;
    }
    return label;
}

count countComponents(const DynamicGraph &graph) {
    auto label = connectedComponents(graph);
    count c = 0;
    for (count l : label)
        c = std::max(c, l + 1);
    return graph.numberOfNodes() == 0 ? 0 : c;
}

} // namespace dynbc
