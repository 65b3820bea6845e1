#include <dynbc/dynamics.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <dynbc/random.hpp>

namespace dynbc {

DynamicsPlan genRealDynamics(const std::vector<EdgeRecord> &records, EdgeListMode mode, count x,
                             count batchSize) {
    if (batchSize == 0)
        throw DomainError("batch size must be at least 1");
    for (const EdgeRecord &rec : records)
        if (!rec.hasTimestamp && rec.u != rec.v)
            throw DomainError("real dynamics require a timestamp on every edge");

    auto edges = dedupeRecords(records, mode);
    if (x > edges.size())
        throw DomainError("cannot withhold " + std::to_string(x) + " edges from "
                          + std::to_string(edges.size()));

    // Newest x edges by timestamp; ties keep input order (stable sort).
    std::vector<count> order(edges.size());
    for (count i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](count a, count b) { return edges[a].timestamp < edges[b].timestamp; });

    std::vector<bool> withheld(edges.size(), false);
    for (count i = order.size() - x; i < order.size(); ++i)
        withheld[order[i]] = true;

    std::vector<UniqueEdge> baseEdges;
    for (count i = 0; i < edges.size(); ++i)
        if (!withheld[i])
            baseEdges.push_back(edges[i]);

    DynamicsPlan plan;
    plan.base = buildGraph(collectExternalIds(records), baseEdges, mode != EdgeListMode::Unweighted);

    std::vector<EdgeEvent> current;
    for (count i = order.size() - x; i < order.size(); ++i) {
        const UniqueEdge &e = edges[order[i]];
        current.push_back(EdgeEvent::insert(resolveExternalId(plan.base, e.u),
                                            resolveExternalId(plan.base, e.v), e.weight));
        if (current.size() == batchSize) {
            plan.batches.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        plan.batches.push_back(std::move(current));
    return plan;
}

namespace {

struct EdgePool {
    // Present and withheld edge sets with O(1) uniform removal.
    std::vector<std::pair<node, node>> present;
    std::vector<std::pair<node, node>> withheld;
    std::map<std::pair<node, node>, edgeweight> weights;

    static std::pair<node, node> key(node u, node v) {
        return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    }

    std::pair<node, node> takeUniform(std::vector<std::pair<node, node>> &from,
                                      std::mt19937_64 &rng) {
        const count i = uniformIndex(rng, from.size());
        std::swap(from[i], from.back());
        auto edge = from.back();
        from.pop_back();
        return edge;
    }
};

} // namespace

DynamicsPlan genRandomDynamics(const DynamicGraph &graph, count x, count batchSize,
                               std::mt19937_64 &rng) {
    if (batchSize == 0)
        throw DomainError("batch size must be at least 1");
    if (x > graph.numberOfEdges())
        throw DomainError("cannot withhold more edges than the graph has");

    EdgePool pool;
    graph.forEdges([&](node u, node v, edgeweight w) {
        pool.present.push_back({u, v});
        pool.weights[EdgePool::key(u, v)] = w;
    });
    for (count i = 0; i < x; ++i)
        pool.withheld.push_back(pool.takeUniform(pool.present, rng));

    DynamicsPlan plan;
    plan.base = DynamicGraph(graph.numberOfNodes(), graph.isWeighted());
    plan.base.setExternalIds(graph.externalIds());
    for (auto [u, v] : pool.present)
        plan.base.addEdge(u, v, pool.weights.at(EdgePool::key(u, v)));

    const count nBatches = x == 0 ? 0 : (x + batchSize - 1) / batchSize;
    for (count b = 0; b < nBatches; ++b) {
        std::vector<EdgeEvent> batch;
        std::set<std::pair<node, node>> usedPairs;
        for (count i = 0; i < batchSize; ++i) {
            bool emitted = false;
            // Conflicting pairs within one batch are resampled a few times
            // before giving up on the event.
            for (int attempt = 0; attempt < 32 && !emitted; ++attempt) {
                const bool reinsert = uniformReal(rng) < 0.5;
                if (reinsert && !pool.withheld.empty()) {
                    const count pick = uniformIndex(rng, pool.withheld.size());
                    auto edge = pool.withheld[pick];
                    if (usedPairs.count(EdgePool::key(edge.first, edge.second)))
                        continue;
                    std::swap(pool.withheld[pick], pool.withheld.back());
                    pool.withheld.pop_back();
                    pool.present.push_back(edge);
                    batch.push_back(EdgeEvent::insert(edge.first, edge.second,
                                                      pool.weights.at(EdgePool::key(edge.first,
                                                                                    edge.second))));
                    usedPairs.insert(EdgePool::key(edge.first, edge.second));
                    emitted = true;
                } else if (!reinsert && !pool.present.empty()) {
                    const count pick = uniformIndex(rng, pool.present.size());
                    auto edge = pool.present[pick];
                    if (usedPairs.count(EdgePool::key(edge.first, edge.second)))
                        continue;
                    std::swap(pool.present[pick], pool.present.back());
                    pool.present.pop_back();
                    pool.withheld.push_back(edge);
                    batch.push_back(EdgeEvent::remove(edge.first, edge.second));
                    usedPairs.insert(EdgePool::key(edge.first, edge.second));
                    emitted = true;
                } else if (pool.withheld.empty() && pool.present.empty()) {
                    break;
                }
            }
            if (!emitted)
                ++plan.truncatedEvents;
        }
        if (!batch.empty())
            plan.batches.push_back(std::move(batch));
    }
    return plan;
}

DynamicsPlan genWeightDynamics(const DynamicGraph &graph, count x, count batchSize,
                               std::mt19937_64 &rng) {
    if (batchSize == 0)
        throw DomainError("batch size must be at least 1");
    if (!graph.isWeighted())
        throw DomainError("weight dynamics require a weighted graph");
    if (x > graph.numberOfEdges())
        throw DomainError("cannot change more edges than the graph has");

    std::vector<std::pair<node, node>> edges;
    std::map<std::pair<node, node>, edgeweight> weights;
    graph.forEdges([&](node u, node v, edgeweight w) {
        edges.push_back({u, v});
        weights[EdgePool::key(u, v)] = w;
    });

    DynamicsPlan plan;
    plan.base = graph;

    std::vector<EdgeEvent> current;
    for (count i = 0; i < x; ++i) {
        const count pick = uniformIndex(rng, edges.size());
        std::swap(edges[pick], edges.back());
        auto edge = edges.back();
        edges.pop_back();
        const double factor = std::max(uniformReal(rng) * 2.0, 1e-9);
        const edgeweight neww = std::max(weights.at(EdgePool::key(edge.first, edge.second)) * factor,
                                         1e-9);
        current.push_back(EdgeEvent::setWeight(edge.first, edge.second, neww));
        if (current.size() == batchSize) {
            plan.batches.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        plan.batches.push_back(std::move(current));
    return plan;
}

DynamicGraph syntheticGraph(count n, count m, std::uint64_t seed) {
    if (n < 3)
        throw DomainError("synthetic graph needs at least 3 nodes");
    const count maxEdges = n * (n - 1) / 2;
    if (m < n || m > maxEdges)
        throw DomainError("synthetic graph needs n <= m <= n*(n-1)/2 edges");

    std::mt19937_64 rng(seed);
    DynamicGraph graph(n, false);
    for (node v = 0; v < n; ++v)
        graph.addEdge(v, static_cast<node>((v + 1) % n), 1.0);

    // Chord spans are geometric-ish so most edges stay local.
    count added = n;
    while (added < m) {
        const node u = static_cast<node>(uniformIndex(rng, n));
        count span = 2;
        while (uniformReal(rng) < 0.82 && span < n / 2)
            span += 1 + uniformIndex(rng, 4);
        span = std::min<count>(span, n - 2);
        const node v = static_cast<node>((u + span) % n);
        if (u == v || graph.hasEdge(u, v))
            continue;
        graph.addEdge(u, v, 1.0);
        ++added;
    }
    return graph;
}

} // namespace dynbc
