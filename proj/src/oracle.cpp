#include <dynbc/oracle.hpp>

#include <algorithm>

#include <dynbc/sssp.hpp>

namespace dynbc {

std::vector<double> brandes(const DynamicGraph &graph) {
    const count n = graph.numberOfNodes();
    std::vector<double> bc(n, 0.0);
    if (n < 3)
        return bc; // no interior positions exist

    for (node s = 0; s < n; ++s) {
        SSSPState sssp = initSssp(graph, s);

        // Nodes in nonincreasing distance order for dependency accumulation.
        std::vector<node> order;
        sssp.forEachReachable([&](node v) { order.push_back(v); });
        std::sort(order.begin(), order.end(), [&](node a, node b) {
            return sssp.distance(a) > sssp.distance(b);
        });

        std::vector<double> dependency(n, 0.0);
        for (node w : order) {
            if (w == s)
                continue;
            const double coeff =
                (1.0 + dependency[w]) / sssp.sigma(w).convert_to<double>();
            for (node z : predecessors(graph, sssp, w))
                dependency[z] += sssp.sigma(z).convert_to<double>() * coeff;
            bc[w] += dependency[w];
        }
    }

    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    for (node v = 0; v < n; ++v)
        bc[v] /= pairs;
    return bc;
}

namespace {

/// Longest shortest path (in nodes) from one source: Dijkstra distances,
/// then max-hop counts over the shortest-path DAG in distance order.
count maxShortestPathNodes(const DynamicGraph &graph, node s) {
    SSSPState sssp = initSssp(graph, s);
    std::vector<node> order;
    sssp.forEachReachable([&](node v) { order.push_back(v); });
    std::sort(order.begin(), order.end(), [&](node a, node b) {
        return sssp.distance(a) < sssp.distance(b);
    });

    std::vector<count> hops(graph.numberOfNodes(), 0);
    count best = 0;
    for (node v : order) {
        if (v != s)
            for (node z : predecessors(graph, sssp, v))
                hops[v] = std::max(hops[v], hops[z] + 1);
        best = std::max(best, hops[v]);
    }
    return best + 1; // nodes, not edges
}

} // namespace

count exactVertexDiameter(const DynamicGraph &graph) {
    count vd = 0;
    for (node s = 0; s < graph.numberOfNodes(); ++s)
        vd = std::max(vd, maxShortestPathNodes(graph, s));
    return vd;
}

std::vector<std::pair<std::uint64_t, double>> staticRK(const DynamicGraph &graph,
                                                       const BCParams &params) {
    // Definitionally the initialization path of the dynamic algorithm, minus
    // the retained state.
    return initBC(graph, params).scores();
}

} // namespace dynbc
