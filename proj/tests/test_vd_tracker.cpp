#include <doctest.h>

#include <random>

#include <dynbc/oracle.hpp>
#include <dynbc/vd_tracker.hpp>

#include "support/reference.hpp"

using namespace dynbc;

namespace {

DynamicGraph twoTriangles() {
    DynamicGraph g(6, false);
    g.addEdge(0, 1, 1.0);
    g.addEdge(1, 2, 1.0);
    g.addEdge(0, 2, 1.0);
    g.addEdge(3, 4, 1.0);
    g.addEdge(4, 5, 1.0);
    g.addEdge(3, 5, 1.0);
    return g;
}

} // namespace

TEST_CASE("init: one estimate per component, max reported") {
    auto g = twoTriangles();
    auto tracker = VDTracker::init(g);
    CHECK(tracker.numberOfComponents() == 2);
    CHECK(tracker.globalEstimate() == 3.0); // 1 + (1+1)/1 per triangle
    tracker.audit(g);
}

TEST_CASE("init: empty graph has no components and estimate 0") {
    DynamicGraph g(0, false);
    auto tracker = VDTracker::init(g);
    CHECK(tracker.numberOfComponents() == 0);
    CHECK(tracker.globalEstimate() == 0.0);
}

TEST_CASE("init: estimate bounds the exact vertex diameter") {
    DynamicGraph g(6, false);
    for (node v = 0; v + 1 < 6; ++v)
        g.addEdge(v, v + 1, 1.0);
    auto tracker = VDTracker::init(g);
    CHECK(exactVertexDiameter(g) == 6);
    CHECK(tracker.globalEstimate() >= 6.0);
    tracker.audit(g);
}

TEST_CASE("update: merge removes the superfluous source") {
    auto g = twoTriangles();
    auto tracker = VDTracker::init(g);
    REQUIRE(tracker.numberOfComponents() == 2);

    auto batch = normalizeBatch({EdgeEvent::insert(2, 3, 1.0)}, g);
    applyBatch(g, batch);
    tracker.update(g, batch);

    CHECK(tracker.numberOfComponents() == 1);
    tracker.audit(g);
}

TEST_CASE("update: split spawns a source for the severed part") {
    DynamicGraph g(4, false);
    g.addEdge(0, 1, 1.0);
    g.addEdge(1, 2, 1.0);
    g.addEdge(2, 3, 1.0);
    auto tracker = VDTracker::init(g);
    REQUIRE(tracker.numberOfComponents() == 1);

    auto batch = normalizeBatch({EdgeEvent::remove(1, 2)}, g);
    applyBatch(g, batch);
    tracker.update(g, batch);

    CHECK(tracker.numberOfComponents() == 2);
    tracker.audit(g);
}

TEST_CASE("update: simultaneous merge and split keeps every component covered") {
    // Components {0,1,2} and {3,4,5}-{6,7} bridged at 5-6; one batch merges
    // the triangles and severs the bridge.
    DynamicGraph g(8, false);
    g.addEdge(0, 1, 1.0);
    g.addEdge(1, 2, 1.0);
    g.addEdge(0, 2, 1.0);
    g.addEdge(3, 4, 1.0);
    g.addEdge(4, 5, 1.0);
    g.addEdge(3, 5, 1.0);
    g.addEdge(5, 6, 1.0);
    g.addEdge(6, 7, 1.0);
    auto tracker = VDTracker::init(g);
    REQUIRE(tracker.numberOfComponents() == 2);

    auto batch = normalizeBatch({EdgeEvent::insert(2, 3, 1.0), EdgeEvent::remove(5, 6)}, g);
    applyBatch(g, batch);
    tracker.update(g, batch);

    CHECK(tracker.numberOfComponents() == 2); // merged triangles + severed {6,7}
    tracker.audit(g);
}

TEST_CASE("random evolution: invariants and bounds hold at every step") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const bool weighted = trial % 2 == 0;
        auto g = testref::randomGraph(rng, 6 + uniformIndex(rng, 18), 0.12, weighted);
        auto tracker = VDTracker::init(g);
        tracker.audit(g);
        for (int step = 0; step < 6; ++step) {
            auto batch = normalizeBatch(testref::randomEvents(rng, g, 1 + uniformIndex(rng, 5)), g);
            applyBatch(g, batch);
            tracker.update(g, batch);
            tracker.audit(g);

            // Per-component estimates stay valid upper bounds.
            auto label = connectedComponents(g);
            for (const auto &entry : tracker.entries()) {
                DynamicGraph component(g.numberOfNodes(), g.isWeighted());
                g.forEdges([&](node u, node v, edgeweight w) {
                    if (label[u] == label[entry.source])
                        component.addEdge(u, v, w);
                });
                CHECK(entry.vd >= static_cast<edgeweight>(exactVertexDiameter(component)));
            }
        }
        // Re-initialization agrees on the component structure and stays
        // within the bound relation (sources differ, so values may too).
        auto freshTracker = VDTracker::init(g);
        CHECK(freshTracker.numberOfComponents() == tracker.numberOfComponents());
        CHECK(tracker.globalEstimate() >= static_cast<edgeweight>(exactVertexDiameter(g)));
    }
}
