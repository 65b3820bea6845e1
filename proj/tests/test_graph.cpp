#include <doctest.h>

#include <random>
#include <sstream>

#include <dynbc/graph.hpp>

#include "support/reference.hpp"

using namespace dynbc;

namespace {

DynamicGraph pathGraph(count n) {
    DynamicGraph g(n, false);
    for (node v = 0; v + 1 < n; ++v)
        g.addEdge(v, v + 1, 1.0);
    return g;
}

} // namespace

TEST_CASE("normalizeBatch: cancelling insert/delete pair drops out") {
    DynamicGraph g(2, false);
    BatchDigest digest;
    auto batch = normalizeBatch({EdgeEvent::insert(0, 1, 1.0), EdgeEvent::remove(0, 1)}, g, &digest);
    CHECK(batch.empty());
    REQUIRE(digest.droppedDeletes.size() == 1);
    CHECK(digest.droppedDeletes[0] == std::make_pair<node, node>(0, 1));
    CHECK(digest.supersededEvents == 1);
}

TEST_CASE("normalizeBatch: insert of an existing edge becomes a weight update") {
    DynamicGraph g(2, true);
    g.addEdge(0, 1, 1.0);
    auto batch = normalizeBatch({EdgeEvent::insert(0, 1, 2.0)}, g);
    REQUIRE(batch.size() == 1);
    CHECK(batch.events[0].kind == EventKind::SetWeight);
    CHECK(batch.events[0].weight == 2.0);
}

TEST_CASE("normalizeBatch: last weight update wins") {
    DynamicGraph g(2, true);
    g.addEdge(0, 1, 1.0);
    auto batch =
        normalizeBatch({EdgeEvent::setWeight(0, 1, 3.0), EdgeEvent::setWeight(0, 1, 4.0)}, g);
    REQUIRE(batch.size() == 1);
    CHECK(batch.events[0].kind == EventKind::SetWeight);
    CHECK(batch.events[0].weight == 4.0);
}

TEST_CASE("normalizeBatch: weight update on an absent edge is kept and fails on apply") {
    DynamicGraph g(2, true);
    BatchDigest digest;
    auto batch = normalizeBatch({EdgeEvent::setWeight(0, 1, 2.0)}, g, &digest);
    REQUIRE(batch.size() == 1);
    CHECK(digest.unresolvedSetWeights.size() == 1);
    CHECK_THROWS_AS(applyBatch(g, batch), ConsistencyError);
}

TEST_CASE("applyBatch: deleting the middle edge disconnects the path") {
    auto g = pathGraph(3);
    auto batch = normalizeBatch({EdgeEvent::remove(1, 2)}, g);
    applyBatch(g, batch);
    g.audit();
    CHECK(g.numberOfEdges() == 1);
    CHECK(countComponents(g) == 2);
    auto label = connectedComponents(g);
    CHECK(label[0] == label[1]);
    CHECK(label[0] != label[2]);
}

TEST_CASE("applyBatch: weight change updates the minimum weight") {
    DynamicGraph g(3, true);
    g.addEdge(0, 1, 1.0);
    g.addEdge(1, 2, 1.0);
    g.addEdge(0, 2, 1.0);
    auto batch = normalizeBatch({EdgeEvent::setWeight(0, 1, 0.5)}, g);
    applyBatch(g, batch);
    g.audit();
    CHECK(g.numberOfEdges() == 3);
    CHECK(g.minEdgeWeight() == 0.5);
}

TEST_CASE("applyBatch: empty batch leaves the graph structurally equal") {
    auto g = pathGraph(4);
    auto before = g;
    applyBatch(g, UpdateBatch{});
    CHECK(g.structurallyEqual(before));
}

TEST_CASE("connectedComponents: labels are dense and deterministic") {
    SUBCASE("single path is one component") {
        auto g = pathGraph(3);
        auto label = connectedComponents(g);
        CHECK(label == std::vector<count>{0, 0, 0});
    }
    SUBCASE("isolated nodes get their own labels") {
        DynamicGraph g(4, false);
        auto label = connectedComponents(g);
        CHECK(label == std::vector<count>{0, 1, 2, 3});
    }
}

TEST_CASE("batch round trip: applying the inverse restores the graph") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testref::randomGraph(rng, 12, 0.3, trial % 2 == 1);
        auto original = g;
        auto events = testref::randomEvents(rng, g, 6);
        auto batch = normalizeBatch(events, g);
        auto inverse = inverseEvents(g, batch);
        applyBatch(g, batch);
        g.audit();
        auto inverseBatch = normalizeBatch(inverse, g);
        applyBatch(g, inverseBatch);
        g.audit();
        CHECK(g.structurallyEqual(original));
    }
}

TEST_CASE("audit holds after arbitrary event sequences") {
    std::mt19937_64 rng(7);
    auto g = testref::randomGraph(rng, 15, 0.2, true);
    for (int step = 0; step < 20; ++step) {
        auto batch = normalizeBatch(testref::randomEvents(rng, g, 4), g);
        applyBatch(g, batch);
        g.audit(); // symmetry, positivity, edge count vs adjacency entries
    }
}
