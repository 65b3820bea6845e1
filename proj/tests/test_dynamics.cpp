#include <doctest.h>

#include <random>
#include <sstream>

#include <dynbc/dynamics.hpp>

#include "support/reference.hpp"

using namespace dynbc;

namespace {

std::vector<EdgeRecord> timestampedRecords() {
    // "u v weight ts" with shuffled timestamps.
    std::istringstream in("0 1 1 50\n1 2 1 10\n2 3 1 90\n3 4 1 30\n0 4 1 70\n");
    return parseEdgeList(in);
}

} // namespace

TEST_CASE("genRealDynamics: newest edges come back as singleton batches in order") {
    auto plan = genRealDynamics(timestampedRecords(), EdgeListMode::Unweighted, 2, 1);
    CHECK(plan.base.numberOfEdges() == 3);
    REQUIRE(plan.batches.size() == 2);
    // Timestamps 70 then 90.
    CHECK(plan.base.externalId(plan.batches[0][0].u) == 0);
    CHECK(plan.base.externalId(plan.batches[0][0].v) == 4);
    CHECK(plan.base.externalId(plan.batches[1][0].u) == 2);
    CHECK(plan.base.externalId(plan.batches[1][0].v) == 3);
    for (const auto &batch : plan.batches)
        for (const auto &ev : batch)
            CHECK(ev.kind == EventKind::Insert);
}

TEST_CASE("genRealDynamics: x of zero means no batches") {
    auto plan = genRealDynamics(timestampedRecords(), EdgeListMode::Unweighted, 0, 4);
    CHECK(plan.batches.empty());
    CHECK(plan.base.numberOfEdges() == 5);
}

TEST_CASE("genRealDynamics: timestamp ties keep input order") {
    std::istringstream in("0 1 1 5\n1 2 1 5\n2 3 1 5\n");
    auto records = parseEdgeList(in);
    auto plan = genRealDynamics(records, EdgeListMode::Unweighted, 3, 1);
    REQUIRE(plan.batches.size() == 3);
    CHECK(plan.base.externalId(plan.batches.front()[0].u) == 0);
    CHECK(plan.base.externalId(plan.batches.back()[0].u) == 2);
}

TEST_CASE("genRealDynamics: withholding more than m is a domain error") {
    CHECK_THROWS_AS(genRealDynamics(timestampedRecords(), EdgeListMode::Unweighted, 6, 1),
                    DomainError);
    std::istringstream noTs("0 1\n");
    auto records = parseEdgeList(noTs);
    CHECK_THROWS_AS(genRealDynamics(records, EdgeListMode::Unweighted, 1, 1), DomainError);
}

TEST_CASE("genRandomDynamics: reproducible event-for-event under a fixed seed") {
    std::mt19937_64 rngA(12), rngB(12), rngC(13);
    auto g = testref::randomGraph(rngA, 20, 0.3, false);
    std::mt19937_64 gen1(42), gen2(42);
    auto planA = genRandomDynamics(g, 10, 4, gen1);
    auto planB = genRandomDynamics(g, 10, 4, gen2);
    REQUIRE(planA.batches.size() == planB.batches.size());
    for (count b = 0; b < planA.batches.size(); ++b) {
        REQUIRE(planA.batches[b].size() == planB.batches[b].size());
        for (count i = 0; i < planA.batches[b].size(); ++i) {
            CHECK(planA.batches[b][i].u == planB.batches[b][i].u);
            CHECK(planA.batches[b][i].v == planB.batches[b][i].v);
            CHECK((planA.batches[b][i].kind == planB.batches[b][i].kind));
        }
    }
    (void)rngB;
    (void)rngC;
}

TEST_CASE("genRandomDynamics: insert/delete balance over 10000 events") {
    std::mt19937_64 graphRng(3);
    auto g = testref::randomGraph(graphRng, 300, 0.25, false); // plenty of edges
    std::mt19937_64 rng(1234);
    auto plan = genRandomDynamics(g, 10000, 100, rng);
    count inserts = 0, total = 0;
    for (const auto &batch : plan.batches)
        for (const auto &ev : batch) {
            ++total;
            if (ev.kind == EventKind::Insert)
                ++inserts;
        }
    CHECK(total + plan.truncatedEvents == 10000);
    const double fraction = static_cast<double>(inserts) / static_cast<double>(total);
    CHECK(fraction == doctest::Approx(0.5).epsilon(0.04)); // 0.5 +- 0.02
}

TEST_CASE("genRandomDynamics: batches apply cleanly to the evolving graph") {
    std::mt19937_64 graphRng(8);
    auto g = testref::randomGraph(graphRng, 30, 0.2, false);
    std::mt19937_64 rng(5);
    auto plan = genRandomDynamics(g, 20, 7, rng);
    DynamicGraph evolving = plan.base;
    for (const auto &events : plan.batches) {
        BatchDigest digest;
        auto batch = normalizeBatch(events, evolving, &digest);
        CHECK(digest.droppedDeletes.empty());
        CHECK(digest.rewrittenInserts.empty());
        CHECK(digest.unresolvedSetWeights.empty());
        applyBatch(evolving, batch);
        evolving.audit();
    }
}

TEST_CASE("genRandomDynamics: withholding every edge starts from the empty base") {
    std::mt19937_64 graphRng(21);
    auto g = testref::randomGraph(graphRng, 10, 0.4, false);
    std::mt19937_64 rng(2);
    auto plan = genRandomDynamics(g, g.numberOfEdges(), 4, rng);
    CHECK(plan.base.numberOfEdges() == 0);
    REQUIRE(!plan.batches.empty());
    // From the empty graph the first events can only be inserts.
    CHECK(plan.batches.front().front().kind == EventKind::Insert);
}

TEST_CASE("genWeightDynamics: factor mean near one, all weights positive") {
    std::mt19937_64 graphRng(55);
    auto g = testref::randomGraph(graphRng, 160, 1.0, true); // complete, 12720 edges
    REQUIRE(g.numberOfEdges() >= 10000);
    std::mt19937_64 rng(77);
    auto plan = genWeightDynamics(g, 10000, 500, rng);

    double factorSum = 0;
    count events = 0;
    for (const auto &batch : plan.batches)
        for (const auto &ev : batch) {
            REQUIRE(ev.kind == EventKind::SetWeight);
            CHECK(ev.weight > 0);
            factorSum += ev.weight / *g.edgeWeight(ev.u, ev.v);
            ++events;
        }
    CHECK(events == 10000);
    CHECK(factorSum / static_cast<double>(events) == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("genWeightDynamics: rejects unweighted graphs, x=0 means no batches") {
    std::mt19937_64 graphRng(1);
    auto unweighted = testref::randomGraph(graphRng, 10, 0.3, false);
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(genWeightDynamics(unweighted, 1, 1, rng), DomainError);

    auto weighted = testref::randomGraph(graphRng, 10, 0.3, true);
    auto plan = genWeightDynamics(weighted, 0, 4, rng);
    CHECK(plan.batches.empty());
}

TEST_CASE("syntheticGraph: seeded, connected, sized as requested") {
    auto g = syntheticGraph(500, 2000, 9);
    CHECK(g.numberOfNodes() == 500);
    CHECK(g.numberOfEdges() == 2000);
    CHECK(countComponents(g) == 1);
    g.audit();

    auto same = syntheticGraph(500, 2000, 9);
    CHECK(same.structurallyEqual(g));
    auto other = syntheticGraph(500, 2000, 10);
    CHECK(!other.structurallyEqual(g));
}
