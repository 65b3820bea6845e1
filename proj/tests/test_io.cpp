#include <doctest.h>

#include <sstream>

#include <dynbc/edge_list.hpp>

using namespace dynbc;

TEST_CASE("loadEdgeList: collapse-multi turns parallel edges into 1/k weights") {
    std::istringstream in("0 1\n0 1\n1 2\n");
    auto g = loadEdgeList(in, EdgeListMode::CollapseMulti);
    CHECK(g.numberOfNodes() == 3);
    CHECK(g.numberOfEdges() == 2);
    CHECK(*g.edgeWeight(0, 1) == 0.5);
    CHECK(*g.edgeWeight(1, 2) == 1.0);
}

TEST_CASE("loadEdgeList: empty stream yields the empty graph") {
    std::istringstream in("");
    auto g = loadEdgeList(in, EdgeListMode::Unweighted);
    CHECK(g.numberOfNodes() == 0);
    CHECK(g.numberOfEdges() == 0);
}

TEST_CASE("loadEdgeList: weighted single edge") {
    std::istringstream in("0 1 2.5\n");
    auto g = loadEdgeList(in, EdgeListMode::Weighted);
    CHECK(g.numberOfNodes() == 2);
    CHECK(g.numberOfEdges() == 1);
    CHECK(*g.edgeWeight(0, 1) == 2.5);
}

TEST_CASE("loadEdgeList: duplicates ignored in unweighted mode") {
    std::istringstream in("0 1\n1 0\n0 1\n");
    EdgeListDigest digest;
    auto g = loadEdgeList(in, EdgeListMode::Unweighted, &digest);
    CHECK(g.numberOfEdges() == 1);
    CHECK(digest.duplicates == 2);
}

TEST_CASE("loadEdgeList: malformed line reports its number") {
    std::istringstream in("0 1\nnot an edge\n");
    CHECK_THROWS_WITH_AS(loadEdgeList(in, EdgeListMode::Unweighted),
                         doctest::Contains("line 2"), ParseError);
}

TEST_CASE("loadEdgeList: nonpositive weight is a domain error") {
    std::istringstream in("0 1 -3\n");
    CHECK_THROWS_AS(loadEdgeList(in, EdgeListMode::Weighted), DomainError);
}

TEST_CASE("loadEdgeList: comments, blank lines, self-loops, sparse ids") {
    std::istringstream in("% comment\n\n7 7\n5 1000 2.0 13\n# trailing\n");
    EdgeListDigest digest;
    auto g = loadEdgeList(in, EdgeListMode::Weighted, &digest);
    CHECK(digest.selfLoops == 1);
    CHECK(g.numberOfNodes() == 3); // ids 5, 7, 1000 -> internal 0..2
    CHECK(g.numberOfEdges() == 1);
    CHECK(g.externalId(resolveExternalId(g, 1000)) == 1000);
    CHECK(*g.edgeWeight(resolveExternalId(g, 5), resolveExternalId(g, 1000)) == 2.0);
}

TEST_CASE("batch files round-trip through external ids") {
    std::istringstream in("10 20\n20 30\n");
    auto g = loadEdgeList(in, EdgeListMode::Weighted);
    std::vector<EdgeEvent> events{
        EdgeEvent::insert(resolveExternalId(g, 10), resolveExternalId(g, 30), 2.0),
        EdgeEvent::remove(resolveExternalId(g, 10), resolveExternalId(g, 20)),
        EdgeEvent::setWeight(resolveExternalId(g, 20), resolveExternalId(g, 30), 0.25),
    };
    std::ostringstream out;
    writeBatchFile(out, events, g);
    std::istringstream back(out.str());
    auto parsed = parseBatchFile(back, g);
    REQUIRE(parsed.size() == events.size());
    for (count i = 0; i < events.size(); ++i) {
        CHECK(parsed[i].u == events[i].u);
        CHECK(parsed[i].v == events[i].v);
        CHECK(parsed[i].kind == events[i].kind);
        CHECK(parsed[i].weight == events[i].weight);
    }
}

TEST_CASE("parseBatchFile: unknown node or op fails") {
    std::istringstream in("0 1\n");
    auto g = loadEdgeList(in, EdgeListMode::Unweighted);
    std::istringstream badNode("I 0 99 1.0\n");
    CHECK_THROWS_AS(parseBatchFile(badNode, g), ParseError);
    std::istringstream badOp("X 0 1\n");
    CHECK_THROWS_AS(parseBatchFile(badOp, g), ParseError);
}
