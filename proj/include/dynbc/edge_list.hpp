#ifndef DYNBC_EDGE_LIST_HPP_
#define DYNBC_EDGE_LIST_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <dynbc/graph.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

/// How raw edge lists are interpreted.
enum class EdgeListMode {
    Unweighted,    // every edge weight 1, duplicate lines ignored
    Weighted,      // third column is the weight (default 1), last duplicate wins
    CollapseMulti, // k parallel lines between a pair become one edge of weight 1/k
};

/// One line of an edge list: "u v [weight] [timestamp]".
struct EdgeRecord {
    std::uint64_t u;
    std::uint64_t v;
    edgeweight weight = 1.0;
    bool hasWeight = false;
    long long timestamp = 0;
    bool hasTimestamp = false;
};

struct EdgeListDigest {
    count selfLoops = 0;
    count duplicates = 0;
};

/// Parses "u v [weight] [timestamp]" lines; '#' and '%' start comments.
/// Throws ParseError (with line number) or DomainError (nonpositive weight).
std::vector<EdgeRecord> parseEdgeList(std::istream &in);

/// A deduplicated edge with the metadata needed to rebuild the graph and to
/// derive timestamp-ordered dynamics: the resolved weight for the given mode
/// and the timestamp of the first occurrence.
struct UniqueEdge {
    std::uint64_t u;
    std::uint64_t v;
    edgeweight weight;
    long long timestamp;
    bool hasTimestamp;
};

/// Applies the mode's duplicate rule and drops self-loops (counted in the
/// digest). Order follows the first occurrence of each pair.
std::vector<UniqueEdge> dedupeRecords(const std::vector<EdgeRecord> &records, EdgeListMode mode,
                                      EdgeListDigest *digest = nullptr);

/// External-to-internal id mapping over every id mentioned in the records,
/// in increasing external-id order.
std::vector<std::uint64_t> collectExternalIds(const std::vector<EdgeRecord> &records);

/// Builds the graph over the full id set from a subset of the unique edges.
DynamicGraph buildGraph(const std::vector<std::uint64_t> &externalIds,
                        const std::vector<UniqueEdge> &edges, bool weighted);

/// Convenience: parse + dedupe + build.
DynamicGraph loadEdgeList(std::istream &in, EdgeListMode mode, EdgeListDigest *digest = nullptr);
DynamicGraph loadEdgeListFile(const std::string &path, EdgeListMode mode,
                              EdgeListDigest *digest = nullptr);

/// Maps an external id to the internal node id; throws ParseError if unknown.
node resolveExternalId(const DynamicGraph &graph, std::uint64_t externalId);

/// Batch files carry one event per line in external ids:
///   "I u v w"  insert, "D u v"  delete, "W u v w"  set weight.
std::vector<EdgeEvent> parseBatchFile(std::istream &in, const DynamicGraph &graph);
std::vector<EdgeEvent> parseBatchFilePath(const std::string &path, const DynamicGraph &graph);
void writeBatchFile(std::ostream &out, const std::vector<EdgeEvent> &events,
                    const DynamicGraph &graph);

/// Writes the graph back out as "u v [weight]" lines in external ids.
void writeEdgeList(std::ostream &out, const DynamicGraph &graph);

} // namespace dynbc

#endif // DYNBC_EDGE_LIST_HPP_
