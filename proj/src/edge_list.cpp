#include <dynbc/edge_list.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace dynbc {

namespace {

std::vector<std::string> splitWhitespace(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok)
        tokens.push_back(tok);
    return tokens;
}

std::uint64_t parseNodeId(const std::string &tok, count lineNo) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(lineNo) + ": invalid node id '" + tok + "'");
    return value;
}

double parseReal(const std::string &tok, count lineNo, const char *what) {
    try {
        std::size_t pos = 0;
        double value = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception &) {
        throw ParseError("line " + std::to_string(lineNo) + ": invalid " + what + " '" + tok + "'");
    }
}

} // namespace

std::vector<EdgeRecord> parseEdgeList(std::istream &in) {
    std::vector<EdgeRecord> records;
    std::string line;
    count lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find_first_of("#%");
        if (hash != std::string::npos)
            line.resize(hash);
        auto tokens = splitWhitespace(line);
        if (tokens.empty())
            continue;
        if (tokens.size() < 2 || tokens.size() > 4)
            throw ParseError("line " + std::to_string(lineNo) + ": expected 'u v [weight] [timestamp]'");
        EdgeRecord rec;
        rec.u = parseNodeId(tokens[0], lineNo);
        rec.v = parseNodeId(tokens[1], lineNo);
        if (tokens.size() >= 3) {
            rec.weight = parseReal(tokens[2], lineNo, "weight");
            rec.hasWeight = true;
            if (!(rec.weight > 0))
                throw DomainError("line " + std::to_string(lineNo) + ": nonpositive weight");
        }
        if (tokens.size() == 4) {
            rec.timestamp = static_cast<long long>(parseReal(tokens[3], lineNo, "timestamp"));
            rec.hasTimestamp = true;
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<UniqueEdge> dedupeRecords(const std::vector<EdgeRecord> &records, EdgeListMode mode,
                                      EdgeListDigest *digest) {
    EdgeListDigest local;
    EdgeListDigest &dig = digest ? *digest : local;

    std::map<std::pair<std::uint64_t, std::uint64_t>, count> slot;
    std::vector<UniqueEdge> edges;
    std::vector<count> multiplicity;
    for (const EdgeRecord &rec : records) {
        if (rec.u == rec.v) {
            ++dig.selfLoops;
            continue;
        }
        auto key = rec.u < rec.v ? std::make_pair(rec.u, rec.v) : std::make_pair(rec.v, rec.u);
        auto it = slot.find(key);
        if (it == slot.end()) {
            slot.emplace(key, edges.size());
            edges.push_back({rec.u, rec.v, rec.hasWeight ? rec.weight : 1.0, rec.timestamp,
                             rec.hasTimestamp});
            multiplicity.push_back(1);
        } else {
            ++dig.duplicates;
            ++multiplicity[it->second];
            if (mode == EdgeListMode::Weighted && rec.hasWeight)
                edges[it->second].weight = rec.weight;
        }
    }
    for (count i = 0; i < edges.size(); ++i) {
        switch (mode) {
        case EdgeListMode::Unweighted:
            edges[i].weight = 1.0;
            break;
        case EdgeListMode::CollapseMulti:
            edges[i].weight = 1.0 / static_cast<edgeweight>(multiplicity[i]);
            break;
        case EdgeListMode::Weighted:
            break;
        }
    }
    return edges;
}

std::vector<std::uint64_t> collectExternalIds(const std::vector<EdgeRecord> &records) {
    std::vector<std::uint64_t> ids;
    for (const EdgeRecord &rec : records) {
        ids.push_back(rec.u);
        ids.push_back(rec.v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

DynamicGraph buildGraph(const std::vector<std::uint64_t> &externalIds,
                        const std::vector<UniqueEdge> &edges, bool weighted) {
    std::unordered_map<std::uint64_t, node> toInternal;
    toInternal.reserve(externalIds.size());
    for (node i = 0; i < externalIds.size(); ++i)
        toInternal.emplace(externalIds[i], i);

    DynamicGraph graph(externalIds.size(), weighted);
    graph.setExternalIds(externalIds);
    for (const UniqueEdge &e : edges)
        graph.addEdge(toInternal.at(e.u), toInternal.at(e.v), weighted ? e.weight : 1.0);
    return graph;
}

DynamicGraph loadEdgeList(std::istream &in, EdgeListMode mode, EdgeListDigest *digest) {
    auto records = parseEdgeList(in);
    auto edges = dedupeRecords(records, mode, digest);
    return buildGraph(collectExternalIds(records), edges, mode != EdgeListMode::Unweighted);
}

DynamicGraph loadEdgeListFile(const std::string &path, EdgeListMode mode, EdgeListDigest *digest) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open edge list '" + path + "'");
    return loadEdgeList(in, mode, digest);
}

node resolveExternalId(const DynamicGraph &graph, std::uint64_t externalId) {
    const auto &ids = graph.externalIds();
    auto it = std::lower_bound(ids.begin(), ids.end(), externalId);
    if (it != ids.end() && *it == externalId)
        return static_cast<node>(it - ids.begin());
    // External ids are sorted for edge-list graphs but may be arbitrary for
    // programmatic graphs; fall back to a scan before giving up.
    for (node i = 0; i < ids.size(); ++i)
        if (ids[i] == externalId)
            return i;
    throw ParseError("unknown node id " + std::to_string(externalId));
}

std::vector<EdgeEvent> parseBatchFile(std::istream &in, const DynamicGraph &graph) {
    std::vector<EdgeEvent> events;
    std::string line;
    count lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find_first_of("#%");
        if (hash != std::string::npos)
            line.resize(hash);
        auto tokens = splitWhitespace(line);
        if (tokens.empty())
            continue;
        const std::string &op = tokens[0];
        auto needTokens = [&](count k) {
            if (tokens.size() != k)
                throw ParseError("line " + std::to_string(lineNo) + ": malformed batch event");
        };
        if (op == "I" || op == "W") {
            needTokens(4);
            node u = resolveExternalId(graph, parseNodeId(tokens[1], lineNo));
            node v = resolveExternalId(graph, parseNodeId(tokens[2], lineNo));
            edgeweight w = parseReal(tokens[3], lineNo, "weight");
            if (!(w > 0))
                throw DomainError("line " + std::to_string(lineNo) + ": nonpositive weight");
            events.push_back(op == "I" ? EdgeEvent::insert(u, v, w) : EdgeEvent::setWeight(u, v, w));
        } else if (op == "D") {
            needTokens(3);
            node u = resolveExternalId(graph, parseNodeId(tokens[1], lineNo));
            node v = resolveExternalId(graph, parseNodeId(tokens[2], lineNo));
            events.push_back(EdgeEvent::remove(u, v));
        } else {
            throw ParseError("line " + std::to_string(lineNo) + ": unknown event kind '" + op + "'");
        }
    }
    return events;
}

std::vector<EdgeEvent> parseBatchFilePath(const std::string &path, const DynamicGraph &graph) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open batch file '" + path + "'");
    return parseBatchFile(in, graph);
}

namespace {

std::string weightString(edgeweight w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

} // namespace

void writeBatchFile(std::ostream &out, const std::vector<EdgeEvent> &events,
                    const DynamicGraph &graph) {
    for (const EdgeEvent &ev : events) {
        const auto u = graph.externalId(ev.u);
        const auto v = graph.externalId(ev.v);
        switch (ev.kind) {
        case EventKind::Insert:
            out << "I " << u << ' ' << v << ' ' << weightString(ev.weight) << '\n';
            break;
        case EventKind::Delete:
            out << "D " << u << ' ' << v << '\n';
            break;
        case EventKind::SetWeight:
            out << "W " << u << ' ' << v << ' ' << weightString(ev.weight) << '\n';
            break;
        }
    }
}

void writeEdgeList(std::ostream &out, const DynamicGraph &graph) {
    graph.forEdges([&](node u, node v, edgeweight w) {
        out << graph.externalId(u) << ' ' << graph.externalId(v);
        if (graph.isWeighted())
            out << ' ' << weightString(w);
        out << '\n';
    });
}

} // namespace dynbc
