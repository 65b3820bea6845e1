#include <dynbc/snapshot.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dynbc {

namespace {

using nlohmann::json;

json ssspToJson(const SSSPState &state) {
    json j;
    j["source"] = state.source();
    json dist = json::array();
    json sigma = json::array();
    for (node v = 0; v < state.numberOfNodes(); ++v) {
        if (state.reachable(v)) {
            dist.push_back(state.distance(v));
            sigma.push_back(state.sigma(v).str());
        } else {
            dist.push_back(nullptr);
            sigma.push_back("0");
        }
    }
    j["d"] = std::move(dist);
    j["sigma"] = std::move(sigma);
    j["min_weight"] =
        state.minWeight() == infiniteDistance ? json(nullptr) : json(state.minWeight());
    return j;
}

SSSPState ssspFromJson(const json &j, count n) {
    const auto &distJson = j.at("d");
    const auto &sigmaJson = j.at("sigma");
    if (distJson.size() != n || sigmaJson.size() != n)
        throw ParseError("snapshot: state arrays do not match node count");
    std::vector<edgeweight> dist(n, infiniteDistance);
    std::vector<pathcount> sigma(n, pathcount(0));
    for (node v = 0; v < n; ++v) {
        if (!distJson[v].is_null()) {
            dist[v] = distJson[v].get<edgeweight>();
            sigma[v] = pathcount(sigmaJson[v].get<std::string>());
        }
    }
    const edgeweight minWeight = j.at("min_weight").is_null()
                                     ? infiniteDistance
                                     : j.at("min_weight").get<edgeweight>();
    return SSSPState::restore(j.at("source").get<node>(), std::move(dist), std::move(sigma),
                              minWeight);
}

} // namespace

void Snapshot::save(std::ostream &out, const DynamicGraph &graph, const BCState &state) {
    json j;
    j["format"] = "dynbc-state";
    j["version"] = version;

    json g;
    g["n"] = graph.numberOfNodes();
    g["weighted"] = graph.isWeighted();
    g["external_ids"] = graph.externalIds();
    json edges = json::array();
    graph.forEdges([&](node u, node v, edgeweight w) { edges.push_back({u, v, w}); });
    g["edges"] = std::move(edges);
    j["graph"] = std::move(g);

    json p;
    p["epsilon"] = state.params().epsilon;
    p["delta"] = state.params().delta;
    p["c"] = state.params().c;
    p["seed"] = state.params().seed;
    j["params"] = std::move(p);

    j["r"] = state.sampleCount();
    j["vd"] = state.vdEstimate();

    json samples = json::array();
    for (const auto &sample : state.samples()) {
        json s;
        s["s"] = sample.path.source;
        s["t"] = sample.path.target;
        s["connected"] = sample.path.connected;
        s["interior"] = sample.path.interior;
        s["vd"] = sample.vd;
        s["state"] = ssspToJson(sample.state);
        samples.push_back(std::move(s));
    }
    j["samples"] = std::move(samples);

    json coverage = json::array();
    for (const auto &cov : state.coverage()) {
        json c;
        c["s"] = cov.source;
        c["vd"] = cov.vd;
        c["state"] = ssspToJson(cov.state);
        coverage.push_back(std::move(c));
    }
    j["coverage"] = std::move(coverage);

    std::ostringstream rngState;
    rngState << state.rng_;
    j["rng"] = rngState.str();

    out << j.dump() << '\n';
}

void Snapshot::saveFile(const std::string &path, const DynamicGraph &graph, const BCState &state) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open state file '" + path + "' for writing");
    save(out, graph, state);
}

Snapshot::Loaded Snapshot::load(std::istream &in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ParseError(std::string("snapshot: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format") != "dynbc-state")
            throw ParseError("snapshot: unrecognized format tag");
        if (j.at("version").get<int>() != version)
            throw ParseError("snapshot: unsupported version "
                             + std::to_string(j.at("version").get<int>()));

        const auto &g = j.at("graph");
        const count n = g.at("n").get<count>();
        DynamicGraph graph(n, g.at("weighted").get<bool>());
        graph.setExternalIds(g.at("external_ids").get<std::vector<std::uint64_t>>());
        for (const auto &e : g.at("edges"))
            graph.addEdge(e.at(0).get<node>(), e.at(1).get<node>(), e.at(2).get<edgeweight>());
        graph.audit();

        BCState state;
        state.params_.epsilon = j.at("params").at("epsilon").get<double>();
        state.params_.delta = j.at("params").at("delta").get<double>();
        state.params_.c = j.at("params").at("c").get<double>();
        state.params_.seed = j.at("params").at("seed").get<std::uint64_t>();
        state.params_.validate();

        state.r_ = j.at("r").get<count>();
        state.vd_ = j.at("vd").get<edgeweight>();
        state.interiorCount_.assign(n, 0);
        state.vis_ = VisCounters(n);
        state.externalIds_ = graph.externalIds();

        for (const auto &s : j.at("samples")) {
            BCState::Sample sample;
            sample.path.source = s.at("s").get<node>();
            sample.path.target = s.at("t").get<node>();
            sample.path.connected = s.at("connected").get<bool>();
            sample.path.interior = s.at("interior").get<std::vector<node>>();
            sample.vd = s.at("vd").get<edgeweight>();
            sample.state = ssspFromJson(s.at("state"), n);
            state.bumpVis(sample.state);
            state.addInterior(sample.path);
            state.samples_.push_back(std::move(sample));
        }
        for (const auto &c : j.at("coverage")) {
            BCState::Coverage cov;
            cov.source = c.at("s").get<node>();
            cov.vd = c.at("vd").get<edgeweight>();
            cov.state = ssspFromJson(c.at("state"), n);
            state.bumpVis(cov.state);
            state.coverage_.push_back(std::move(cov));
        }

        std::istringstream rngState(j.at("rng").get<std::string>());
        rngState >> state.rng_;
        if (!rngState)
            throw ParseError("snapshot: invalid generator state");

        state.audit(graph);
        return {std::move(graph), std::move(state)};
    } catch (const json::exception &e) {
        throw ParseError(std::string("snapshot: missing or mistyped field: ") + e.what());
    }
}

Snapshot::Loaded Snapshot::loadFile(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open state file '" + path + "'");
    return load(in);
}

} // namespace dynbc
