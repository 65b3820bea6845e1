// Command-line front end: ingestion, score computation, dynamic updates with
// persisted state, dynamics generation and the dynamic-vs-static benchmark.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dynbc/bench.hpp>
#include <dynbc/bc_sampler.hpp>
#include <dynbc/diagnostics.hpp>
#include <dynbc/dynamics.hpp>
#include <dynbc/edge_list.hpp>
#include <dynbc/oracle.hpp>
#include <dynbc/snapshot.hpp>
#include <dynbc/vd_tracker.hpp>

namespace {

using namespace dynbc;

constexpr int exitOk = 0;
constexpr int exitUsage = 2;       // parse or configuration problems
constexpr int exitConsistency = 3; // invariant violations

EdgeListMode parseEdgeMode(const std::string &name) {
    if (name == "unweighted")
        return EdgeListMode::Unweighted;
    if (name == "weighted")
        return EdgeListMode::Weighted;
    if (name == "collapse-multi")
        return EdgeListMode::CollapseMulti;
    throw DomainError("unknown edge list mode '" + name + "'");
}

DynamicsMode parseDynamicsMode(const std::string &name) {
    if (name == "real")
        return DynamicsMode::Real;
    if (name == "random")
        return DynamicsMode::Random;
    if (name == "weight-change")
        return DynamicsMode::WeightChange;
    throw DomainError("unknown dynamics mode '" + name + "'");
}

std::ostream &openOutput(std::ofstream &file, const std::string &path) {
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw ParseError("cannot open output file '" + path + "'");
    return file;
}

void writeScores(std::ostream &out, const std::vector<std::pair<std::uint64_t, double>> &scores,
                 const std::string &format) {
    if (format == "tsv") {
        char buf[64];
        for (auto [id, score] : scores) {
            std::snprintf(buf, sizeof(buf), "%llu\t%.17g\n",
                          static_cast<unsigned long long>(id), score);
            out << buf;
        }
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (auto [id, score] : scores)
            j.push_back({{"node", id}, {"score", score}});
        out << j.dump(2) << '\n';
    } else {
        throw DomainError("unknown output format '" + format + "'");
    }
}

void reportDigest(const BatchDigest &digest) {
    for (const std::string &line : digest.lines())
        diag::log(1, "batch: " + line);
}

struct CommonOptions {
    double epsilon = 0.05;
    double delta = 0.1;
    double c = 0.5;
    std::uint64_t seed = 1;
    std::string input;
    std::string statePath;
    std::string output;
    std::string format = "tsv";
    std::string edgeMode = "unweighted";

    BCParams params() const {
        BCParams p;
        p.epsilon = epsilon;
        p.delta = delta;
        p.c = c;
        p.seed = seed;
        p.validate();
        return p;
    }
};

void addCommonFlags(CLI::App *cmd, CommonOptions &opt, bool needsParams) {
    if (needsParams) {
        cmd->add_option("--epsilon", opt.epsilon, "Accuracy target in (0,1)");
        cmd->add_option("--delta", opt.delta, "Failure probability in (0,1)");
        cmd->add_option("--c", opt.c, "Sampling constant");
        cmd->add_option("--seed", opt.seed, "Random seed");
    }
    cmd->add_option("--output", opt.output, "Output file ('-' for stdout)");
    cmd->add_option("--format", opt.format, "Output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
}

/// Graph source: a file path, or "synthetic:<n>:<m>" for the seeded
/// small-world benchmark graph.
DynamicGraph loadInputGraph(const std::string &input, EdgeListMode mode, std::uint64_t seed,
                            std::vector<EdgeRecord> *recordsOut = nullptr) {
    if (input.rfind("synthetic:", 0) == 0) {
        count n = 0, m = 0;
        if (std::sscanf(input.c_str(), "synthetic:%llu:%llu",
                        reinterpret_cast<unsigned long long *>(&n),
                        reinterpret_cast<unsigned long long *>(&m))
            != 2)
            throw ParseError("synthetic graph spec must be synthetic:<nodes>:<edges>");
        return syntheticGraph(n, m, seed);
    }
    std::ifstream in(input);
    if (!in)
        throw ParseError("cannot open edge list '" + input + "'");
    auto records = parseEdgeList(in);
    auto edges = dedupeRecords(records, mode);
    auto graph = buildGraph(collectExternalIds(records), edges, mode != EdgeListMode::Unweighted);
    if (recordsOut)
        *recordsOut = std::move(records);
    return graph;
}

int runInit(const CommonOptions &opt) {
    auto graph = loadInputGraph(opt.input, parseEdgeMode(opt.edgeMode), opt.seed);
    auto state = initBC(graph, opt.params());
    if (opt.statePath.empty())
        throw DomainError("init requires --state to persist the result");
    Snapshot::saveFile(opt.statePath, graph, state);
    diag::log(1, "init: r=" + std::to_string(state.sampleCount())
                     + " coverage=" + std::to_string(state.coverageCount())
                     + " vd=" + std::to_string(state.vdEstimate()));
    if (!opt.output.empty()) {
        std::ofstream file;
        writeScores(openOutput(file, opt.output), state.scores(), opt.format);
    }
    return exitOk;
}

int runUpdate(const CommonOptions &opt) {
    if (opt.statePath.empty())
        throw DomainError("update requires --state");
    auto loaded = Snapshot::loadFile(opt.statePath);
    std::ifstream in(opt.input);
    if (!in)
        throw ParseError("cannot open batch file '" + opt.input + "'");
    auto events = parseBatchFile(in, loaded.graph);

    BatchDigest digest;
    auto batch = normalizeBatch(events, loaded.graph, &digest);
    reportDigest(digest);
    applyBatch(loaded.graph, batch);
    updateBC(loaded.state, loaded.graph, batch);
    Snapshot::saveFile(opt.statePath, loaded.graph, loaded.state);

    std::ofstream file;
    writeScores(openOutput(file, opt.output), loaded.state.scores(), opt.format);
    return exitOk;
}

int runExact(const CommonOptions &opt) {
    auto graph = loadInputGraph(opt.input, parseEdgeMode(opt.edgeMode), opt.seed);
    auto bc = brandes(graph);
    std::vector<std::pair<std::uint64_t, double>> scores;
    for (node v = 0; v < graph.numberOfNodes(); ++v)
        scores.emplace_back(graph.externalId(v), bc[v]);
    std::sort(scores.begin(), scores.end());
    std::ofstream file;
    writeScores(openOutput(file, opt.output), scores, opt.format);
    return exitOk;
}

int runVd(const CommonOptions &opt, const std::string &batchPath) {
    auto graph = loadInputGraph(opt.input, parseEdgeMode(opt.edgeMode), opt.seed);
    auto tracker = VDTracker::init(graph);
    if (!batchPath.empty()) {
        std::ifstream in(batchPath);
        if (!in)
            throw ParseError("cannot open batch file '" + batchPath + "'");
        BatchDigest digest;
        auto batch = normalizeBatch(parseBatchFile(in, graph), graph, &digest);
        reportDigest(digest);
        applyBatch(graph, batch);
        tracker.update(graph, batch);
    }
    std::ofstream file;
    std::ostream &out = openOutput(file, opt.output);
    char buf[64];
    for (const auto &entry : tracker.entries()) {
        std::snprintf(buf, sizeof(buf), "%llu\t%.17g\n",
                      static_cast<unsigned long long>(graph.externalId(entry.source)), entry.vd);
        out << buf;
    }
    return exitOk;
}

int runGen(const CommonOptions &opt, const std::string &modeName, count x, count batchSize) {
    const EdgeListMode edgeMode = parseEdgeMode(opt.edgeMode);
    const DynamicsMode mode = parseDynamicsMode(modeName);
    if (opt.output.empty())
        throw DomainError("gen requires --output as a file prefix");

    std::vector<EdgeRecord> records;
    auto graph = loadInputGraph(opt.input, edgeMode, opt.seed, &records);

    std::mt19937_64 rng(opt.seed);
    DynamicsPlan plan;
    switch (mode) {
    case DynamicsMode::Real:
        plan = genRealDynamics(records, edgeMode, x, batchSize);
        break;
    case DynamicsMode::Random:
        plan = genRandomDynamics(graph, x, batchSize, rng);
        break;
    case DynamicsMode::WeightChange:
        plan = genWeightDynamics(graph, x, batchSize, rng);
        break;
    }
    if (plan.truncatedEvents > 0)
        diag::log(1, "gen: truncated " + std::to_string(plan.truncatedEvents)
                         + " events (edge pool exhausted)");

    const std::string basePath = opt.output + "_base.tsv";
    std::ofstream baseOut(basePath);
    if (!baseOut)
        throw ParseError("cannot open '" + basePath + "'");
    writeEdgeList(baseOut, plan.base);

    for (count b = 0; b < plan.batches.size(); ++b) {
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "_batch_%04llu.txt",
                      static_cast<unsigned long long>(b));
        const std::string path = opt.output + suffix;
        std::ofstream out(path);
        if (!out)
            throw ParseError("cannot open '" + path + "'");
        writeBatchFile(out, plan.batches[b], plan.base);
    }
    std::cout << "base graph: " << basePath << " (" << plan.base.numberOfEdges() << " edges)\n"
              << "batches:    " << plan.batches.size() << '\n';
    return exitOk;
}

int runBenchCmd(const CommonOptions &opt, const std::string &modeName,
                std::vector<count> batchSizes, count x, count runs, bool varyBatches) {
    const EdgeListMode edgeMode = parseEdgeMode(opt.edgeMode);
    std::vector<EdgeRecord> records;
    auto graph = loadInputGraph(opt.input, edgeMode, opt.seed, &records);

    BenchOptions options;
    options.params = opt.params();
    if (!batchSizes.empty())
        options.batchSizes = std::move(batchSizes);
    options.mode = parseDynamicsMode(modeName);
    options.x = x;
    options.runs = runs;
    options.varyBatches = varyBatches;

    auto report = runBench(graph, records, options);
    std::ofstream file;
    std::ostream &out = openOutput(file, opt.output);
    if (opt.format == "json")
        report.writeJson(out);
    else
        report.writeTsv(out);
    return exitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Dynamic approximate betweenness centrality"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string mode = "random";
    std::string batchPath;
    std::vector<count> batchSizes;
    count x = 0;
    count runs = 10;
    bool varyBatches = false;

    auto *init = app.add_subcommand("init", "Build a betweenness state from an edge list");
    init->add_option("--input", opt.input, "Edge list file")->required();
    init->add_option("--state", opt.statePath, "State file to write")->required();
    init->add_option("--edge-mode", opt.edgeMode, "unweighted | weighted | collapse-multi");
    addCommonFlags(init, opt, true);

    auto *update = app.add_subcommand("update", "Apply a batch file to a persisted state");
    update->add_option("--input", opt.input, "Batch file (I/D/W events)")->required();
    update->add_option("--state", opt.statePath, "State file to read and rewrite")->required();
    addCommonFlags(update, opt, false);

    auto *exact = app.add_subcommand("exact", "Exact betweenness scores");
    exact->add_option("--input", opt.input, "Edge list file")->required();
    exact->add_option("--edge-mode", opt.edgeMode, "unweighted | weighted | collapse-multi");
    addCommonFlags(exact, opt, false);

    auto *vd = app.add_subcommand("vd", "Per-component vertex-diameter estimates");
    vd->add_option("--input", opt.input, "Edge list file")->required();
    vd->add_option("--batch", batchPath, "Optional batch file applied before reporting");
    vd->add_option("--edge-mode", opt.edgeMode, "unweighted | weighted | collapse-multi");
    addCommonFlags(vd, opt, false);

    auto *gen = app.add_subcommand("gen", "Generate a base graph and batch files");
    gen->add_option("--input", opt.input, "Edge list file")->required();
    gen->add_option("--mode", mode, "real | random | weight-change");
    gen->add_option("--x", x, "Number of events to derive")->required();
    count genBatchSize = 1;
    gen->add_option("--batch-size", genBatchSize, "Events per batch")
        ->check(CLI::Range(count(1), count(1024)));
    gen->add_option("--edge-mode", opt.edgeMode, "unweighted | weighted | collapse-multi");
    gen->add_option("--seed", opt.seed, "Random seed");
    gen->add_option("--output", opt.output, "Output file prefix")->required();

    auto *bench = app.add_subcommand("bench", "Time dynamic updates against recomputation");
    bench->add_option("--input", opt.input, "Edge list file or synthetic:<n>:<m>")->required();
    bench->add_option("--mode", mode, "real | random | weight-change");
    bench->add_option("--batch-size", batchSizes, "Batch sizes to measure")
        ->check(CLI::Range(count(1), count(1024)));
    bench->add_option("--x", x, "Events to draw from (defaults to the batch size)");
    bench->add_option("--runs", runs, "Averaging runs per batch size");
    bench->add_flag("--vary-batches", varyBatches, "Redraw the batch per run");
    bench->add_option("--edge-mode", opt.edgeMode, "unweighted | weighted | collapse-multi");
    addCommonFlags(bench, opt, true);

    try {
        app.parse(argc, argv);
        if (init->parsed())
            return runInit(opt);
        if (update->parsed())
            return runUpdate(opt);
        if (exact->parsed())
            return runExact(opt);
        if (vd->parsed())
            return runVd(opt, batchPath);
        if (gen->parsed())
            return runGen(opt, mode, x, genBatchSize);
        if (bench->parsed())
            return runBenchCmd(opt, mode, batchSizes, x, runs, varyBatches);
        return exitUsage;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exitOk : exitUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exitUsage;
    } catch (const ConsistencyError &e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return exitConsistency;
    } catch (const std::exception &e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return exitConsistency;
    }
}
