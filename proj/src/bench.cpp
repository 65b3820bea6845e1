#include <dynbc/bench.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include <dynbc/diagnostics.hpp>
#include <dynbc/oracle.hpp>

namespace dynbc {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

DynamicsPlan makePlan(const DynamicGraph &graph, const std::vector<EdgeRecord> &records,
                      const BenchOptions &options, count x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    switch (options.mode) {
    case DynamicsMode::Real:
        return genRealDynamics(records, graph.isWeighted() ? EdgeListMode::Weighted
                                                           : EdgeListMode::Unweighted,
                               x, x);
    case DynamicsMode::Random:
        return genRandomDynamics(graph, x, x, rng);
    case DynamicsMode::WeightChange:
        return genWeightDynamics(graph, x, x, rng);
    }
    throw DomainError("unknown dynamics mode");
}

double mean(const std::vector<double> &xs) {
    double sum = 0;
    for (double x : xs)
        sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

double stddev(const std::vector<double> &xs, double m) {
    if (xs.size() < 2)
        return 0.0;
    double sq = 0;
    for (double x : xs)
        sq += (x - m) * (x - m);
    return std::sqrt(sq / static_cast<double>(xs.size() - 1));
}

} // namespace

BenchReport runBench(const DynamicGraph &graph, const std::vector<EdgeRecord> &records,
                     const BenchOptions &options) {
    options.params.validate();
    if (options.runs == 0)
        throw DomainError("bench needs at least one run");

    BenchReport report;
    for (count batchSize : options.batchSizes) {
        if (batchSize == 0)
            throw DomainError("batch size must be at least 1");
        const count x = std::max(options.x, batchSize);

        DynamicsPlan plan = makePlan(graph, records, options, x, options.params.seed);

        std::vector<double> dynamicTimes, staticTimes;
        for (count run = 0; run < options.runs; ++run) {
            if (options.varyBatches && run > 0)
                plan = makePlan(graph, records, options, x, options.params.seed + run);
            if (plan.batches.empty())
                throw DomainError("dynamics produced no batch to benchmark");
            std::vector<EdgeEvent> events(plan.batches.front().begin(),
                                          plan.batches.front().end());
            if (events.size() > batchSize)
                events.resize(batchSize);

            DynamicGraph g = plan.base;
            BCParams params = options.params;
            params.seed = options.params.seed + run;
            BCState state = initBC(g, params);

            auto t0 = Clock::now();
            UpdateBatch batch = normalizeBatch(events, g);
            applyBatch(g, batch);
            updateBC(state, g, batch);
            dynamicTimes.push_back(secondsSince(t0));

            BCParams staticParams = params;
            staticParams.seed = params.seed + 7919; // independent draw stream
            auto t1 = Clock::now();
            auto scores = staticRK(g, staticParams);
            staticTimes.push_back(secondsSince(t1));
            (void)scores;
        }

        BenchRow row;
        row.batchSize = batchSize;
        row.dynamicMeanSeconds = mean(dynamicTimes);
        row.staticMeanSeconds = mean(staticTimes);
        row.speedup = row.dynamicMeanSeconds > 0
                          ? row.staticMeanSeconds / row.dynamicMeanSeconds
                          : std::numeric_limits<double>::infinity();
        row.runs = options.runs;
        report.rows.push_back(row);

        const double noiseDyn = stddev(dynamicTimes, row.dynamicMeanSeconds);
        if (noiseDyn > 0.1 * row.dynamicMeanSeconds)
            diag::log(1, "bench: dynamic timing noise " + std::to_string(noiseDyn) + "s exceeds 10% of mean "
                             + std::to_string(row.dynamicMeanSeconds) + "s (batch size "
                             + std::to_string(batchSize) + ")");
        const double noiseStat = stddev(staticTimes, row.staticMeanSeconds);
        if (noiseStat > 0.1 * row.staticMeanSeconds)
            diag::log(1, "bench: static timing noise " + std::to_string(noiseStat)
                             + "s exceeds 10% of mean " + std::to_string(row.staticMeanSeconds)
                             + "s (batch size " + std::to_string(batchSize) + ")");
    }
    return report;
}

void BenchReport::writeTsv(std::ostream &out) const {
    out << "batch_size\tt_dynamic_mean\tt_static_mean\tspeedup\truns\n";
    char buf[128];
    for (const BenchRow &row : rows) {
        std::snprintf(buf, sizeof(buf), "%llu\t%.6g\t%.6g\t%.6g\t%llu\n",
                      static_cast<unsigned long long>(row.batchSize), row.dynamicMeanSeconds,
                      row.staticMeanSeconds, row.speedup,
                      static_cast<unsigned long long>(row.runs));
        out << buf;
    }
}

void BenchReport::writeJson(std::ostream &out) const {
    nlohmann::json j = nlohmann::json::array();
    for (const BenchRow &row : rows) {
        j.push_back({{"batch_size", row.batchSize},
                     {"t_dynamic_mean", row.dynamicMeanSeconds},
                     {"t_static_mean", row.staticMeanSeconds},
                     {"speedup", row.speedup},
                     {"runs", row.runs}});
    }
    out << j.dump(2) << '\n';
}

} // namespace dynbc
