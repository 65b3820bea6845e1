#ifndef DYNBC_BENCH_HPP_
#define DYNBC_BENCH_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <dynbc/bc_sampler.hpp>
#include <dynbc/dynamics.hpp>
#include <dynbc/graph.hpp>

namespace dynbc {

enum class DynamicsMode { Real, Random, WeightChange };

struct BenchOptions {
    BCParams params;
    std::vector<count> batchSizes{1};
    DynamicsMode mode = DynamicsMode::Random;
    count x = 0;     // events to draw from; defaults to the largest batch size
    count runs = 10; // averaging runs per batch size
    bool varyBatches = false; // re-randomize the batch per run instead of reusing it
};

struct BenchRow {
    count batchSize;
    double dynamicMeanSeconds; // one batch applied to a live state
    double staticMeanSeconds;  // full recomputation on the post-batch graph
    double speedup;
    count runs;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    void writeTsv(std::ostream &out) const;
    void writeJson(std::ostream &out) const;
};

/**
 * For each requested batch size: over `runs` runs, time one batch applied to
 * a freshly initialized state (the sampling seed varies per run; the batch
 * is fixed unless varyBatches) against a from-scratch recomputation on the
 * post-batch graph, and report the means and their ratio. Wall-clock noise
 * above 10% of the mean is reported on the diagnostics channel.
 */
BenchReport runBench(const DynamicGraph &graph, const std::vector<EdgeRecord> &records,
                     const BenchOptions &options);

} // namespace dynbc

#endif // DYNBC_BENCH_HPP_
