#ifndef DYNBC_BC_SAMPLER_HPP_
#define DYNBC_BC_SAMPLER_HPP_

#include <random>
#include <vector>

#include <dynbc/graph.hpp>
#include <dynbc/sssp.hpp>
#include <dynbc/types.hpp>

namespace dynbc {

struct BCParams {
    double epsilon = 0.05;
    double delta = 0.1;
    double c = 0.5;
    std::uint64_t seed = 1;

    void validate() const;
};

/// One sampled shortest path. `interior` lists the nodes strictly between
/// source and target in source-to-target order; a pair in different
/// components keeps its slot with `connected = false` and an empty interior.
struct SampledPath {
    node source = none;
    node target = none;
    bool connected = false;
    std::vector<node> interior;
};

/// Number of sampled paths required for the (epsilon, delta) guarantee given
/// a vertex-diameter upper bound: ceil((c/eps^2) * (floor(log2(max(vd-2,1)))
/// + 1 + ln(1/delta))). Monotone nondecreasing in vd; vd <= 0 (empty graph)
/// needs no samples.
count computeSampleCount(edgeweight vd, const BCParams &params);

/**
 * Approximate betweenness scores maintained under batch updates.
 *
 * The state owns r sampled (source, target, path) triples with one SSSP
 * state each, plus auxiliary SSSP states covering components the samples
 * miss (kept only for the vertex-diameter bound). Scores are kept as exact
 * integer path-membership counts and read out as count / r, so the
 * accounting identity "score * r == number of stored paths covering v"
 * survives every renormalization without floating-point drift.
 *
 * All randomness flows through one seeded generator in a fixed order: pair
 * draws, then the path walk per sample, in sample order; updates consume
 * draws in the same sample order, then for any newly added samples. Runs
 * with equal seeds and inputs are reproducible.
 *
 * Single writer; scores() may be read concurrently between updates.
 */
class BCState {
public:
    struct Sample {
        SampledPath path;
        SSSPState state;
        edgeweight vd = 0;
    };
    struct Coverage {
        node source = none;
        SSSPState state;
        edgeweight vd = 0;
    };

    const BCParams &params() const { return params_; }
    count sampleCount() const { return r_; }
    count coverageCount() const { return coverage_.size(); }
    edgeweight vdEstimate() const { return vd_; }
    count numberOfNodes() const { return interiorCount_.size(); }

    const std::vector<Sample> &samples() const { return samples_; }
    const std::vector<Coverage> &coverage() const { return coverage_; }
    const VisCounters &vis() const { return vis_; }
    count interiorCount(node v) const { return interiorCount_[v]; }

    double score(node v) const {
        return r_ == 0 ? 0.0 : static_cast<double>(interiorCount_[v]) / static_cast<double>(r_);
    }
    /// All nodes with their scores, ordered by external id.
    std::vector<std::pair<std::uint64_t, double>> scores() const;

    /// Full invariant audit against the current graph (tests only): path
    /// validity, accounting identity, vis-vs-states agreement, component
    /// coverage. Throws ConsistencyError.
    void audit(const DynamicGraph &graph) const;

    friend BCState initBC(const DynamicGraph &graph, const BCParams &params);
    friend void updateBC(BCState &state, const DynamicGraph &graph, const UpdateBatch &batch);
    friend class Snapshot;

private:
    void addInterior(const SampledPath &path);
    void removeInterior(const SampledPath &path);
    SampledPath drawPath(const DynamicGraph &graph, const SSSPState &sssp, node target);
    void bumpVis(const SSSPState &sssp);
    void drawNewSample(const DynamicGraph &graph);
    void coverUncovered(const DynamicGraph &graph, std::vector<node> &queue);
    void growSamples(const DynamicGraph &graph);

    BCParams params_;
    count r_ = 0;
    edgeweight vd_ = 0;
    std::vector<Sample> samples_;
    std::vector<Coverage> coverage_;
    std::vector<count> interiorCount_;
    VisCounters vis_;
    std::vector<std::uint64_t> externalIds_;
    std::mt19937_64 rng_;
};

/// Builds the initial approximation: sizes the sample set from a fresh
/// vertex-diameter scan, draws r uniform source-target pairs with one SSSP
/// and one sampled path each, then covers any components the samples missed.
BCState initBC(const DynamicGraph &graph, const BCParams &params);

/// Repairs the approximation after `batch` (already applied to `graph`):
/// updates every sample's SSSP and replaces its path, maintains the coverage
/// set, and if the vertex-diameter bound grew, adds samples and renormalizes.
void updateBC(BCState &state, const DynamicGraph &graph, const UpdateBatch &batch);

/// One shortest path between `source` and the (reachable) target, drawn
/// uniformly over all shortest paths by walking predecessors weighted by
/// path counts. Unreachable targets yield a disconnected placeholder.
SampledPath samplePath(const DynamicGraph &graph, const SSSPState &state, node target,
                       std::mt19937_64 &rng);

} // namespace dynbc

#endif // DYNBC_BC_SAMPLER_HPP_
