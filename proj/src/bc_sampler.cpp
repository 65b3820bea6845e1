#include <dynbc/bc_sampler.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include <dynbc/random.hpp>
#include <dynbc/vd_tracker.hpp>

namespace dynbc {

void BCParams::validate() const {
    if (!(epsilon > 0 && epsilon < 1))
        throw DomainError("epsilon must lie in (0,1)");
    if (!(delta > 0 && delta < 1))
        throw DomainError("delta must lie in (0,1)");
    if (!(c > 0))
        throw DomainError("c must be positive");
}

count computeSampleCount(edgeweight vd, const BCParams &params) {
    params.validate();
    if (vd <= 0)
        return 0; // empty graph: nothing to sample
    const double logTerm = std::floor(std::log2(std::max(vd - 2.0, 1.0)));
    const double raw =
        params.c / (params.epsilon * params.epsilon) * (logTerm + 1.0 + std::log(1.0 / params.delta));
    return static_cast<count>(std::ceil(raw));
}

SampledPath samplePath(const DynamicGraph &graph, const SSSPState &state, node target,
                       std::mt19937_64 &rng) {
    SampledPath path;
    path.source = state.source();
    path.target = target;
    if (!state.reachable(target))
        return path;
    path.connected = true;

    node v = target;
    while (v != state.source()) {
        const std::vector<node> preds = predecessors(graph, state, v);
        pathcount total = 0;
        for (node z : preds)
            total += state.sigma(z);
        const pathcount pick = uniformPathcount(rng, total);
        pathcount prefix = 0;
        node chosen = preds.back();
        for (node z : preds) {
            prefix += state.sigma(z);
            if (pick < prefix) {
                chosen = z;
                break;
            }
        }
        if (chosen == state.source())
            break;
        path.interior.push_back(chosen);
        v = chosen;
    }
    std::reverse(path.interior.begin(), path.interior.end());
    return path;
}

void BCState::addInterior(const SampledPath &path) {
    for (node v : path.interior)
        ++interiorCount_[v];
}

void BCState::removeInterior(const SampledPath &path) {
    for (node v : path.interior) {
        if (interiorCount_[v] == 0)
            throw ConsistencyError("interior count underflow");
        --interiorCount_[v];
    }
}

SampledPath BCState::drawPath(const DynamicGraph &graph, const SSSPState &sssp, node target) {
    return samplePath(graph, sssp, target, rng_);
}

void BCState::bumpVis(const SSSPState &sssp) {
    sssp.forEachReachable([this](node v) { vis_.increment(v); });
}

void BCState::drawNewSample(const DynamicGraph &graph) {
    auto [s, t] = uniformNodePair(rng_, graph.numberOfNodes());
    Sample sample;
    sample.state = initSssp(graph, s);
    bumpVis(sample.state);
    sample.vd = sample.state.vdEstimate();
    vd_ = std::max(vd_, sample.vd);
    sample.path = drawPath(graph, sample.state, t);
    addInterior(sample.path);
    samples_.push_back(std::move(sample));
}

void BCState::coverUncovered(const DynamicGraph &graph, std::vector<node> &queue) {
    for (count i = 0; i < queue.size(); ++i) {
        const node s = queue[i];
        if (vis_[s] != 0)
            continue;
        Coverage cov;
        cov.source = s;
        cov.state = initSssp(graph, s);
        bumpVis(cov.state);
        cov.vd = cov.state.vdEstimate();
        coverage_.push_back(std::move(cov));
    }
    queue.clear();
}

void BCState::growSamples(const DynamicGraph &graph) {
    // Grow until the sample count matches the recorded bound; freshly drawn
    // states can raise the bound, so iterate to the fixed point. Scores are
    // derived as count / r, so existing contributions rescale exactly.
    while (true) {
        const count target = computeSampleCount(vd_, params_);
        if (target <= r_)
            return;
        if (graph.numberOfNodes() >= 2)
            while (samples_.size() < target)
                drawNewSample(graph);
        r_ = target;
    }
}

BCState initBC(const DynamicGraph &graph, const BCParams &params) {
    params.validate();
    const count n = graph.numberOfNodes();

    BCState state;
    state.params_ = params;
    state.interiorCount_.assign(n, 0);
    state.vis_ = VisCounters(n);
    state.externalIds_ = graph.externalIds();
    state.rng_.seed(params.seed);

    state.r_ = computeSampleCount(approxVertexDiameter(graph), params);
    if (n >= 2)
        for (count i = 0; i < state.r_; ++i)
            state.drawNewSample(graph);

    std::vector<node> uncovered(n);
    for (node v = 0; v < n; ++v)
        uncovered[v] = v;
    state.coverUncovered(graph, uncovered);

    state.vd_ = 0;
    for (const auto &sample : state.samples_)
        state.vd_ = std::max(state.vd_, sample.vd);
    for (const auto &cov : state.coverage_)
        state.vd_ = std::max(state.vd_, cov.vd);
    state.growSamples(graph);
    return state;
}

void updateBC(BCState &state, const DynamicGraph &graph, const UpdateBatch &batch) {
    if (graph.numberOfNodes() != state.numberOfNodes())
        throw ConsistencyError("updateBC: node count mismatch");

    std::vector<node> uncovered;

    for (auto &sample : state.samples_) {
        UpdateReport report = updateSssp(graph, sample.state, batch, state.vis_);
        for (node v : report.visZeroed)
            uncovered.push_back(v);
        sample.vd = sample.state.vdEstimate();
        // The stored path stays valid (and keeps the right distribution) when
        // the repair touched nothing in this state; otherwise replace it.
        if (report.touchedCount > 0) {
            state.removeInterior(sample.path);
            sample.path = state.drawPath(graph, sample.state, sample.path.target);
            state.addInterior(sample.path);
        }
    }

    std::vector<BCState::Coverage> kept;
    kept.reserve(state.coverage_.size());
    for (count i = 0; i < state.coverage_.size(); ++i) {
        auto &cov = state.coverage_[i];
        if (state.vis_[cov.source] > 1) {
            // Some other state covers this component now; release this one.
            cov.state.forEachReachable([&](node v) {
                if (state.vis_.decrement(v))
                    uncovered.push_back(v);
            });
            continue;
        }
        UpdateReport report = updateSssp(graph, cov.state, batch, state.vis_);
        for (node v : report.visZeroed)
            uncovered.push_back(v);
        cov.vd = cov.state.vdEstimate();
        kept.push_back(std::move(cov));
    }
    state.coverage_ = std::move(kept);

    state.coverUncovered(graph, uncovered);

    state.vd_ = 0;
    for (const auto &sample : state.samples_)
        state.vd_ = std::max(state.vd_, sample.vd);
    for (const auto &cov : state.coverage_)
        state.vd_ = std::max(state.vd_, cov.vd);
    state.growSamples(graph);
}

std::vector<std::pair<std::uint64_t, double>> BCState::scores() const {
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(interiorCount_.size());
    for (node v = 0; v < interiorCount_.size(); ++v)
        out.emplace_back(externalIds_[v], score(v));
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

void BCState::audit(const DynamicGraph &graph) const {
    const count n = graph.numberOfNodes();
    if (interiorCount_.size() != n || vis_.size() != n)
        throw ConsistencyError("bc audit: size mismatch");
    if (n >= 2 && samples_.size() != r_)
        throw ConsistencyError("bc audit: sample slots do not match r");
    if (r_ < computeSampleCount(vd_, params_))
        throw ConsistencyError("bc audit: sample count below the required bound");

    std::vector<count> recount(n, 0);
    std::vector<std::uint32_t> expectedVis(n, 0);

    for (const auto &sample : samples_) {
        sample.state.audit(graph);
        sample.state.forEachReachable([&](node v) { ++expectedVis[v]; });
        if (sample.vd != sample.state.vdEstimate())
            throw ConsistencyError("bc audit: stale sample vd estimate");
        const SampledPath &path = sample.path;
        if (path.source != sample.state.source())
            throw ConsistencyError("bc audit: path source mismatch");
        if (!path.connected) {
            if (!path.interior.empty())
                throw ConsistencyError("bc audit: disconnected path with interior nodes");
            if (path.target != none && sample.state.reachable(path.target))
                throw ConsistencyError("bc audit: placeholder path for a reachable target");
            continue;
        }
        if (!sample.state.reachable(path.target))
            throw ConsistencyError("bc audit: connected path to unreachable target");
        std::set<node> seen;
        node prev = path.source;
        edgeweight acc = 0;
        for (node v : path.interior) {
            if (v == path.source || v == path.target || !seen.insert(v).second)
                throw ConsistencyError("bc audit: interior node repeated or endpoint");
            auto w = graph.edgeWeight(prev, v);
            if (!w)
                throw ConsistencyError("bc audit: path uses a missing edge");
            acc += *w;
            ++recount[v];
            prev = v;
        }
        auto w = graph.edgeWeight(prev, path.target);
        if (!w)
            throw ConsistencyError("bc audit: path uses a missing final edge");
        acc += *w;
        if (acc != sample.state.distance(path.target))
            throw ConsistencyError("bc audit: stored path is not shortest");
    }

    for (const auto &cov : coverage_) {
        cov.state.audit(graph);
        cov.state.forEachReachable([&](node v) { ++expectedVis[v]; });
        if (cov.vd != cov.state.vdEstimate())
            throw ConsistencyError("bc audit: stale coverage vd estimate");
    }

    for (node v = 0; v < n; ++v) {
        if (recount[v] != interiorCount_[v])
            throw ConsistencyError("bc audit: accounting identity broken at node "
                                   + std::to_string(v));
        if (r_ > 0 && interiorCount_[v] > r_)
            throw ConsistencyError("bc audit: score above 1 at node " + std::to_string(v));
        if (expectedVis[v] != vis_[v])
            throw ConsistencyError("bc audit: vis mismatch at node " + std::to_string(v));
    }

    const auto label = connectedComponents(graph);
    std::vector<bool> covered(countComponents(graph), false);
    for (const auto &sample : samples_)
        covered[label[sample.state.source()]] = true;
    for (const auto &cov : coverage_)
        covered[label[cov.source]] = true;
    for (count c = 0; c < covered.size(); ++c)
        if (!covered[c])
            throw ConsistencyError("bc audit: component " + std::to_string(c) + " uncovered");
}

} // namespace dynbc
