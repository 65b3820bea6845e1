#ifndef DYNBC_SNAPSHOT_HPP_
#define DYNBC_SNAPSHOT_HPP_

#include <iosfwd>
#include <string>

#include <dynbc/bc_sampler.hpp>
#include <dynbc/graph.hpp>

namespace dynbc {

/**
 * Versioned JSON persistence for a graph plus its betweenness state, so CLI
 * runs can resume where the previous invocation stopped. The format stores
 * the parameters, the sample and coverage states (distances, exact path
 * counts as decimal strings), the sampled paths, and the generator position;
 * derived structures (histograms, interior counts, vis) are rebuilt on load
 * and re-audited.
 */
class Snapshot {
public:
    static constexpr int version = 1;

    static void save(std::ostream &out, const DynamicGraph &graph, const BCState &state);
    static void saveFile(const std::string &path, const DynamicGraph &graph, const BCState &state);

    struct Loaded {
        DynamicGraph graph;
        BCState state;
    };
    static Loaded load(std::istream &in);
    static Loaded loadFile(const std::string &path);
};

} // namespace dynbc

#endif // DYNBC_SNAPSHOT_HPP_
