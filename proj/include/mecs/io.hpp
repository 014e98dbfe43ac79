#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mecs/graph.hpp"

namespace mecs::io {

// Deterministic 64-bit generator (splitmix64). Doubles are drawn as
// (next() >> 11) * 2^-53, uniform in [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Edge-list format: one "u v" or "u v w" per line, '#' starts a comment.
// The directive "# nodes: N" pins the node count and requires ids below N;
// without it, ids are compacted in order of first appearance.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out,
                    const std::vector<std::string>& header_comments = {});
void save_edge_list_file(const Graph& g, const std::string& path,
                         const std::vector<std::string>& header_comments = {});

// Built-in instances addressable by name from the CLI.
std::vector<std::string> builtin_instance_names();
Graph builtin_instance(const std::string& name);

struct UnitDiskParams {
    int count = 50;
    double box = 100.0;
    double range = 20.0;          // connect below this distance (unweighted mode)
    bool weighted = false;        // weight 1 below near_threshold, else 2 below far_threshold
    double near_threshold = 12.5;
    double far_threshold = 25.0;
    std::uint64_t seed = 1;
    int max_attempts = 100;
};

struct UnitDiskInstance {
    Graph graph;
    std::vector<std::pair<double, double>> points;
    int attempts = 1;
};

// Samples points uniformly in [0, box)^2 (x then y per point, in node
// order, all from one seeded stream) and connects by squared-distance
// thresholds. Retries with fresh points until connected; throws
// resource_limit_error after max_attempts.
UnitDiskInstance generate_unit_disk(const UnitDiskParams& params);

// One "x y" line per node, '#' comments allowed.
void save_coordinates(const std::vector<std::pair<double, double>>& points, std::ostream& out);

// Graphviz export; subgraph_edges (graph edge indices) are drawn bold.
void write_dot(const Graph& g, std::ostream& out, const std::vector<int>& subgraph_edges = {});

}  // namespace mecs::io
