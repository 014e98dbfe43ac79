#include "mecs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "mecs/distances.hpp"
#include "mecs/errors.hpp"

namespace mecs::io {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& token, int line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        std::ostringstream msg;
        msg << "line " << line_no << ": invalid " << what << " '" << token << "'";
        throw parse_error(msg.str());
    }
    return value;
}

struct RawEdge {
    std::int64_t u, v, w;
    int line;
};

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::int64_t declared = -1;
    std::vector<RawEdge> raw;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::string comment = trim(line.substr(hash + 1));
            if (comment.rfind("nodes:", 0) == 0) {
                std::int64_t n = parse_int(trim(comment.substr(6)), line_no, "node count");
                if (n < 1) throw parse_error("node count directive must be >= 1");
                if (declared >= 0 && declared != n)
                    throw parse_error("conflicting node count directives");
                declared = n;
            }
            line = line.substr(0, hash);
        }
        std::istringstream parts(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (parts >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 2 && tokens.size() != 3) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 'u v' or 'u v w'";
            throw parse_error(msg.str());
        }
        RawEdge e;
        e.u = parse_int(tokens[0], line_no, "endpoint");
        e.v = parse_int(tokens[1], line_no, "endpoint");
        e.w = tokens.size() == 3 ? parse_int(tokens[2], line_no, "weight") : 1;
        e.line = line_no;
        raw.push_back(e);
    }

    int n = 0;
    std::map<std::int64_t, int> ids;
    auto resolve = [&](std::int64_t id, int at) {
        if (declared >= 0) {
            if (id < 0 || id >= declared) {
                std::ostringstream msg;
                msg << "line " << at << ": node " << id << " outside declared range [0, "
                    << declared << ")";
                throw parse_error(msg.str());
            }
            return static_cast<int>(id);
        }
        auto it = ids.find(id);
        if (it != ids.end()) return it->second;
        ids.emplace(id, n);
        return n++;
    };

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (const RawEdge& e : raw) {
        int u = resolve(e.u, e.line);
        int v = resolve(e.v, e.line);
        std::ostringstream msg;
        if (e.w < 1) {
            msg << "line " << e.line << ": weight must be >= 1";
            throw parse_error(msg.str());
        }
        if (u == v) {
            msg << "line " << e.line << ": self-loop at node " << e.u;
            throw parse_error(msg.str());
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            msg << "line " << e.line << ": duplicate edge " << e.u << " " << e.v;
            throw parse_error(msg.str());
        }
        edges.push_back({u, v, e.w});
    }
    if (declared >= 0) n = static_cast<int>(declared);
    if (n == 0) throw parse_error("edge list is empty and declares no nodes");
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("invalid edge list: ") + ex.what());
    }
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out,
                    const std::vector<std::string>& header_comments) {
    for (const std::string& c : header_comments) out << "# " << c << "\n";
    out << "# nodes: " << g.node_count() << "\n";
    const bool unit = g.unit_weights();
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v;
        if (!unit) out << " " << e.weight;
        out << "\n";
    }
}

void save_edge_list_file(const Graph& g, const std::string& path,
                         const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    save_edge_list(g, out, header_comments);
}

namespace {

// Zachary's karate club, 34 nodes, 78 edges, zero-indexed.
constexpr int kKarateEdges[][2] = {
    {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
    {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
    {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
    {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
    {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
    {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
    {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
    {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
    {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
    {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
};

}  // namespace

std::vector<std::string> builtin_instance_names() { return {"karate"}; }

Graph builtin_instance(const std::string& name) {
    if (name == "karate") {
        std::vector<Edge> edges;
        for (const auto& e : kKarateEdges) edges.push_back({e[0], e[1], 1});
        return Graph(34, edges);
    }
    if (name == "krebs")
        throw parse_error(
            "built-in instance 'krebs' is not bundled (source data is not redistributable); "
            "load it from an edge-list file instead");
    throw parse_error("unknown built-in instance '" + name + "'; available: karate");
}

UnitDiskInstance generate_unit_disk(const UnitDiskParams& params) {
    if (params.count < 2) throw std::invalid_argument("unit-disk generator needs count >= 2");
    if (params.box <= 0.0) throw std::invalid_argument("unit-disk box must be positive");
    if (params.max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");
    if (params.weighted && params.near_threshold > params.far_threshold)
        throw std::invalid_argument("near_threshold must not exceed far_threshold");

    SplitMix64 rng(params.seed);
    const double connect = params.weighted ? params.far_threshold : params.range;
    const double connect_sq = connect * connect;
    const double near_sq = params.near_threshold * params.near_threshold;

    for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(params.count);
        for (int i = 0; i < params.count; ++i) {
            double x = rng.next_double() * params.box;
            double y = rng.next_double() * params.box;
            pts.emplace_back(x, y);
        }
        std::vector<Edge> edges;
        for (int u = 0; u < params.count; ++u) {
            for (int v = u + 1; v < params.count; ++v) {
                double dx = pts[u].first - pts[v].first;
                double dy = pts[u].second - pts[v].second;
                double d2 = dx * dx + dy * dy;
                if (d2 >= connect_sq) continue;
                std::int64_t w = 1;
                if (params.weighted && d2 >= near_sq) w = 2;
                edges.push_back({u, v, w});
            }
        }
        Graph g(params.count, edges);
        if (is_connected(g)) {
            UnitDiskInstance out{std::move(g), std::move(pts), attempt};
            return out;
        }
    }
    std::ostringstream msg;
    msg << "no connected unit-disk graph after " << params.max_attempts
        << " attempts; increase range or count";
    throw resource_limit_error(msg.str());
}

void save_coordinates(const std::vector<std::pair<double, double>>& points, std::ostream& out) {
    out << "# x y per node\n";
    out << std::setprecision(17);
    for (const auto& [x, y] : points) out << x << " " << y << "\n";
}

void write_dot(const Graph& g, std::ostream& out, const std::vector<int>& subgraph_edges) {
    std::vector<char> bold(g.edge_count(), 0);
    for (int e : subgraph_edges) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
        bold[e] = 1;
    }
    const bool highlight = !subgraph_edges.empty();
    out << "graph g {\n";
    for (int v = 0; v < g.node_count(); ++v) out << "  " << v << ";\n";
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v << " [";
        if (!g.unit_weights()) out << "label=\"" << e.weight << "\" ";
        if (highlight)
            out << (bold[i] ? "style=bold" : "style=dashed color=gray");
        else
            out << "style=solid";
        out << "];\n";
    }
    out << "}\n";
}

}  // namespace mecs::io
