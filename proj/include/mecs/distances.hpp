#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mecs/graph.hpp"
#include "mecs/rational.hpp"

namespace mecs {

// Length of a shortest path. Unreachable pairs carry an explicit non-finite
// state instead of a large sentinel, so gadget-scale weights can never
// collide with "infinity". Addition saturates into the non-finite state.
class Distance {
public:
    Distance() : v_(kInf) {}

    static Distance infinity() { return Distance(); }
    static Distance of(std::int64_t value) {
        if (value < 0) throw std::domain_error("negative distance");
        Distance d;
        d.v_ = value;
        return d;
    }

    bool is_finite() const { return v_ != kInf; }
    std::int64_t value() const {
        if (!is_finite()) throw std::domain_error("value() on non-finite distance");
        return v_;
    }

    Distance operator+(Distance o) const {
        if (!is_finite() || !o.is_finite()) return infinity();
        return of(v_ + o.v_);
    }

    bool operator==(Distance o) const { return v_ == o.v_; }
    bool operator!=(Distance o) const { return v_ != o.v_; }
    bool operator<(Distance o) const {
        if (!o.is_finite()) return is_finite();
        return is_finite() && v_ < o.v_;
    }
    bool operator<=(Distance o) const { return *this < o || *this == o; }
    bool operator>(Distance o) const { return o < *this; }
    bool operator>=(Distance o) const { return o <= *this; }

private:
    static constexpr std::int64_t kInf = -1;
    std::int64_t v_;
};

class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    Distance at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, Distance d) {
        cells_[static_cast<std::size_t>(i) * n_ + j] = d;
        cells_[static_cast<std::size_t>(j) * n_ + i] = d;
    }

    bool operator==(const DistanceMatrix& o) const { return n_ == o.n_ && cells_ == o.cells_; }

private:
    int n_;
    std::vector<Distance> cells_;
};

// Average shortest-path length as an exact value: the unordered distance
// sum together with the pair count n(n-1)/2. A disconnected graph has a
// non-finite APL.
struct AplValue {
    std::int64_t distance_sum = 0;  // meaningful only when finite
    std::int64_t pair_count = 0;
    bool finite = false;

    // 2 * distance_sum / (n(n-1)), i.e. the mean over ordered pairs.
    Rational value() const {
        if (!finite) throw std::domain_error("APL of a disconnected graph");
        if (pair_count == 0) throw std::domain_error("APL undefined below 2 nodes");
        return Rational(distance_sum, pair_count);
    }
};

// Edge participation flags, indexed like Graph::edges(). Empty means all.
using EdgeMask = std::vector<char>;

EdgeMask full_mask(const Graph& g);
EdgeMask mask_from_indices(const Graph& g, const std::vector<int>& edge_indices);
std::vector<int> indices_from_mask(const EdgeMask& mask);

// BFS when every weight is 1, Dijkstra otherwise.
std::vector<Distance> shortest_paths_from(const Graph& g, int source);
std::vector<Distance> shortest_paths_from(const Graph& g, const EdgeMask& mask, int source);

DistanceMatrix all_pairs_distances(const Graph& g);
DistanceMatrix all_pairs_distances(const Graph& g, const EdgeMask& mask);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const EdgeMask& mask);

AplValue apl(const Graph& g);
AplValue apl(const Graph& g, const EdgeMask& mask);
AplValue apl_from_matrix(const DistanceMatrix& m);

Distance diameter(const Graph& g);
Distance diameter_from_matrix(const DistanceMatrix& m);

// Sum over unordered pairs of min(d, cap); disconnected pairs count cap.
std::int64_t truncated_distance_sum(const DistanceMatrix& m, std::int64_t cap);

// Mean over ordered pairs of min(d, L); always finite. Requires n >= 2.
Rational truncated_apl(const Graph& g, std::int64_t L);

// Sum of d(u, v) over unordered pairs {u, v} with one endpoint in a and the
// other in b (pairs inside the intersection counted once). Non-finite if
// any such pair is unreachable.
Distance pairwise_distance_sum(const Graph& g, const std::vector<int>& a,
                               const std::vector<int>& b);
Distance pairwise_distance_sum(const DistanceMatrix& m, const std::vector<int>& a,
                               const std::vector<int>& b);

// In-place distance update after inserting edge (u, v) of the given weight:
// exact for a single insertion.
void relax_through_edge(DistanceMatrix& m, int u, int v, std::int64_t weight);

}  // namespace mecs
