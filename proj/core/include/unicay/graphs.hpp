#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "unicay/arith.hpp"

namespace unicay {

/// Symmetric circulant connection set: the nonzero first-row positions of an
/// n x n 0/1 circulant. 0 is never a member (no loops) and s is a member iff
/// n - s is.
struct ConnectionSet {
    std::int64_t n = 1;
    std::vector<std::int64_t> elems;  // sorted, in [1, n-1]

    bool contains(std::int64_t s) const;
    bool operator==(const ConnectionSet&) const = default;
};

/// Connection set of X_d^n = Cay(Z_n, U_d): {(n/d) k mod n : k in U_d}.
/// Requires d | n.
ConnectionSet unitary_connection_set(std::int64_t n, std::int64_t d);

/// Dense symmetric adjacency matrix with bit-packed rows.
class DenseGraph {
public:
    explicit DenseGraph(int n);

    int order() const { return n_; }
    bool adjacent(int i, int j) const {
        return bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64) & 1;
    }
    void add_edge(int i, int j);
    int degree(int i) const;
    int common_neighbors(int i, int j) const;
    long long edge_count() const;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

DenseGraph materialize(const ConnectionSet& cs);

/// All-pairs hop distances from BFS; -1 marks unreachable pairs.
struct DistanceProfile {
    int n = 0;
    std::vector<int> dist;  // n*n, row-major
    int diameter = 0;       // -1 when disconnected
    bool connected = false;

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

DistanceProfile bfs_all_pairs(const DenseGraph& g);

bool is_bipartite(const DenseGraph& g);
bool is_complete(const DenseGraph& g);
bool is_complete_bipartite(const DenseGraph& g);
/// Complete bipartite graph minus a perfect matching, on equal parts.
bool is_crown(const DenseGraph& g);

/// Intersection array {b_0, ..., b_{D-1}; c_1, ..., c_D} of a distance
/// regular graph.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;
    bool operator==(const IntersectionArray&) const = default;
};

/// Combinatorial distance-regularity check via the neighbor-shell counts
/// (c_j, a_j, b_j). Returns the intersection array when the graph is
/// distance regular, nullopt otherwise (disconnected input is not distance
/// regular). With strict = true the full two-parameter intersection-number
/// condition p^h_{ij} is audited as well.
std::optional<IntersectionArray> is_distance_regular(const DenseGraph& g, bool strict = false);

struct SrgParams {
    int n, k, lambda, mu;
    bool operator==(const SrgParams&) const = default;
};

/// Regular, diameter exactly 2, constant common-neighbor counts on edges
/// and on non-edges.
std::optional<SrgParams> is_strongly_regular_combinatorial(const DenseGraph& g);

/// Plain edge-list serialization, one "u v" pair per line, 0-indexed, u < v.
void write_edge_list(const DenseGraph& g, std::ostream& os);
DenseGraph read_edge_list(std::istream& is, int n);

}  // namespace unicay
