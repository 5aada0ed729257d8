#include "unicay/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace unicay {

bool ConnectionSet::contains(std::int64_t s) const {
    return std::binary_search(elems.begin(), elems.end(), s);
}

ConnectionSet unitary_connection_set(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 1 || n % d != 0) throw std::invalid_argument("unitary_connection_set: d must divide n");
    ConnectionSet cs;
    cs.n = n;
    for (std::int64_t k = 1; k <= d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        const std::int64_t s = (n / d * k) % n;
        if (s != 0) cs.elems.push_back(s);
    }
    std::sort(cs.elems.begin(), cs.elems.end());
    return cs;
}

DenseGraph::DenseGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_) {}

void DenseGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("DenseGraph: no loops");
    bits_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    bits_[static_cast<std::size_t>(j) * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

int DenseGraph::degree(int i) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(i) * words_ + w]);
    return d;
}

int DenseGraph::common_neighbors(int i, int j) const {
    int c = 0;
    const std::uint64_t* ri = &bits_[static_cast<std::size_t>(i) * words_];
    const std::uint64_t* rj = &bits_[static_cast<std::size_t>(j) * words_];
    for (int w = 0; w < words_; ++w) c += std::popcount(ri[w] & rj[w]);
    return c;
}

long long DenseGraph::edge_count() const {
    long long total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

DenseGraph materialize(const ConnectionSet& cs) {
    DenseGraph g(static_cast<int>(cs.n));
    for (int i = 0; i < cs.n; ++i)
        for (std::int64_t s : cs.elems) {
            const int j = static_cast<int>((i + s) % cs.n);
            if (i < j) g.add_edge(i, j);
        }
    return g;
}

DistanceProfile bfs_all_pairs(const DenseGraph& g) {
    const int n = g.order();
    DistanceProfile p;
    p.n = n;
    p.dist.assign(static_cast<std::size_t>(n) * n, -1);
    p.connected = true;
    p.diameter = 0;
    std::deque<int> queue;
    for (int src = 0; src < n; ++src) {
        int* row = &p.dist[static_cast<std::size_t>(src) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (g.adjacent(u, v) && row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0)
                p.connected = false;
            else
                p.diameter = std::max(p.diameter, row[v]);
        }
    }
    if (!p.connected) p.diameter = -1;
    return p;
}

namespace {

// BFS 2-coloring; fills side with 0/1 per component, returns false on an
// odd cycle.
bool two_color(const DenseGraph& g, std::vector<int>& side) {
    const int n = g.order();
    side.assign(n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool is_bipartite(const DenseGraph& g) {
    std::vector<int> side;
    return two_color(g, side);
}

bool is_complete(const DenseGraph& g) {
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        if (g.degree(i) != n - 1) return false;
    return true;
}

bool is_complete_bipartite(const DenseGraph& g) {
    std::vector<int> side;
    if (!two_color(g, side)) return false;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != (side[i] != side[j])) return false;
    return true;
}

bool is_crown(const DenseGraph& g) {
    std::vector<int> side;
    if (!two_color(g, side)) return false;
    const int n = g.order();
    if (n % 2 != 0) return false;
    const int m = n / 2;
    if (std::count(side.begin(), side.end(), 0) != m) return false;
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) != m - 1) return false;
        int missing = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i || side[j] == side[i]) continue;
            if (!g.adjacent(i, j)) ++missing;
        }
        if (missing != 1) return false;
    }
    return true;
}

std::optional<IntersectionArray> is_distance_regular(const DenseGraph& g, bool strict) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    const DistanceProfile p = bfs_all_pairs(g);
    if (!p.connected) return std::nullopt;
    const int k = g.degree(0);
    for (int i = 1; i < n; ++i)
        if (g.degree(i) != k) return std::nullopt;
    const int diam = p.diameter;

    // shell counts: for (u,v) at distance j, neighbors of v at distance
    // j-1 / j / j+1 from u must depend on j only
    std::vector<int> b(diam + 1, -1), c(diam + 1, -1), a(diam + 1, -1);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int j = p.at(u, v);
            int cj = 0, aj = 0, bj = 0;
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                const int dw = p.at(u, w);
                if (dw == j - 1)
                    ++cj;
                else if (dw == j)
                    ++aj;
                else if (dw == j + 1)
                    ++bj;
            }
            if (c[j] < 0) {
                c[j] = cj;
                a[j] = aj;
                b[j] = bj;
            } else if (c[j] != cj || a[j] != aj || b[j] != bj) {
                return std::nullopt;
            }
        }
    }

    if (strict) {
        // full intersection-number audit: |{w : d(u,w)=i, d(w,v)=j}| must be
        // a function of (i, j, d(u,v)) alone
        std::vector<std::vector<int>> seen(static_cast<std::size_t>(diam + 1),
                                           std::vector<int>((diam + 1) * (diam + 1), -1));
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                const int h = p.at(u, v);
                std::vector<int> counts((diam + 1) * (diam + 1), 0);
                for (int w = 0; w < n; ++w) ++counts[p.at(u, w) * (diam + 1) + p.at(w, v)];
                if (seen[h][0] < 0)
                    seen[h] = counts;
                else if (seen[h] != counts)
                    return std::nullopt;
            }
        }
    }

    IntersectionArray ia;
    ia.b.assign(b.begin(), b.end() - 1);
    ia.c.assign(c.begin() + 1, c.end());
    return ia;
}

std::optional<SrgParams> is_strongly_regular_combinatorial(const DenseGraph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    const int k = g.degree(0);
    for (int i = 1; i < n; ++i)
        if (g.degree(i) != k) return std::nullopt;
    const DistanceProfile p = bfs_all_pairs(g);
    if (!p.connected || p.diameter != 2) return std::nullopt;
    int lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int common = g.common_neighbors(i, j);
            int& slot = g.adjacent(i, j) ? lambda : mu;
            if (slot < 0)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    return SrgParams{n, k, lambda, mu};
}

void write_edge_list(const DenseGraph& g, std::ostream& os) {
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) os << i << " " << j << "\n";
}

DenseGraph read_edge_list(std::istream& is, int n) {
    DenseGraph g(n);
    int u, v;
    while (is >> u >> v) g.add_edge(u, v);
    return g;
}

}  // namespace unicay
