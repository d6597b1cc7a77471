#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepnet {

/// Unordered node pair; endpoints are 0-based node ids.
using Edge = std::pair<int, int>;

/// Thrown when edge-list text cannot be parsed. The message carries the
/// 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected unweighted graph, immutable after construction.
///
/// Construction validates endpoints, rejects self-loops, and deduplicates
/// edges after normalizing each pair to (min, max). Adjacency is stored in
/// CSR form so neighbor scans are a contiguous span.
class Graph {
public:
    Graph(int node_count, std::span<const Edge> edges);
    Graph(int node_count, std::initializer_list<Edge> edges)
        : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Normalized edge set: u < v, sorted lexicographically, no duplicates.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Sorted neighbor ids of v.
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;  // size n_+1
    std::vector<int> adj_;      // size 2*|edges|
};

/// Symmetric 0/1 matrix with zero diagonal; cell(u,v)=1 iff {u,v} is an edge.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

    int dim() const { return n_; }
    std::uint8_t operator()(int i, int j) const { return cells_[idx(i, j)]; }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j) {
        cells_[idx(i, j)] = 1;
        cells_[idx(j, i)] = 1;
    }

    bool operator==(const AdjacencyMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<std::uint8_t> cells_;
};

/// Validating constructor wrapper; throws std::invalid_argument on
/// out-of-range endpoints, self-loops, or node_count < 1.
Graph build_graph(int node_count, std::span<const Edge> edges);

AdjacencyMatrix to_adjacency(const Graph& graph);

/// Inverse of to_adjacency; throws std::invalid_argument if the matrix is
/// asymmetric or has a nonzero diagonal.
Graph from_adjacency(const AdjacencyMatrix& matrix);

/// Parses the edge-list text format:
///   - comment lines start with '#', blank lines are skipped
///   - first significant line is "n <count>"
///   - every following significant line is "<u> <v>"
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Serializes to the edge-list format, edges in normalized order. Each
/// entry of `comments` becomes a '#' line above the header.
std::string serialize_edge_list(const Graph& graph,
                                std::span<const std::string> comments = {});

/// True iff every node is reachable from node 0 (single-node graphs are
/// connected).
bool is_connected(const Graph& graph);

}  // namespace sepnet
