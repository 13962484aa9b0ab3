#pragma once

#include <utility>
#include <vector>

#include "fairshare/errors.hpp"

namespace fairshare {

/// Undirected simple graph on vertices 0..n-1. No self-loops, no duplicate
/// edges; adjacency lists are kept sorted so every traversal is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Adds {u, v}; ignores duplicates, rejects self-loops and bad indices.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// A matching of a Graph, stored as the mate array: mate[v] is the matched
/// partner of v, or -1. Construction enforces symmetry and disjointness.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<int> mate);
    static Matching from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int size() const;
    int mate(int v) const { return mate_.at(v); }
    bool covers(int v) const { return mate_.at(v) >= 0; }
    const std::vector<int>& mates() const { return mate_; }

    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> uncovered() const;

    /// Every matching edge must be an edge of g.
    bool valid_for(const Graph& g) const;

private:
    std::vector<int> mate_;
};

/// Bipartite graph with separate left/right index spaces. In Algorithm 1's
/// Step 4 the left side holds the Tutte set A and the right side holds the
/// leftover agents L.
class Bigraph {
public:
    Bigraph() = default;
    Bigraph(int left_count, int right_count);
    Bigraph(int left_count, int right_count, const std::vector<std::pair<int, int>>& edges);

    int left_count() const { return static_cast<int>(left_adj_.size()); }
    int right_count() const { return static_cast<int>(right_adj_.size()); }

    void add_edge(int left, int right);
    bool has_edge(int left, int right) const;

    const std::vector<int>& left_neighbors(int left) const { return left_adj_.at(left); }
    const std::vector<int>& right_neighbors(int right) const { return right_adj_.at(right); }

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> left_adj_;
    std::vector<std::vector<int>> right_adj_;
};

/// Matching of a Bigraph: left_mate[l] = right partner or -1, and vice versa.
struct BiMatching {
    std::vector<int> left_mate;
    std::vector<int> right_mate;

    int size() const;
    bool saturates_left() const;
};

}  // namespace fairshare
