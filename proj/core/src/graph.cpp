#include "fairshare/graph.hpp"

#include <algorithm>
#include <string>

namespace fairshare {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) {
        throw ValidationError(ValidationError::Code::BadIndex, "negative vertex count");
    }
    adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : Graph(vertex_count) {
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "vertex index " + std::to_string(v) + " out of range");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "self-loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        return;
    }
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Matching::Matching(std::vector<int> mate) : mate_(std::move(mate)) {
    const int n = static_cast<int>(mate_.size());
    for (int v = 0; v < n; ++v) {
        int u = mate_[v];
        if (u == -1) {
            continue;
        }
        if (u < 0 || u >= n || u == v || mate_[u] != v) {
            throw ValidationError(ValidationError::Code::BadIndex,
                                  "mate array is not a matching");
        }
    }
}

Matching Matching::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> mate(vertex_count, -1);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count || u == v ||
            mate[u] != -1 || mate[v] != -1) {
            throw ValidationError(ValidationError::Code::BadIndex,
                                  "edge list is not a matching");
        }
        mate[u] = v;
        mate[v] = u;
    }
    return Matching(std::move(mate));
}

int Matching::size() const {
    int covered = 0;
    for (int m : mate_) {
        if (m >= 0) {
            ++covered;
        }
    }
    return covered / 2;
}

std::vector<std::pair<int, int>> Matching::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int v = 0; v < static_cast<int>(mate_.size()); ++v) {
        if (mate_[v] > v) {
            result.emplace_back(v, mate_[v]);
        }
    }
    return result;
}

std::vector<int> Matching::uncovered() const {
    std::vector<int> result;
    for (int v = 0; v < static_cast<int>(mate_.size()); ++v) {
        if (mate_[v] == -1) {
            result.push_back(v);
        }
    }
    return result;
}

bool Matching::valid_for(const Graph& g) const {
    if (static_cast<int>(mate_.size()) != g.vertex_count()) {
        return false;
    }
    for (const auto& [u, v] : edges()) {
        if (!g.has_edge(u, v)) {
            return false;
        }
    }
    return true;
}

Bigraph::Bigraph(int left_count, int right_count) {
    if (left_count < 0 || right_count < 0) {
        throw ValidationError(ValidationError::Code::BadIndex, "negative side size");
    }
    left_adj_.resize(left_count);
    right_adj_.resize(right_count);
}

Bigraph::Bigraph(int left_count, int right_count,
                 const std::vector<std::pair<int, int>>& edges)
    : Bigraph(left_count, right_count) {
    for (const auto& [l, r] : edges) {
        add_edge(l, r);
    }
}

void Bigraph::add_edge(int left, int right) {
    if (left < 0 || left >= left_count() || right < 0 || right >= right_count()) {
        throw ValidationError(ValidationError::Code::BadIndex, "bigraph edge out of range");
    }
    if (has_edge(left, right)) {
        return;
    }
    auto& ln = left_adj_[left];
    ln.insert(std::lower_bound(ln.begin(), ln.end(), right), right);
    auto& rn = right_adj_[right];
    rn.insert(std::lower_bound(rn.begin(), rn.end(), left), left);
}

bool Bigraph::has_edge(int left, int right) const {
    if (left < 0 || left >= left_count() || right < 0 || right >= right_count()) {
        throw ValidationError(ValidationError::Code::BadIndex, "bigraph edge out of range");
    }
    const auto& ln = left_adj_[left];
    return std::binary_search(ln.begin(), ln.end(), right);
}

std::vector<std::pair<int, int>> Bigraph::edges() const {
    std::vector<std::pair<int, int>> result;
    for (int l = 0; l < left_count(); ++l) {
        for (int r : left_adj_[l]) {
            result.emplace_back(l, r);
        }
    }
    return result;
}

int BiMatching::size() const {
    int count = 0;
    for (int m : left_mate) {
        if (m >= 0) {
            ++count;
        }
    }
    return count;
}

bool BiMatching::saturates_left() const {
    for (int m : left_mate) {
        if (m < 0) {
            return false;
        }
    }
    return true;
}

}  // namespace fairshare
