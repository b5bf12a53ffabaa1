#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqdist/partitions.hpp"

namespace sqdist {

/// Square symmetric matrix, row-major. Entries are doubles because the
/// eigensolver consumes them; distance matrices built here hold small
/// integers exactly, available through integer_entry().
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

    std::size_t order() const noexcept { return order_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    /// Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double value) {
        entries_[i * order_ + j] = value;
        entries_[j * order_ + i] = value;
    }

    /// Exact value of an integer-valued entry.
    long long integer_entry(std::size_t i, std::size_t j) const;

    std::span<const double> entries() const noexcept { return entries_; }

    double trace() const;
    double frobenius_norm() const;

    friend bool operator==(const DenseSymMatrix&, const DenseSymMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

/// Undirected simple graph on vertices 0..order-1.
class SimpleGraph {
public:
    explicit SimpleGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }

    /// Ignores duplicate edges; rejects loops and out-of-range endpoints.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    std::span<const std::size_t> neighbours(std::size_t v) const { return adjacency_[v]; }

private:
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t edges_ = 0;
};

/// Block form: 4(J - I) inside each part, 1 across parts. Vertices of a part
/// are contiguous, parts in canonical order.
DenseSymMatrix sqdist_from_partition(const Partition& p);

/// Explicit K_{n_1,...,n_t}: edge iff the endpoints lie in different parts.
SimpleGraph multipartite_graph(const Partition& p);

/// BFS all-pairs distances, squared entrywise. Throws DisconnectedGraph.
DenseSymMatrix sqdist_from_graph(const SimpleGraph& g);

/// Integer CSV, one row per line.
std::string to_csv(const DenseSymMatrix& m);

}  // namespace sqdist
