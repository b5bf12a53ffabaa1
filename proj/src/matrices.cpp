#include "sqdist/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "sqdist/error.hpp"

namespace sqdist {

long long DenseSymMatrix::integer_entry(std::size_t i, std::size_t j) const {
    const double v = (*this)(i, j);
    return std::llround(v);
}

double DenseSymMatrix::trace() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
    return sum;
}

double DenseSymMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : entries_) sum += v * v;
    return std::sqrt(sum);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw Error(ErrorCode::InfeasibleParameters, "edge endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorCode::InfeasibleParameters, "loops are not allowed");
    }
    if (has_edge(u, v)) return;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edges_;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
    const auto& nb = adjacency_[u];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

namespace {

std::vector<std::size_t> part_labels(const Partition& p) {
    std::vector<std::size_t> label;
    label.reserve(static_cast<std::size_t>(p.n()));
    for (std::size_t part = 0; part < static_cast<std::size_t>(p.t()); ++part) {
        label.insert(label.end(), static_cast<std::size_t>(p[part]), part);
    }
    return label;
}

}  // namespace

DenseSymMatrix sqdist_from_partition(const Partition& p) {
    const auto label = part_labels(p);
    const std::size_t n = label.size();
    DenseSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m.set(i, j, label[i] == label[j] ? 4.0 : 1.0);
        }
    }
    return m;
}

SimpleGraph multipartite_graph(const Partition& p) {
    const auto label = part_labels(p);
    SimpleGraph g(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        for (std::size_t j = i + 1; j < label.size(); ++j) {
            if (label[i] != label[j]) g.add_edge(i, j);
        }
    }
    return g;
}

DenseSymMatrix sqdist_from_graph(const SimpleGraph& g) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.vertex_count();
    DenseSymMatrix m(n);
    std::vector<std::size_t> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), unreached);
        dist[src] = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : g.neighbours(u)) {
                if (dist[v] == unreached) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (std::size_t v = src + 1; v < n; ++v) {
            if (dist[v] == unreached) {
                throw Error(ErrorCode::DisconnectedGraph,
                            "vertex " + std::to_string(v) + " unreachable from " + std::to_string(src));
            }
            const auto d = static_cast<double>(dist[v]);
            m.set(src, v, d * d);
        }
    }
    return m;
}

std::string to_csv(const DenseSymMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out << ',';
            out << m.integer_entry(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sqdist
