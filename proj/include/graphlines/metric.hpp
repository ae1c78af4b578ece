#pragma once

#include <cstdint>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

inline constexpr int kUnreachable = 255;

/// All-pairs hop distances; unreachable pairs hold kUnreachable.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    auto order() const -> int { return n_; }
    auto operator()(int u, int v) const -> int { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(int u, int v, int d) { d_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(d); }

    /// Vertices at exactly distance k from v.
    auto sphere(int v, int k) const -> VertexSet;

private:
    int n_ = 0;
    std::vector<std::uint8_t> d_;
};

/// Breadth-first search from every vertex.
auto apsp(const Graph &g) -> DistanceMatrix;

/// [abc]: d(a,b) + d(b,c) = d(a,c) with all three distances finite.
/// Throws std::domain_error unless a, b, c are distinct vertices.
auto between(const DistanceMatrix &d, int a, int b, int c) -> bool;

/// Largest distance, kUnreachable if some pair is unreachable; 0 for n <= 1.
auto diameter(const DistanceMatrix &d) -> int;

} // namespace graphlines
