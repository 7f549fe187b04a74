#pragma once

#include <cstddef>
#include <vector>

namespace golodkit {

/// Pearce–Kelly dynamic topological order. Insertions that would close a
/// cycle are rejected and leave the graph untouched; deletions never
/// invalidate the order.
class DynamicTopoOrder {
public:
    /// `initial` lists nodes in a valid topological order of the edges that
    /// will be added with add_edge_unchecked.
    explicit DynamicTopoOrder(const std::vector<std::size_t>& initial);

    std::size_t size() const { return ord_.size(); }
    std::size_t ord(std::size_t v) const { return ord_[v]; }

    void add_edge_unchecked(std::size_t u, std::size_t v);
    /// On rejection, `cycle` (if given) receives v ⇝ u, closing via u → v.
    bool try_add_edge(std::size_t u, std::size_t v, std::vector<std::size_t>* cycle = nullptr);
    void remove_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    /// Full consistency check against all stored edges.
    bool order_is_valid() const;

private:
    bool forward(std::size_t start, std::size_t target, std::size_t ub, std::vector<std::size_t>& seen,
                 std::vector<std::size_t>* cycle);
    void backward(std::size_t start, std::size_t lb, std::vector<std::size_t>& seen);

    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> ord_;
    std::vector<std::size_t> node_at_;
    std::vector<char> mark_;
};

} // namespace golodkit
