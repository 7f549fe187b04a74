#include "golodkit/topo_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace golodkit {

DynamicTopoOrder::DynamicTopoOrder(const std::vector<std::size_t>& initial)
    : out_(initial.size()), in_(initial.size()), ord_(initial.size()), node_at_(initial), mark_(initial.size(), 0)
{
    for (std::size_t k = 0; k < initial.size(); ++k)
        ord_.at(initial[k]) = k;
}

void DynamicTopoOrder::add_edge_unchecked(std::size_t u, std::size_t v)
{
    out_[u].push_back(v);
    in_[v].push_back(u);
}

bool DynamicTopoOrder::has_edge(std::size_t u, std::size_t v) const
{
    return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
}

void DynamicTopoOrder::remove_edge(std::size_t u, std::size_t v)
{
    auto drop = [](std::vector<std::size_t>& list, std::size_t x) {
        auto it = std::find(list.begin(), list.end(), x);
        if (it == list.end())
            throw std::logic_error("removing an absent edge");
        *it = list.back();
        list.pop_back();
    };
    drop(out_[u], v);
    drop(in_[v], u);
}

bool DynamicTopoOrder::forward(std::size_t start, std::size_t target, std::size_t ub, std::vector<std::size_t>& seen,
                               std::vector<std::size_t>* cycle)
{
    // iterative DFS keeping the stack as the current path for certificates
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    mark_[start] = 1;
    seen.push_back(start);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == out_[v].size()) {
            stack.pop_back();
            continue;
        }
        std::size_t w = out_[v][i++];
        if (w == target) {
            if (cycle) {
                cycle->clear();
                for (const auto& frame : stack)
                    cycle->push_back(frame.first);
                cycle->push_back(target);
            }
            return false;
        }
        if (!mark_[w] && ord_[w] < ub) {
            mark_[w] = 1;
            seen.push_back(w);
            stack.push_back({w, 0});
        }
    }
    return true;
}

void DynamicTopoOrder::backward(std::size_t start, std::size_t lb, std::vector<std::size_t>& seen)
{
    std::vector<std::size_t> stack{start};
    mark_[start] = 1;
    seen.push_back(start);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : in_[v])
            if (!mark_[w] && ord_[w] > lb) {
                mark_[w] = 1;
                seen.push_back(w);
                stack.push_back(w);
            }
    }
}

bool DynamicTopoOrder::try_add_edge(std::size_t u, std::size_t v, std::vector<std::size_t>* cycle)
{
    if (u == v) {
        if (cycle)
            *cycle = {u, u};
        return false;
    }
    std::size_t lb = ord_[v], ub = ord_[u];
    if (lb > ub) {
        add_edge_unchecked(u, v);
        return true;
    }
    std::vector<std::size_t> fwd, bwd;
    bool ok = forward(v, u, ub, fwd, cycle);
    for (std::size_t x : fwd)
        mark_[x] = 0;
    if (!ok)
        return false;
    backward(u, lb, bwd);
    for (std::size_t x : bwd)
        mark_[x] = 0;

    // reassign the pooled slots: everything reaching u first, then v's cone
    auto by_ord = [&](std::size_t a, std::size_t b) { return ord_[a] < ord_[b]; };
    std::sort(fwd.begin(), fwd.end(), by_ord);
    std::sort(bwd.begin(), bwd.end(), by_ord);
    std::vector<std::size_t> slots;
    for (std::size_t x : bwd)
        slots.push_back(ord_[x]);
    for (std::size_t x : fwd)
        slots.push_back(ord_[x]);
    std::sort(slots.begin(), slots.end());
    std::size_t k = 0;
    for (std::size_t x : bwd) {
        ord_[x] = slots[k];
        node_at_[slots[k++]] = x;
    }
    for (std::size_t x : fwd) {
        ord_[x] = slots[k];
        node_at_[slots[k++]] = x;
    }
    add_edge_unchecked(u, v);
    return true;
}

bool DynamicTopoOrder::order_is_valid() const
{
    for (std::size_t u = 0; u < out_.size(); ++u)
        for (std::size_t v : out_[u])
            if (ord_[u] >= ord_[v])
                return false;
    return true;
}

} // namespace golodkit
