#include "fourierve/ordering.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fourierve/error.hpp"

namespace fve {

namespace {

using Graph = std::vector<std::set<VarId>>;

Graph interaction_graph(const GraphicalModel& m) {
    Graph g(m.num_vars());
    for (const auto& f : m.factors())
        for (VarId a : f.scope())
            for (VarId b : f.scope())
                if (a != b) g[a].insert(b);
    return g;
}

std::size_t fill_count(const Graph& g, VarId v) {
    std::size_t fill = 0;
    const auto& nb = g[v];
    for (auto a = nb.begin(); a != nb.end(); ++a)
        for (auto b = std::next(a); b != nb.end(); ++b)
            if (!g[*a].count(*b)) ++fill;
    return fill;
}

void eliminate(Graph& g, VarId v) {
    const auto nb = g[v];
    for (VarId a : nb) {
        g[a].erase(v);
        for (VarId b : nb)
            if (a != b) g[a].insert(b);
    }
    g[v].clear();
}

}  // namespace

std::string to_string(OrderingHeuristic h) {
    switch (h) {
        case OrderingHeuristic::MinDegree: return "mindeg";
        case OrderingHeuristic::MinFill: return "minfill";
        case OrderingHeuristic::Given: return "given";
    }
    return "?";
}

std::vector<VarId> elimination_order(const GraphicalModel& m, const OrderingSpec& spec) {
    const auto free = m.free_vars();
    if (spec.heuristic == OrderingHeuristic::Given) {
        auto sorted = spec.given;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != free)
            throw InvalidParams("given elimination order is not a permutation of the free variables");
        return spec.given;
    }

    Graph g = interaction_graph(m);
    std::vector<bool> remaining(m.num_vars(), false);
    for (VarId v : free) remaining[v] = true;

    std::vector<VarId> order;
    order.reserve(free.size());
    for (std::size_t step = 0; step < free.size(); ++step) {
        VarId best = 0;
        std::size_t best_score = std::numeric_limits<std::size_t>::max();
        for (VarId v : free) {
            if (!remaining[v]) continue;
            const std::size_t score = spec.heuristic == OrderingHeuristic::MinDegree
                                          ? g[v].size()
                                          : fill_count(g, v);
            if (score < best_score) {
                best_score = score;
                best = v;
                if (score == 0) break;
            }
        }
        order.push_back(best);
        remaining[best] = false;
        eliminate(g, best);
    }
    return order;
}

std::size_t induced_width(const GraphicalModel& m, const std::vector<VarId>& order) {
    Graph g = interaction_graph(m);
    std::size_t width = 0;
    for (VarId v : order) {
        width = std::max(width, g[v].size());
        eliminate(g, v);
    }
    return width;
}

}  // namespace fve
