#pragma once

#include <string>
#include <vector>

#include "fourierve/model.hpp"

namespace fve {

enum class OrderingHeuristic { MinDegree, MinFill, Given };

struct OrderingSpec {
    OrderingHeuristic heuristic = OrderingHeuristic::MinFill;
    std::vector<VarId> given;  ///< used only with OrderingHeuristic::Given

    static OrderingSpec min_degree() { return {OrderingHeuristic::MinDegree, {}}; }
    static OrderingSpec min_fill() { return {OrderingHeuristic::MinFill, {}}; }
    static OrderingSpec fixed(std::vector<VarId> order) {
        return {OrderingHeuristic::Given, std::move(order)};
    }
};

std::string to_string(OrderingHeuristic h);

/// Permutation of the model's free (non-evidence) variables.
///
/// MinDegree and MinFill greedily pick the variable with the fewest
/// neighbours / fill edges in the current interaction graph, connect its
/// neighbours and remove it; ties go to the smallest id. A Given order is
/// returned verbatim after checking it is a permutation of the free
/// variables (InvalidParams otherwise).
std::vector<VarId> elimination_order(const GraphicalModel& m, const OrderingSpec& spec);

/// Largest neighbourhood met while eliminating in `order` (induced width).
std::size_t induced_width(const GraphicalModel& m, const std::vector<VarId>& order);

}  // namespace fve
