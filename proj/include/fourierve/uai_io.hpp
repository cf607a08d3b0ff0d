#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fourierve/model.hpp"

namespace fve {

enum class NetworkType { Markov, Bayes };

/// Raw content of a UAI model file. Tables are in UAI order: row-major with
/// the last scope variable changing fastest.
struct UaiDocument {
    NetworkType network_type = NetworkType::Markov;
    std::vector<int> cardinalities;
    std::vector<std::vector<VarId>> factor_scopes;
    std::vector<std::vector<double>> factor_tables;
};

/// Parses a whitespace-tokenized UAI model. Only binary variables are
/// accepted. Throws SyntaxError, CardinalityUnsupported or CountMismatch.
UaiDocument parse_uai(std::string_view text);

/// Converts UAI state 0/1 to spin -1/+1 and re-indexes each table into the
/// DenseTable convention. BAYES CPTs become plain factors.
GraphicalModel to_model(const UaiDocument& doc);

/// UAI evidence: a count followed by (variable, state) pairs.
Evidence parse_evidence(std::string_view text);

/// MARKOV document with values at 17 significant digits, so parsing it back
/// reproduces every double exactly. Throws InvalidParams for models carrying
/// state the format cannot hold (fixed variables or a nonzero log10 scale).
std::string write_uai(const GraphicalModel& m);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace fve
