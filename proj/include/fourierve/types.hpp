#pragma once

#include <cstdint>
#include <map>
#include <optional>

namespace fve {

/// Index of a model variable.
using VarId = std::uint32_t;

/// Spins take the values -1 (false) and +1 (true).
inline bool is_spin(int value) { return value == -1 || value == 1; }

/// Partial map from variables to spins.
class Assignment {
public:
    Assignment() = default;

    /// Throws InvalidParams unless `spin` is -1 or +1.
    void set(VarId var, int spin);
    std::optional<int> get(VarId var) const;
    bool contains(VarId var) const { return values_.count(var) != 0; }
    std::size_t size() const { return values_.size(); }

    const std::map<VarId, int>& values() const { return values_; }

private:
    std::map<VarId, int> values_;
};

}  // namespace fve
