#include "fourierve/term_key.hpp"

#include <algorithm>
#include <iterator>

#include "fourierve/error.hpp"

namespace fve {

TermKey::TermKey(std::vector<VarId> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
        throw InvalidParams("TermKey: duplicate variable id");
}

bool TermKey::contains(VarId v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

TermKey TermKey::symmetric_difference(const TermKey& other) const {
    std::vector<VarId> out;
    out.reserve(vars_.size() + other.vars_.size());
    std::set_symmetric_difference(vars_.begin(), vars_.end(), other.vars_.begin(),
                                  other.vars_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
}

TermKey TermKey::without(VarId v) const {
    std::vector<VarId> out;
    out.reserve(vars_.size());
    for (VarId id : vars_)
        if (id != v) out.push_back(id);
    return from_sorted(std::move(out));
}

std::size_t TermKeyHash::operator()(const TermKey& key) const noexcept {
    // FNV-1a over the ids.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (VarId v : key.vars()) {
        h ^= v;
        h *= 0x100000001b3ULL;
    }
    h ^= key.degree();
    h *= 0x100000001b3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace fve
