#include "ivpoly/root_multiset.hpp"

#include <stdexcept>

namespace ivpoly {

RootMultiset RootMultiset::from_values(std::span<const Rat> values) {
    RootMultiset m;
    for (const Rat& v : values) m.add(v);
    return m;
}

RootMultiset RootMultiset::from_integers(std::span<const Int> values) {
    RootMultiset m;
    for (const Int& v : values) m.add(Rat(v));
    return m;
}

void RootMultiset::add(const Rat& value, int multiplicity) {
    if (multiplicity < 1) {
        throw std::domain_error("multiplicity must be positive");
    }
    entries_[value] += multiplicity;
}

std::size_t RootMultiset::cardinality() const {
    std::size_t n = 0;
    for (const auto& [value, mult] : entries_) n += static_cast<std::size_t>(mult);
    return n;
}

int RootMultiset::multiplicity(const Rat& value) const {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
}

bool RootMultiset::has_submultiset(const RootMultiset& sub) const {
    for (const auto& [value, mult] : sub.entries_) {
        if (multiplicity(value) < mult) return false;
    }
    return true;
}

std::vector<Rat> RootMultiset::sorted_values() const {
    std::vector<Rat> out;
    out.reserve(cardinality());
    for (const auto& [value, mult] : entries_) {
        for (int i = 0; i < mult; ++i) out.push_back(value);
    }
    return out;
}

std::vector<RootMultiset> RootMultiset::submultisets_of_size(std::size_t k) const {
    std::vector<std::pair<Rat, int>> items(entries_.begin(), entries_.end());
    std::vector<RootMultiset> out;
    RootMultiset current;

    // Choose a multiplicity for each distinct value in order.
    auto recurse = [&](auto&& self, std::size_t index, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (index == items.size()) return;
        const auto& [value, mult] = items[index];
        std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(mult), remaining);
        for (std::size_t take = 0; take <= cap; ++take) {
            if (take > 0) current.add(value, static_cast<int>(take));
            self(self, index + 1, remaining - take);
            if (take > 0) {
                auto it = current.entries_.find(value);
                it->second -= static_cast<int>(take);
                if (it->second == 0) current.entries_.erase(it);
            }
        }
    };
    recurse(recurse, 0, k);
    return out;
}

PolyQ RootMultiset::product_of_linear_factors() const {
    PolyQ prod = PolyQ::constant(Rat(1));
    for (const auto& [value, mult] : entries_) {
        PolyQ factor = PolyQ::variable() - PolyQ::constant(value);
        prod = prod * factor.pow(static_cast<unsigned>(mult));
    }
    return prod;
}

} // namespace ivpoly
