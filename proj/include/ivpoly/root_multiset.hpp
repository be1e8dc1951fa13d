#ifndef IVPOLY_ROOT_MULTISET_HPP
#define IVPOLY_ROOT_MULTISET_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// Multiset of rational numbers with positive multiplicities: the root set
// of a split polynomial, or an evaluation set with repetitions.
class RootMultiset {
public:
    RootMultiset() = default;

    static RootMultiset from_values(std::span<const Rat> values);
    static RootMultiset from_integers(std::span<const Int> values);

    void add(const Rat& value, int multiplicity = 1);

    bool empty() const { return entries_.empty(); }

    // Number of elements counted with multiplicity.
    std::size_t cardinality() const;

    // Number of distinct elements.
    std::size_t distinct_count() const { return entries_.size(); }

    int multiplicity(const Rat& value) const;

    const std::map<Rat, int>& entries() const { return entries_; }

    // True iff every element of sub occurs here with at least the same
    // multiplicity.
    bool has_submultiset(const RootMultiset& sub) const;

    // Elements expanded with multiplicity, ascending.
    std::vector<Rat> sorted_values() const;

    // All sub-multisets of the given cardinality, in a deterministic order.
    std::vector<RootMultiset> submultisets_of_size(std::size_t k) const;

    // prod (X - a)^multiplicity over the entries.
    PolyQ product_of_linear_factors() const;

    friend bool operator==(const RootMultiset& a, const RootMultiset& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<Rat, int> entries_;
};

} // namespace ivpoly

#endif
