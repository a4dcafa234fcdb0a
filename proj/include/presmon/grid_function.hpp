#pragma once

#include "presmon/alphabet.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace presmon {

/// Total endofunction of a distance alphabet. Entry i of the table is the
/// index of the image of values[i], so composition stays inside the alphabet.
/// f(0) = 0 is deliberately not required.
class GridFunction {
public:
    GridFunction(DistanceAlphabet alphabet, std::vector<int> table);

    const DistanceAlphabet& alphabet() const { return alphabet_; }
    std::span<const int> table() const { return table_; }

    /// Index of the image of values[i].
    int image_index(int i) const;
    /// Scaled value of the image of values[i].
    std::int64_t image_value(int i) const;

    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    DistanceAlphabet alphabet_;
    std::vector<int> table_;
};

GridFunction identity_function(const DistanceAlphabet& a);

/// Maps every alphabet value to c (a scaled member value).
GridFunction constant_function(const DistanceAlphabet& a, std::int64_t c);

/// Builds a function from (value, image) pairs over scaled member values.
/// Rejects non-total mappings, images outside the alphabet, and
/// contradictory duplicate pairs.
GridFunction make_function(const DistanceAlphabet& a,
                           std::span<const std::pair<std::int64_t, std::int64_t>> pairs);

/// Swaps the values 0 and 1 and fixes everything else. Requires the
/// rational 1 to be a member. Not amenable: it moves 0.
GridFunction swap_zero_one_function(const DistanceAlphabet& a);

/// Sends 0 to 0, `at` to `high`, and every other value to `low`.
/// Requires nonzero member values with high > 2 * low; the resulting
/// function separates non-discrete metrics from the discrete class.
GridFunction spike_function(const DistanceAlphabet& a, std::int64_t low,
                            std::int64_t high, std::int64_t at);

/// f(v) = 0 exactly for v = 0.
bool is_amenable(const GridFunction& f);

/// Images are nondecreasing along the sorted alphabet.
bool is_increasing(const GridFunction& f);

/// f(x+y) <= f(x) + f(y) for every value pair whose sum stays in the
/// alphabet; pairs whose sum leaves the alphabet are unconstrained.
bool is_subadditive_on_grid(const GridFunction& f);

/// Every multiset {a,b,c} of nonzero values with each element <= the sum of
/// the other two maps to a multiset with the same property.
bool is_triangle_triplet_preserving(const GridFunction& f);

} // namespace presmon
