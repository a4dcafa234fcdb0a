#pragma once

#include "presmon/alphabet.hpp"
#include "presmon/grid_function.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace presmon {

/// Classical composition: compose(f, g)(t) = f(g(t)), g applied first.
GridFunction compose(const GridFunction& f, const GridFunction& g);

/// Table-lexicographic order; meaningful for functions over one alphabet.
bool function_less(const GridFunction& a, const GridFunction& b);

/// Finite set of endofunctions over one alphabet, deduplicated by table
/// equality and kept sorted in table order.
class FunctionSet {
public:
    explicit FunctionSet(DistanceAlphabet alphabet,
                         std::vector<GridFunction> members = {});

    const DistanceAlphabet& alphabet() const { return alphabet_; }
    std::span<const GridFunction> members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(const GridFunction& f) const;

    friend bool operator==(const FunctionSet&, const FunctionSet&) = default;

private:
    DistanceAlphabet alphabet_;
    std::vector<GridFunction> members_;
};

/// Smallest superset of s containing the identity and closed under
/// composition. Terminates: the universe holds at most |D|^|D| functions.
FunctionSet monoid_closure(const FunctionSet& s);

/// Identity present and every pairwise composition stays inside.
bool is_submonoid(const FunctionSet& s);

FunctionSet intersect(const FunctionSet& s1, const FunctionSet& s2);

/// All |D|^|D| endofunctions in lexicographic table order.
FunctionSet all_endofunctions(const DistanceAlphabet& a,
                              std::int64_t limit = 1000000);

} // namespace presmon
