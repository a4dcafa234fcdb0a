#pragma once

#include "presmon/alphabet.hpp"
#include "presmon/grid_function.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace presmon {

/// Finite labeled space: a symmetric matrix of alphabet value indices.
/// Metric axioms are predicates, never type invariants; the matrix must be
/// able to carry failed transforms (nonzero diagonal, zero off-diagonal).
class DistanceMatrix {
public:
    DistanceMatrix(DistanceAlphabet alphabet, int points, std::vector<int> entries);

    const DistanceAlphabet& alphabet() const { return alphabet_; }
    int points() const { return points_; }
    std::span<const int> entries() const { return entries_; }

    /// Alphabet index of the entry at row i, column j.
    int entry_index(int i, int j) const;
    /// Scaled value of the entry at row i, column j.
    std::int64_t distance(int i, int j) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    DistanceAlphabet alphabet_;
    int points_ = 0;
    std::vector<int> entries_;
};

/// Canonical ordering: point count first, then entries lexicographically.
/// Only meaningful for matrices over one alphabet.
bool space_less(const DistanceMatrix& a, const DistanceMatrix& b);

/// Zero diagonal, positive off-diagonal, triangle inequality.
bool is_metric(const DistanceMatrix& m);

/// Metric axioms with the strong triangle inequality
/// d(i,j) <= max(d(i,k), d(k,j)).
bool is_ultrametric(const DistanceMatrix& m);

/// Metric whose off-diagonal distances all equal one nonzero constant.
/// One-point spaces count as discrete.
bool is_discrete(const DistanceMatrix& m);

/// True when every 3-point subset induces a discrete submatrix; vacuous for
/// fewer than 3 points. Defined for metric inputs only.
bool all_three_point_subspaces_discrete(const DistanceMatrix& m);

/// Pointwise image: result[i][j] = f(m[i][j]), diagonal included, so a
/// function moving 0 yields a matrix with nonzero self-distances.
DistanceMatrix transform(const DistanceMatrix& m, const GridFunction& f);

/// Ultrametric on one point per alphabet value: d(p_i, p_j) = a_max(i,j)
/// for i != j, where a_1 < ... < a_k are the nonzero values and p_0 is an
/// extra anchor point. Every alphabet value occurs as an entry.
DistanceMatrix max_ultrametric_space(const DistanceAlphabet& a);

/// n points, every off-diagonal distance equal to k.
DistanceMatrix discrete_space(const DistanceAlphabet& a, int n, std::int64_t k);

/// Sorted set of scaled values occurring in the matrix.
std::vector<std::int64_t> distance_set(const DistanceMatrix& m);

enum class SpaceKind { metric, ultrametric, discrete, raw };

SpaceKind parse_space_kind(std::string_view text);
std::string_view space_kind_name(SpaceKind kind);

/// Finite set of matrices over one alphabet, deduplicated by labeled
/// equality (same point count, identical entries) and kept sorted.
class SpaceFamily {
public:
    explicit SpaceFamily(DistanceAlphabet alphabet,
                         std::vector<DistanceMatrix> spaces = {});

    const DistanceAlphabet& alphabet() const { return alphabet_; }
    std::span<const DistanceMatrix> spaces() const { return spaces_; }
    int size() const { return static_cast<int>(spaces_.size()); }
    bool contains(const DistanceMatrix& m) const;

    friend bool operator==(const SpaceFamily&, const SpaceFamily&) = default;

private:
    DistanceAlphabet alphabet_;
    std::vector<DistanceMatrix> spaces_;
};

/// All labeled matrices on n points with zero diagonal and nonzero
/// off-diagonal entries, filtered by kind (raw keeps everything), in
/// deterministic order. n is capped by `limit`.
SpaceFamily enumerate_spaces(const DistanceAlphabet& a, int n, SpaceKind kind,
                             int limit = 5);

} // namespace presmon
