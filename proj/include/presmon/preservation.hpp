#pragma once

#include "presmon/alphabet.hpp"
#include "presmon/grid_function.hpp"
#include "presmon/monoid.hpp"
#include "presmon/space.hpp"

#include <cstdint>

namespace presmon {

/// Bounded stand-in for "all metric (ultrametric) spaces": every labeled
/// space of the given kind over the alphabet on 1..max_points points.
struct PreservationUniverse {
    DistanceAlphabet alphabet;
    int max_points = 3;
    SpaceKind kind = SpaceKind::metric;
};

/// True iff transform(m, f) is labeled-equal to some member of x, for every
/// member m. Vacuously true on the empty family.
bool preserves_family(const GridFunction& f, const SpaceFamily& x);

/// { f : preserves_family(f, x) } over the full endofunction universe.
/// Always contains the identity and is closed under composition.
FunctionSet preserving_functions(const SpaceFamily& x,
                                 std::int64_t limit = 1000000);

/// Functions whose transform of every u.kind space on 1..max_points points
/// is again of that kind. This is kind preservation, not family membership.
FunctionSet preserving_functions(const PreservationUniverse& u,
                                 std::int64_t limit = 1000000);

/// { f : f(0) = 0 }.
FunctionSet zero_fixing_functions(const DistanceAlphabet& a,
                                  std::int64_t limit = 1000000);

/// { f : amenable }.
FunctionSet amenable_functions(const DistanceAlphabet& a,
                               std::int64_t limit = 1000000);

/// { f : amenable, increasing and subadditive on the grid }.
FunctionSet si_functions(const DistanceAlphabet& a,
                         std::int64_t limit = 1000000);

/// The orbit {transform(base, f) : f in a}, deduplicated. Solves P_X = a
/// when a is a submonoid of the preserving universe: the base realizes
/// every alphabet value, so labeled equality of transforms pins functions
/// pointwise.
SpaceFamily orbit_family(const FunctionSet& a, const DistanceMatrix& base);

} // namespace presmon
