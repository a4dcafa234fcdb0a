#pragma once

#include "presmon/alphabet.hpp"
#include "presmon/monoid.hpp"
#include "presmon/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace presmon {

enum class VerificationStatus { verified, falsified, not_applicable };

std::string_view status_name(VerificationStatus status);

/// Outcome of one check. Invariant: status == verified exactly when
/// counterexamples is empty and instances_checked > 0; an aborted scan
/// reports zero instances and keeps its progress in parameters.
struct VerificationReport {
    std::string check_id;
    VerificationStatus status = VerificationStatus::not_applicable;
    nlohmann::json parameters;
    std::int64_t instances_checked = 0;
    std::vector<nlohmann::json> counterexamples;
};

/// The empty family preserves everything, and no singleton metric family
/// admits a positive constant function.
VerificationReport verify_empty_class(const DistanceAlphabet& a);

/// Family-lattice scan over all metric spaces on up to 3 points: the
/// preserving set equals the zero-fixing functions exactly for the family
/// holding just the one-point space.
VerificationReport verify_one_point(const DistanceAlphabet& a);

/// Family-lattice scan: the preserving set equals the amenable functions
/// exactly for families that are all discrete, contain a space with at
/// least 2 points, and contain every discrete re-metrization of each
/// member's point set. Needs values c2 > 2*c1 in the alphabet; otherwise
/// not applicable.
VerificationReport verify_discrete_characterization(const DistanceAlphabet& a,
                                                    int max_points = 3);

/// A metric space is discrete iff all of its 3-point subspaces are,
/// exhaustively over all metrics on up to max_points points.
VerificationReport verify_three_point_reduction(const DistanceAlphabet& a,
                                                int max_points = 5);

/// The ultrametric-preserving universe equals {increasing and amenable},
/// and is stable when max_points grows by one.
VerificationReport verify_ultrametric_characterization(const DistanceAlphabet& a,
                                                       int max_points = 3);

/// On the uniform grid {0..n}: the subadditive increasing amenable set
/// equals the intersection of the metric- and ultrametric-preserving
/// universes.
VerificationReport verify_si_intersection(std::int64_t n);

/// Alphabet entry point for the same check; non-uniform alphabets are not
/// applicable (grid subadditivity is too weak off the uniform grid).
VerificationReport verify_si_intersection(const DistanceAlphabet& a);

/// Seeded random raw families: every preserving set is a submonoid. Also
/// checks the two named instances (empty family; all 2-point spaces).
VerificationReport verify_submonoid_property(const DistanceAlphabet& a,
                                             int trials = 1000,
                                             std::uint64_t seed = 7);

/// Every submonoid of the preserving universe is realized exactly by the
/// orbit of the max-ultrametric base under it. kind selects the metric or
/// ultrametric universe.
VerificationReport verify_construction(const DistanceAlphabet& a, SpaceKind kind);

/// The two-element submonoid {swap of 0 and 1, identity} is never a
/// preserving set: nonempty metric families all reject the swap, and the
/// empty family yields everything. exhaustive scans the whole family
/// lattice instead of the per-space diagonal argument.
VerificationReport verify_unrealizable_submonoid(const DistanceAlphabet& a,
                                                 int max_points = 3,
                                                 bool exhaustive = false);

/// The preserving set of the all-discrete-spaces family and of the
/// all-2-point-spaces family both equal the amenable functions.
VerificationReport verify_discrete_class_preservers(const DistanceAlphabet& a,
                                                    int max_points = 3);

/// Bounded search for a metric family whose preserving set equals the
/// target (a submonoid of the amenable functions). Exhausting the lattice
/// without a hit is reported as falsified at this scale, not a refutation;
/// running out of budget is not applicable.
VerificationReport explore_submonoid_realizability(const DistanceAlphabet& a,
                                                   const FunctionSet& target,
                                                   int max_points = 3,
                                                   std::int64_t budget = 1000000);

} // namespace presmon
