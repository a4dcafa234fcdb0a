#include "presmon/verifier.hpp"

#include "presmon/error.hpp"
#include "presmon/json_io.hpp"
#include "presmon/preservation.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace presmon {

std::string_view status_name(VerificationStatus status) {
    switch (status) {
    case VerificationStatus::verified:
        return "verified";
    case VerificationStatus::falsified:
        return "falsified";
    case VerificationStatus::not_applicable:
        return "not-applicable";
    }
    throw Error("unknown verification status");
}

namespace {

// Status is derived, which keeps the report invariant by construction:
// counterexamples force falsified, an empty completed scan is verified,
// and zero instances mean the check never engaged.
VerificationReport make_report(std::string check_id, nlohmann::json parameters,
                               std::int64_t instances,
                               std::vector<nlohmann::json> counterexamples) {
    VerificationReport r;
    r.check_id = std::move(check_id);
    r.parameters = std::move(parameters);
    r.instances_checked = instances;
    r.counterexamples = std::move(counterexamples);
    if (!r.counterexamples.empty()) {
        r.status = VerificationStatus::falsified;
    } else if (instances > 0) {
        r.status = VerificationStatus::verified;
    } else {
        r.status = VerificationStatus::not_applicable;
    }
    return r;
}

// All spaces of the kind on 1..max_points points, in (point count, entries)
// order, so binary search with space_less works on the result.
std::vector<DistanceMatrix> spaces_up_to(const DistanceAlphabet& a, int max_points,
                                         SpaceKind kind) {
    std::vector<DistanceMatrix> out;
    for (int n = 1; n <= max_points; ++n) {
        SpaceFamily family = enumerate_spaces(a, n, kind, max_points);
        out.insert(out.end(), family.spaces().begin(), family.spaces().end());
    }
    return out;
}

int space_index(const std::vector<DistanceMatrix>& spaces, const DistanceMatrix& m) {
    auto it = std::lower_bound(spaces.begin(), spaces.end(), m, space_less);
    if (it != spaces.end() && *it == m) {
        return static_cast<int>(it - spaces.begin());
    }
    return -1;
}

// targets[f][s] = index of transform(spaces[s], fns[f]) within spaces, or -1
// when the transform leaves the list.
std::vector<std::vector<int>> build_targets(const std::vector<DistanceMatrix>& spaces,
                                            std::span<const GridFunction> fns) {
    std::vector<std::vector<int>> targets;
    targets.reserve(fns.size());
    for (const GridFunction& f : fns) {
        std::vector<int> row;
        row.reserve(spaces.size());
        for (const DistanceMatrix& m : spaces) {
            row.push_back(space_index(spaces, transform(m, f)));
        }
        targets.push_back(std::move(row));
    }
    return targets;
}

// f preserves the family encoded by mask iff every member's transform is a
// member again. Vacuously true for the empty mask.
bool preserves_mask(std::uint64_t mask, const std::vector<int>& target_row) {
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        int s = std::countr_zero(rest);
        int t = target_row[static_cast<std::size_t>(s)];
        if (t < 0 || (mask >> static_cast<unsigned>(t) & 1u) == 0) {
            return false;
        }
    }
    return true;
}

SpaceFamily family_from_mask(const DistanceAlphabet& a,
                             const std::vector<DistanceMatrix>& spaces,
                             std::uint64_t mask) {
    std::vector<DistanceMatrix> members;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        members.push_back(spaces[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    return SpaceFamily(a, std::move(members));
}

void check_lattice_bounds(std::size_t space_count, int function_count) {
    if (space_count > 16) {
        throw Error("family lattice too large (" + std::to_string(space_count) +
                    " spaces)");
    }
    if (function_count > 256) {
        throw Error("function universe too large for the family lattice (" +
                    std::to_string(function_count) + " functions)");
    }
}

} // namespace

VerificationReport verify_empty_class(const DistanceAlphabet& a) {
    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;

    FunctionSet everything = all_endofunctions(a);
    FunctionSet p_empty = preserving_functions(SpaceFamily(a));
    ++instances;
    if (p_empty != everything) {
        bad.push_back({{"note", "the empty family must admit every endofunction"},
                       {"preserving_set", to_json(p_empty)}});
    }

    for (const DistanceMatrix& m : spaces_up_to(a, 3, SpaceKind::metric)) {
        for (int k = 1; k < a.size(); ++k) {
            GridFunction c = constant_function(a, a.value(k));
            ++instances;
            if (transform(m, c) == m) {
                bad.push_back(
                    {{"note", "a positive constant preserved a singleton metric family"},
                     {"space", to_json(m)},
                     {"constant", a.value(k)}});
            }
        }
    }

    nlohmann::json params{{"alphabet", to_json(a)}, {"max_points", 3}};
    return make_report("l1", std::move(params), instances, std::move(bad));
}

VerificationReport verify_one_point(const DistanceAlphabet& a) {
    std::vector<DistanceMatrix> spaces = spaces_up_to(a, 3, SpaceKind::metric);
    FunctionSet fns = all_endofunctions(a);
    check_lattice_bounds(spaces.size(), fns.size());
    std::vector<std::vector<int>> targets = build_targets(spaces, fns.members());

    std::vector<char> zero_fixing(static_cast<std::size_t>(fns.size()));
    for (int f = 0; f < fns.size(); ++f) {
        zero_fixing[static_cast<std::size_t>(f)] =
            fns.members()[static_cast<std::size_t>(f)].image_index(0) == 0;
    }
    int one_point = -1;
    for (std::size_t s = 0; s < spaces.size(); ++s) {
        if (spaces[s].points() == 1) {
            one_point = static_cast<int>(s);
        }
    }

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    std::uint64_t families = std::uint64_t{1} << spaces.size();
    for (std::uint64_t mask = 0; mask < families; ++mask) {
        bool expect = mask == (std::uint64_t{1} << static_cast<unsigned>(one_point));
        bool equals_zero_fixing = true;
        for (int f = 0; f < fns.size(); ++f) {
            bool in_p = preserves_mask(mask, targets[static_cast<std::size_t>(f)]);
            if (in_p != static_cast<bool>(zero_fixing[static_cast<std::size_t>(f)])) {
                equals_zero_fixing = false;
                break;
            }
        }
        ++instances;
        if (equals_zero_fixing != expect) {
            bad.push_back({{"family", to_json(family_from_mask(a, spaces, mask))},
                           {"preserving_set_is_zero_fixing", equals_zero_fixing},
                           {"family_is_the_one_point_singleton", expect}});
        }
    }

    nlohmann::json params{{"alphabet", to_json(a)},
                          {"max_points", 3},
                          {"spaces", spaces.size()},
                          {"families", families}};
    return make_report("th1", std::move(params), instances, std::move(bad));
}

VerificationReport verify_discrete_characterization(const DistanceAlphabet& a,
                                                    int max_points) {
    nlohmann::json params{{"alphabet", to_json(a)}, {"max_points", max_points}};
    std::int64_t smallest = a.value(1);
    std::int64_t largest = a.value(a.size() - 1);
    if (largest <= 2 * smallest) {
        params["note"] = "no value pair with c2 > 2*c1 exists, so the separating "
                         "spike function cannot be formed on this alphabet";
        return make_report("th2", std::move(params), 0, {});
    }

    std::vector<DistanceMatrix> spaces = spaces_up_to(a, max_points, SpaceKind::metric);
    FunctionSet fns = all_endofunctions(a);
    check_lattice_bounds(spaces.size(), fns.size());
    std::vector<std::vector<int>> targets = build_targets(spaces, fns.members());

    std::vector<char> amenable(static_cast<std::size_t>(fns.size()));
    for (int f = 0; f < fns.size(); ++f) {
        amenable[static_cast<std::size_t>(f)] =
            is_amenable(fns.members()[static_cast<std::size_t>(f)]);
    }
    std::vector<char> discrete(spaces.size());
    std::vector<int> points(spaces.size());
    for (std::size_t s = 0; s < spaces.size(); ++s) {
        discrete[s] = is_discrete(spaces[s]);
        points[s] = spaces[s].points();
    }
    // discrete_at[n][k] = index of the n-point discrete space with value k
    std::vector<std::vector<int>> discrete_at(static_cast<std::size_t>(max_points) + 1,
                                              std::vector<int>(static_cast<std::size_t>(a.size()), -1));
    for (int n = 2; n <= max_points; ++n) {
        for (int k = 1; k < a.size(); ++k) {
            discrete_at[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                space_index(spaces, discrete_space(a, n, a.value(k)));
        }
    }

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    std::uint64_t families = std::uint64_t{1} << spaces.size();
    for (std::uint64_t mask = 0; mask < families; ++mask) {
        bool all_discrete = true;
        bool has_two_points = false;
        bool closed_under_rescaling = true;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            std::size_t s = static_cast<std::size_t>(std::countr_zero(rest));
            if (!discrete[s]) {
                all_discrete = false;
            }
            if (points[s] >= 2) {
                has_two_points = true;
                for (int k = 1; k < a.size(); ++k) {
                    int idx = discrete_at[static_cast<std::size_t>(points[s])]
                                         [static_cast<std::size_t>(k)];
                    if (idx < 0 || (mask >> static_cast<unsigned>(idx) & 1u) == 0) {
                        closed_under_rescaling = false;
                    }
                }
            }
        }
        bool condition = all_discrete && has_two_points && closed_under_rescaling;
        bool p_is_amenable = true;
        for (int f = 0; f < fns.size(); ++f) {
            bool in_p = preserves_mask(mask, targets[static_cast<std::size_t>(f)]);
            if (in_p != static_cast<bool>(amenable[static_cast<std::size_t>(f)])) {
                p_is_amenable = false;
                break;
            }
        }
        ++instances;
        if (condition != p_is_amenable) {
            bad.push_back({{"family", to_json(family_from_mask(a, spaces, mask))},
                           {"condition_i", condition},
                           {"preserving_set_is_amenable", p_is_amenable}});
        }
    }

    params["spaces"] = spaces.size();
    params["families"] = families;
    return make_report("th2", std::move(params), instances, std::move(bad));
}

VerificationReport verify_three_point_reduction(const DistanceAlphabet& a,
                                                int max_points) {
    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    for (int n = 1; n <= max_points; ++n) {
        SpaceFamily family = enumerate_spaces(a, n, SpaceKind::metric, max_points);
        for (const DistanceMatrix& m : family.spaces()) {
            bool whole = is_discrete(m);
            bool parts = all_three_point_subspaces_discrete(m);
            ++instances;
            if (whole != parts) {
                bad.push_back({{"space", to_json(m)},
                               {"discrete", whole},
                               {"three_point_subspaces_discrete", parts}});
            }
        }
    }
    nlohmann::json params{{"alphabet", to_json(a)}, {"max_points", max_points}};
    return make_report("pr10", std::move(params), instances, std::move(bad));
}

VerificationReport verify_ultrametric_characterization(const DistanceAlphabet& a,
                                                       int max_points) {
    if (max_points < 3) {
        throw Error("max points must be at least 3");
    }
    FunctionSet computed =
        preserving_functions(PreservationUniverse{a, max_points, SpaceKind::ultrametric});
    FunctionSet grown =
        preserving_functions(PreservationUniverse{a, max_points + 1, SpaceKind::ultrametric});
    FunctionSet fns = all_endofunctions(a);

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    for (const GridFunction& f : fns.members()) {
        bool preserves = computed.contains(f);
        bool characterized = is_increasing(f) && is_amenable(f);
        ++instances;
        if (preserves != characterized) {
            bad.push_back({{"function", to_json(f)},
                           {"preserves_ultrametrics", preserves},
                           {"increasing_and_amenable", characterized}});
        }
        bool still = grown.contains(f);
        ++instances;
        if (preserves != still) {
            bad.push_back({{"function", to_json(f)},
                           {"note", "universe membership changed when max_points grew"},
                           {"at_max_points", preserves},
                           {"at_max_points_plus_one", still}});
        }
    }

    nlohmann::json params{{"alphabet", to_json(a)},
                          {"max_points", max_points},
                          {"stability_max_points", max_points + 1},
                          {"universe_size", computed.size()}};
    return make_report("t24", std::move(params), instances, std::move(bad));
}

VerificationReport verify_si_intersection(std::int64_t n) {
    DistanceAlphabet a = uniform_grid(n);
    FunctionSet lhs = si_functions(a);
    FunctionSet metric =
        preserving_functions(PreservationUniverse{a, 3, SpaceKind::metric});
    FunctionSet ultra =
        preserving_functions(PreservationUniverse{a, 3, SpaceKind::ultrametric});
    FunctionSet rhs = intersect(metric, ultra);

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    FunctionSet universe = all_endofunctions(a);
    for (const GridFunction& f : universe.members()) {
        bool in_lhs = lhs.contains(f);
        bool in_rhs = rhs.contains(f);
        ++instances;
        if (in_lhs != in_rhs) {
            bad.push_back({{"function", to_json(f)},
                           {"subadditive_increasing_amenable", in_lhs},
                           {"in_both_universes", in_rhs}});
        }
    }

    nlohmann::json params{{"alphabet", to_json(a)},
                          {"points", n},
                          {"max_points", 3},
                          {"set_size", lhs.size()}};
    return make_report("si", std::move(params), instances, std::move(bad));
}

VerificationReport verify_si_intersection(const DistanceAlphabet& a) {
    if (is_uniform_grid(a)) {
        return verify_si_intersection(a.value(a.size() - 1));
    }
    nlohmann::json params{
        {"alphabet", to_json(a)},
        {"note", "grid subadditivity is weaker than triplet preservation off the "
                 "uniform grid, so the identity is only claimed on {0,1,...,n}"}};
    return make_report("si", std::move(params), 0, {});
}

VerificationReport verify_submonoid_property(const DistanceAlphabet& a, int trials,
                                             std::uint64_t seed) {
    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;

    SpaceFamily empty(a);
    FunctionSet p_empty = preserving_functions(empty);
    ++instances;
    if (!is_submonoid(p_empty)) {
        bad.push_back({{"family", to_json(empty)},
                       {"note", "empty family"},
                       {"preserving_set", to_json(p_empty)}});
    }

    SpaceFamily twos = enumerate_spaces(a, 2, SpaceKind::metric, 2);
    FunctionSet p_twos = preserving_functions(twos);
    ++instances;
    if (!is_submonoid(p_twos) || p_twos != amenable_functions(a)) {
        bad.push_back({{"family", to_json(twos)},
                       {"note", "all 2-point spaces should admit exactly the amenable "
                                "functions"},
                       {"preserving_set", to_json(p_twos)}});
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int member_count = static_cast<int>(rng() % 5);
        std::vector<DistanceMatrix> members;
        members.reserve(static_cast<std::size_t>(member_count));
        for (int i = 0; i < member_count; ++i) {
            int n = 1 + static_cast<int>(rng() % 3);
            std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                for (int c = r; c < n; ++c) {
                    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(a.size()));
                    entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(c)] = v;
                    entries[static_cast<std::size_t>(c) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(r)] = v;
                }
            }
            members.emplace_back(a, n, std::move(entries));
        }
        SpaceFamily family(a, std::move(members));
        FunctionSet p = preserving_functions(family);
        ++instances;
        if (!is_submonoid(p)) {
            bad.push_back({{"trial", t},
                           {"family", to_json(family)},
                           {"preserving_set", to_json(p)}});
        }
    }

    nlohmann::json params{
        {"alphabet", to_json(a)},
        {"trials", trials},
        {"seed", seed},
        {"family_shape",
         "up to 4 random symmetric matrices on 1..3 points, entries unconstrained"}};
    return make_report("submonoid", std::move(params), instances, std::move(bad));
}

VerificationReport verify_construction(const DistanceAlphabet& a, SpaceKind kind) {
    if (kind != SpaceKind::metric && kind != SpaceKind::ultrametric) {
        throw Error("construction kind must be metric or ultrametric");
    }
    FunctionSet universe = preserving_functions(PreservationUniverse{a, 3, kind});
    if (universe.size() > 16) {
        throw Error("universe too large to enumerate submonoids (" +
                    std::to_string(universe.size()) + " functions)");
    }
    DistanceMatrix base = max_ultrametric_space(a);
    auto member_keeps_kind = [kind](const DistanceMatrix& m) {
        return kind == SpaceKind::metric ? is_metric(m) : is_ultrametric(m);
    };

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    std::int64_t submonoids = 0;

    auto run_instance = [&](const FunctionSet& sub, const char* note) {
        SpaceFamily family = orbit_family(sub, base);
        ++instances;
        bool ok = true;
        for (const DistanceMatrix& m : family.spaces()) {
            if (!member_keeps_kind(m)) {
                bad.push_back({{"submonoid", to_json(sub)},
                               {"space", to_json(m)},
                               {"note", "constructed member left the universe class"}});
                ok = false;
            }
        }
        FunctionSet p = preserving_functions(family);
        if (p != sub) {
            nlohmann::json entry{{"submonoid", to_json(sub)},
                                 {"preserving_set", to_json(p)}};
            if (note != nullptr) {
                entry["note"] = note;
            }
            bad.push_back(std::move(entry));
            ok = false;
        }
        return ok;
    };

    std::uint64_t subsets = std::uint64_t{1} << universe.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        std::vector<GridFunction> picked;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            picked.push_back(
                universe.members()[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
        FunctionSet sub(a, std::move(picked));
        if (!is_submonoid(sub)) {
            continue;
        }
        ++submonoids;
        run_instance(sub, nullptr);
    }

    FunctionSet si = si_functions(a);
    bool si_inside = is_submonoid(si);
    for (const GridFunction& f : si.members()) {
        si_inside = si_inside && universe.contains(f);
    }
    std::string si_outcome;
    if (si_inside) {
        si_outcome = run_instance(si, "subadditive increasing amenable instance")
                         ? "verified"
                         : "falsified";
    } else {
        si_outcome = "skipped: not a submonoid inside this universe";
    }

    nlohmann::json params{{"alphabet", to_json(a)},
                          {"kind", std::string(space_kind_name(kind))},
                          {"universe_size", universe.size()},
                          {"submonoids", submonoids},
                          {"si_instance", si_outcome}};
    return make_report(kind == SpaceKind::metric ? "mainth" : "mainth-u",
                       std::move(params), instances, std::move(bad));
}

VerificationReport verify_unrealizable_submonoid(const DistanceAlphabet& a,
                                                 int max_points, bool exhaustive) {
    GridFunction swap = swap_zero_one_function(a);
    GridFunction id = identity_function(a);
    FunctionSet pair(a, {swap, id});

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;

    ++instances;
    if (!is_submonoid(pair)) {
        bad.push_back({{"note", "swap plus identity failed the submonoid test"},
                       {"set", to_json(pair)}});
    }

    FunctionSet p_empty = preserving_functions(SpaceFamily(a));
    ++instances;
    if (p_empty != all_endofunctions(a) || p_empty == pair) {
        bad.push_back({{"note", "the empty family must admit every endofunction"},
                       {"preserving_set", to_json(p_empty)}});
    }

    std::vector<DistanceMatrix> spaces = spaces_up_to(a, max_points, SpaceKind::metric);
    if (exhaustive) {
        if (spaces.size() > 20) {
            throw Error("family lattice too large (" + std::to_string(spaces.size()) +
                        " spaces)");
        }
        std::vector<int> row;
        row.reserve(spaces.size());
        for (const DistanceMatrix& m : spaces) {
            row.push_back(space_index(spaces, transform(m, swap)));
        }
        std::uint64_t families = std::uint64_t{1} << spaces.size();
        for (std::uint64_t mask = 1; mask < families; ++mask) {
            ++instances;
            if (preserves_mask(mask, row)) {
                bad.push_back({{"family", to_json(family_from_mask(a, spaces, mask))},
                               {"note", "the swap preserved a nonempty metric family"}});
            }
        }
    } else {
        for (const DistanceMatrix& m : spaces) {
            DistanceMatrix moved = transform(m, swap);
            ++instances;
            if (moved.entry_index(0, 0) == 0) {
                bad.push_back({{"space", to_json(m)},
                               {"note", "swap transform kept a zero self-distance"}});
            }
        }
    }

    nlohmann::json params{
        {"alphabet", to_json(a)},
        {"max_points", max_points},
        {"mode", exhaustive ? "exhaustive" : "shortcut"},
        {"note", "the swap moves 0, so its transform of any metric member carries a "
                 "nonzero self-distance and cannot equal a member of a metric family"}};
    return make_report("ex10", std::move(params), instances, std::move(bad));
}

VerificationReport verify_discrete_class_preservers(const DistanceAlphabet& a,
                                                    int max_points) {
    if (max_points < 2) {
        throw Error("max points must be at least 2");
    }
    SpaceFamily discretes(a, spaces_up_to(a, max_points, SpaceKind::discrete));
    SpaceFamily twos = enumerate_spaces(a, 2, SpaceKind::metric, max_points);
    FunctionSet amenable = amenable_functions(a);
    FunctionSet p_disc = preserving_functions(discretes);
    FunctionSet p_twos = preserving_functions(twos);

    std::vector<nlohmann::json> bad;
    std::int64_t instances = 0;
    FunctionSet universe = all_endofunctions(a);
    for (const GridFunction& f : universe.members()) {
        bool expected = amenable.contains(f);
        bool in_disc = p_disc.contains(f);
        ++instances;
        if (in_disc != expected) {
            bad.push_back({{"function", to_json(f)},
                           {"family", "discrete"},
                           {"preserves", in_disc},
                           {"amenable", expected}});
        }
        bool in_twos = p_twos.contains(f);
        ++instances;
        if (in_twos != expected) {
            bad.push_back({{"function", to_json(f)},
                           {"family", "two-point"},
                           {"preserves", in_twos},
                           {"amenable", expected}});
        }
    }

    nlohmann::json params{{"alphabet", to_json(a)},
                          {"max_points", max_points},
                          {"amenable_size", amenable.size()}};
    return make_report("dis", std::move(params), instances, std::move(bad));
}

VerificationReport explore_submonoid_realizability(const DistanceAlphabet& a,
                                                   const FunctionSet& target,
                                                   int max_points,
                                                   std::int64_t budget) {
    if (target.alphabet() != a) {
        throw Error("alphabet mismatch between target set and search alphabet");
    }
    FunctionSet amenable = amenable_functions(a);
    bool inside = is_submonoid(target);
    for (const GridFunction& f : target.members()) {
        inside = inside && amenable.contains(f);
    }
    if (!inside) {
        throw Error("target must be a submonoid of the amenable functions");
    }
    if (budget < 1) {
        throw Error("budget must be positive");
    }

    std::vector<DistanceMatrix> spaces = spaces_up_to(a, max_points, SpaceKind::metric);
    if (spaces.size() > 40) {
        throw Error("family lattice too large (" + std::to_string(spaces.size()) +
                    " spaces)");
    }
    FunctionSet fns = all_endofunctions(a);
    std::vector<std::vector<int>> targets = build_targets(spaces, fns.members());
    // target members first: their absence from a preserving set shows fastest
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(fns.size()));
    for (int f = 0; f < fns.size(); ++f) {
        if (target.contains(fns.members()[static_cast<std::size_t>(f)])) {
            order.push_back(f);
        }
    }
    std::vector<char> wanted(static_cast<std::size_t>(fns.size()));
    for (int f : order) {
        wanted[static_cast<std::size_t>(f)] = 1;
    }
    for (int f = 0; f < fns.size(); ++f) {
        if (!wanted[static_cast<std::size_t>(f)]) {
            order.push_back(f);
        }
    }

    std::uint64_t families = std::uint64_t{1} << spaces.size();
    nlohmann::json params{{"alphabet", to_json(a)},
                          {"max_points", max_points},
                          {"budget", budget},
                          {"target", to_json(target)},
                          {"families_total", families}};
    for (std::uint64_t mask = 0; mask < families; ++mask) {
        if (static_cast<std::int64_t>(mask) >= budget) {
            params["families_examined"] = mask;
            params["note"] = "budget exhausted before the family lattice was covered";
            return make_report("explore", std::move(params), 0, {});
        }
        bool match = true;
        for (int f : order) {
            bool in_p = preserves_mask(mask, targets[static_cast<std::size_t>(f)]);
            if (in_p != static_cast<bool>(wanted[static_cast<std::size_t>(f)])) {
                match = false;
                break;
            }
        }
        if (match) {
            params["solution"] = to_json(family_from_mask(a, spaces, mask));
            return make_report("explore", std::move(params),
                               static_cast<std::int64_t>(mask) + 1, {});
        }
    }
    std::vector<nlohmann::json> bad;
    bad.push_back(
        {{"note", "no family over this alphabet and point bound has the target as "
                  "its preserving set; the bounded lattice is exhausted, which does "
                  "not refute the statement at larger scales"},
         {"families_examined", families}});
    return make_report("explore", std::move(params),
                       static_cast<std::int64_t>(families), std::move(bad));
}

} // namespace presmon
