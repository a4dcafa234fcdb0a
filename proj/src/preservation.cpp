#include "presmon/preservation.hpp"

#include "presmon/error.hpp"

#include <algorithm>

namespace presmon {

bool preserves_family(const GridFunction& f, const SpaceFamily& x) {
    if (f.alphabet() != x.alphabet()) {
        throw Error("alphabet mismatch between function and family");
    }
    for (const DistanceMatrix& m : x.spaces()) {
        if (!x.contains(transform(m, f))) {
            return false;
        }
    }
    return true;
}

FunctionSet preserving_functions(const SpaceFamily& x, std::int64_t limit) {
    FunctionSet universe = all_endofunctions(x.alphabet(), limit);
    std::vector<GridFunction> out;
    for (const GridFunction& f : universe.members()) {
        if (preserves_family(f, x)) {
            out.push_back(f);
        }
    }
    return FunctionSet(x.alphabet(), std::move(out));
}

FunctionSet preserving_functions(const PreservationUniverse& u, std::int64_t limit) {
    if (u.kind != SpaceKind::metric && u.kind != SpaceKind::ultrametric) {
        throw Error("universe kind must be metric or ultrametric");
    }
    if (u.max_points < 2) {
        throw Error("universe needs max points of at least 2");
    }
    std::vector<SpaceFamily> per_size;
    per_size.reserve(static_cast<std::size_t>(u.max_points));
    for (int n = 1; n <= u.max_points; ++n) {
        per_size.push_back(enumerate_spaces(u.alphabet, n, u.kind, u.max_points));
    }
    auto keeps_kind = [&u](const DistanceMatrix& m) {
        return u.kind == SpaceKind::metric ? is_metric(m) : is_ultrametric(m);
    };
    FunctionSet universe = all_endofunctions(u.alphabet, limit);
    std::vector<GridFunction> out;
    for (const GridFunction& f : universe.members()) {
        bool keeps = true;
        for (const SpaceFamily& family : per_size) {
            for (const DistanceMatrix& m : family.spaces()) {
                if (!keeps_kind(transform(m, f))) {
                    keeps = false;
                    break;
                }
            }
            if (!keeps) {
                break;
            }
        }
        if (keeps) {
            out.push_back(f);
        }
    }
    return FunctionSet(u.alphabet, std::move(out));
}

namespace {

template <typename Predicate>
FunctionSet filter_endofunctions(const DistanceAlphabet& a, std::int64_t limit,
                                 Predicate keep) {
    FunctionSet universe = all_endofunctions(a, limit);
    std::vector<GridFunction> out;
    for (const GridFunction& f : universe.members()) {
        if (keep(f)) {
            out.push_back(f);
        }
    }
    return FunctionSet(a, std::move(out));
}

} // namespace

FunctionSet zero_fixing_functions(const DistanceAlphabet& a, std::int64_t limit) {
    return filter_endofunctions(a, limit,
                                [](const GridFunction& f) { return f.image_index(0) == 0; });
}

FunctionSet amenable_functions(const DistanceAlphabet& a, std::int64_t limit) {
    return filter_endofunctions(a, limit,
                                [](const GridFunction& f) { return is_amenable(f); });
}

FunctionSet si_functions(const DistanceAlphabet& a, std::int64_t limit) {
    return filter_endofunctions(a, limit, [](const GridFunction& f) {
        return is_amenable(f) && is_increasing(f) && is_subadditive_on_grid(f);
    });
}

SpaceFamily orbit_family(const FunctionSet& a, const DistanceMatrix& base) {
    if (a.alphabet() != base.alphabet()) {
        throw Error("alphabet mismatch between function set and base space");
    }
    if (!is_submonoid(a)) {
        throw Error("function set must be a submonoid");
    }
    if (!is_metric(base)) {
        throw Error("base space must be a metric");
    }
    std::vector<std::int64_t> realized = distance_set(base);
    std::vector<std::int64_t> all(base.alphabet().values().begin(),
                                  base.alphabet().values().end());
    if (realized != all) {
        throw Error("base space must realize every alphabet value");
    }
    std::vector<DistanceMatrix> members;
    members.reserve(static_cast<std::size_t>(a.size()));
    for (const GridFunction& f : a.members()) {
        members.push_back(transform(base, f));
    }
    return SpaceFamily(a.alphabet(), std::move(members));
}

} // namespace presmon
