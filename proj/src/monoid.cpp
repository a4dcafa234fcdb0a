#include "presmon/monoid.hpp"

#include "presmon/error.hpp"

#include <algorithm>

namespace presmon {

GridFunction compose(const GridFunction& f, const GridFunction& g) {
    if (f.alphabet() != g.alphabet()) {
        throw Error("alphabet mismatch between composed functions");
    }
    std::vector<int> table(static_cast<std::size_t>(f.alphabet().size()));
    for (int i = 0; i < f.alphabet().size(); ++i) {
        table[static_cast<std::size_t>(i)] = f.image_index(g.image_index(i));
    }
    return GridFunction(f.alphabet(), std::move(table));
}

bool function_less(const GridFunction& a, const GridFunction& b) {
    return std::lexicographical_compare(a.table().begin(), a.table().end(),
                                        b.table().begin(), b.table().end());
}

FunctionSet::FunctionSet(DistanceAlphabet alphabet, std::vector<GridFunction> members)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
    for (const GridFunction& f : members_) {
        if (f.alphabet() != alphabet_) {
            throw Error("set members must share the set alphabet");
        }
    }
    std::sort(members_.begin(), members_.end(), function_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FunctionSet::contains(const GridFunction& f) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), f, function_less);
    return it != members_.end() && *it == f;
}

FunctionSet monoid_closure(const FunctionSet& s) {
    std::vector<GridFunction> current(s.members().begin(), s.members().end());
    current.push_back(identity_function(s.alphabet()));
    std::sort(current.begin(), current.end(), function_less);
    current.erase(std::unique(current.begin(), current.end()), current.end());

    auto member = [&current](const GridFunction& f) {
        auto it = std::lower_bound(current.begin(), current.end(), f, function_less);
        return it != current.end() && *it == f;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GridFunction> fresh;
        for (const GridFunction& f : current) {
            for (const GridFunction& g : current) {
                GridFunction h = compose(f, g);
                if (!member(h)) {
                    fresh.push_back(std::move(h));
                }
            }
        }
        if (!fresh.empty()) {
            grew = true;
            current.insert(current.end(), fresh.begin(), fresh.end());
            std::sort(current.begin(), current.end(), function_less);
            current.erase(std::unique(current.begin(), current.end()), current.end());
        }
    }
    return FunctionSet(s.alphabet(), std::move(current));
}

bool is_submonoid(const FunctionSet& s) {
    if (!s.contains(identity_function(s.alphabet()))) {
        return false;
    }
    for (const GridFunction& f : s.members()) {
        for (const GridFunction& g : s.members()) {
            if (!s.contains(compose(f, g))) {
                return false;
            }
        }
    }
    return true;
}

FunctionSet intersect(const FunctionSet& s1, const FunctionSet& s2) {
    if (s1.alphabet() != s2.alphabet()) {
        throw Error("alphabet mismatch between function sets");
    }
    std::vector<GridFunction> out;
    for (const GridFunction& f : s1.members()) {
        if (s2.contains(f)) {
            out.push_back(f);
        }
    }
    return FunctionSet(s1.alphabet(), std::move(out));
}

FunctionSet all_endofunctions(const DistanceAlphabet& a, std::int64_t limit) {
    int n = a.size();
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) {
        if (count > limit / n) {
            throw Error("endofunction universe exceeds the limit of " +
                        std::to_string(limit));
        }
        count *= n;
    }
    std::vector<GridFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    while (true) {
        out.emplace_back(a, table);
        int pos = n - 1;
        while (pos >= 0 && table[static_cast<std::size_t>(pos)] == n - 1) {
            table[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++table[static_cast<std::size_t>(pos)];
    }
    return FunctionSet(a, std::move(out));
}

} // namespace presmon
