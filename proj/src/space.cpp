#include "presmon/space.hpp"

#include "presmon/error.hpp"

#include <algorithm>

namespace presmon {

DistanceMatrix::DistanceMatrix(DistanceAlphabet alphabet, int points,
                               std::vector<int> entries)
    : alphabet_(std::move(alphabet)), points_(points), entries_(std::move(entries)) {
    if (points_ < 1) {
        throw Error("space needs at least one point");
    }
    if (entries_.size() != static_cast<std::size_t>(points_) * static_cast<std::size_t>(points_)) {
        throw Error("matrix must be square with one row per point");
    }
    for (int entry : entries_) {
        if (entry < 0 || entry >= alphabet_.size()) {
            throw Error("matrix entry index " + std::to_string(entry) + " out of range");
        }
    }
    for (int i = 0; i < points_; ++i) {
        for (int j = i + 1; j < points_; ++j) {
            if (entry_index(i, j) != entry_index(j, i)) {
                throw Error("matrix must be symmetric");
            }
        }
    }
}

int DistanceMatrix::entry_index(int i, int j) const {
    if (i < 0 || i >= points_ || j < 0 || j >= points_) {
        throw Error("point index out of range");
    }
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(points_) +
                    static_cast<std::size_t>(j)];
}

std::int64_t DistanceMatrix::distance(int i, int j) const {
    return alphabet_.value(entry_index(i, j));
}

bool space_less(const DistanceMatrix& a, const DistanceMatrix& b) {
    if (a.points() != b.points()) {
        return a.points() < b.points();
    }
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

bool is_metric(const DistanceMatrix& m) {
    int n = m.points();
    for (int i = 0; i < n; ++i) {
        if (m.entry_index(i, i) != 0) {
            return false;
        }
        for (int j = i + 1; j < n; ++j) {
            if (m.entry_index(i, j) == 0) {
                return false;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (m.distance(i, j) > m.distance(i, k) + m.distance(k, j)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_ultrametric(const DistanceMatrix& m) {
    if (!is_metric(m)) {
        return false;
    }
    int n = m.points();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (m.distance(i, j) > std::max(m.distance(i, k), m.distance(k, j))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_discrete(const DistanceMatrix& m) {
    if (!is_metric(m)) {
        return false;
    }
    int n = m.points();
    if (n < 2) {
        return true;
    }
    int k = m.entry_index(0, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (m.entry_index(i, j) != k) {
                return false;
            }
        }
    }
    return true;
}

bool all_three_point_subspaces_discrete(const DistanceMatrix& m) {
    if (!is_metric(m)) {
        throw Error("three-point discreteness is defined for metric spaces only");
    }
    int n = m.points();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                int a = m.entry_index(i, j);
                int b = m.entry_index(i, k);
                int c = m.entry_index(j, k);
                if (a != b || b != c) {
                    return false;
                }
            }
        }
    }
    return true;
}

DistanceMatrix transform(const DistanceMatrix& m, const GridFunction& f) {
    if (m.alphabet() != f.alphabet()) {
        throw Error("alphabet mismatch between space and function");
    }
    std::vector<int> mapped(m.entries().size());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        mapped[i] = f.image_index(m.entries()[i]);
    }
    return DistanceMatrix(m.alphabet(), m.points(), std::move(mapped));
}

DistanceMatrix max_ultrametric_space(const DistanceAlphabet& a) {
    int n = a.size();
    std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(j)] = std::max(i, j);
            }
        }
    }
    return DistanceMatrix(a, n, std::move(entries));
}

DistanceMatrix discrete_space(const DistanceAlphabet& a, int n, std::int64_t k) {
    auto idx = a.index_of(k);
    if (!idx || *idx == 0) {
        throw Error("discrete distance must be a nonzero alphabet member");
    }
    if (n < 1) {
        throw Error("space needs at least one point");
    }
    std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), *idx);
    for (int i = 0; i < n; ++i) {
        entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(i)] = 0;
    }
    return DistanceMatrix(a, n, std::move(entries));
}

std::vector<std::int64_t> distance_set(const DistanceMatrix& m) {
    std::vector<std::int64_t> out;
    for (int entry : m.entries()) {
        out.push_back(m.alphabet().value(entry));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SpaceKind parse_space_kind(std::string_view text) {
    if (text == "metric") {
        return SpaceKind::metric;
    }
    if (text == "ultrametric") {
        return SpaceKind::ultrametric;
    }
    if (text == "discrete") {
        return SpaceKind::discrete;
    }
    if (text == "raw") {
        return SpaceKind::raw;
    }
    throw Error("unknown space kind '" + std::string(text) + "'");
}

std::string_view space_kind_name(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::metric:
        return "metric";
    case SpaceKind::ultrametric:
        return "ultrametric";
    case SpaceKind::discrete:
        return "discrete";
    case SpaceKind::raw:
        return "raw";
    }
    throw Error("unknown space kind");
}

SpaceFamily::SpaceFamily(DistanceAlphabet alphabet, std::vector<DistanceMatrix> spaces)
    : alphabet_(std::move(alphabet)), spaces_(std::move(spaces)) {
    for (const DistanceMatrix& m : spaces_) {
        if (m.alphabet() != alphabet_) {
            throw Error("family members must share the family alphabet");
        }
    }
    std::sort(spaces_.begin(), spaces_.end(), space_less);
    spaces_.erase(std::unique(spaces_.begin(), spaces_.end()), spaces_.end());
}

bool SpaceFamily::contains(const DistanceMatrix& m) const {
    auto it = std::lower_bound(spaces_.begin(), spaces_.end(), m, space_less);
    return it != spaces_.end() && *it == m;
}

SpaceFamily enumerate_spaces(const DistanceAlphabet& a, int n, SpaceKind kind, int limit) {
    if (n < 1) {
        throw Error("space needs at least one point");
    }
    if (n > limit) {
        throw Error("enumeration is limited to " + std::to_string(limit) + " points");
    }
    int pairs = n * (n - 1) / 2;
    int choices = a.size() - 1;
    double estimate = 1.0;
    for (int p = 0; p < pairs; ++p) {
        estimate *= choices;
        if (estimate > 1e7) {
            throw Error("enumeration too large over this alphabet");
        }
    }
    std::vector<DistanceMatrix> out;
    std::vector<int> assignment(static_cast<std::size_t>(pairs), 1);
    while (true) {
        std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        int slot = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(j)] = assignment[static_cast<std::size_t>(slot)];
                entries[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(i)] = assignment[static_cast<std::size_t>(slot)];
                ++slot;
            }
        }
        DistanceMatrix m(a, n, std::move(entries));
        bool keep = true;
        switch (kind) {
        case SpaceKind::metric:
            keep = is_metric(m);
            break;
        case SpaceKind::ultrametric:
            keep = is_ultrametric(m);
            break;
        case SpaceKind::discrete:
            keep = is_discrete(m);
            break;
        case SpaceKind::raw:
            break;
        }
        if (keep) {
            out.push_back(std::move(m));
        }
        if (pairs == 0) {
            break;
        }
        int pos = pairs - 1;
        while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == choices) {
            assignment[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++assignment[static_cast<std::size_t>(pos)];
    }
    return SpaceFamily(a, std::move(out));
}

} // namespace presmon
