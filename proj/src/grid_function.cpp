#include "presmon/grid_function.hpp"

#include "presmon/error.hpp"

#include <algorithm>

namespace presmon {

GridFunction::GridFunction(DistanceAlphabet alphabet, std::vector<int> table)
    : alphabet_(std::move(alphabet)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != alphabet_.size()) {
        throw Error("function table has " + std::to_string(table_.size()) +
                    " entries for an alphabet of size " + std::to_string(alphabet_.size()));
    }
    for (int entry : table_) {
        if (entry < 0 || entry >= alphabet_.size()) {
            throw Error("function image index " + std::to_string(entry) + " out of range");
        }
    }
}

int GridFunction::image_index(int i) const {
    if (i < 0 || i >= alphabet_.size()) {
        throw Error("function argument index out of range");
    }
    return table_[static_cast<std::size_t>(i)];
}

std::int64_t GridFunction::image_value(int i) const {
    return alphabet_.value(image_index(i));
}

GridFunction identity_function(const DistanceAlphabet& a) {
    std::vector<int> table(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
        table[static_cast<std::size_t>(i)] = i;
    }
    return GridFunction(a, std::move(table));
}

GridFunction constant_function(const DistanceAlphabet& a, std::int64_t c) {
    auto idx = a.index_of(c);
    if (!idx) {
        throw Error("value " + format_scaled(c, a.scale()) + " is not in the alphabet");
    }
    std::vector<int> table(static_cast<std::size_t>(a.size()), *idx);
    return GridFunction(a, std::move(table));
}

GridFunction make_function(const DistanceAlphabet& a,
                           std::span<const std::pair<std::int64_t, std::int64_t>> pairs) {
    std::vector<int> table(static_cast<std::size_t>(a.size()), -1);
    for (const auto& [value, image] : pairs) {
        auto from = a.index_of(value);
        if (!from) {
            throw Error("value " + format_scaled(value, a.scale()) + " is not in the alphabet");
        }
        auto to = a.index_of(image);
        if (!to) {
            throw Error("image " + format_scaled(image, a.scale()) + " is not in the alphabet");
        }
        int& slot = table[static_cast<std::size_t>(*from)];
        if (slot != -1 && slot != *to) {
            throw Error("conflicting images for value " + format_scaled(value, a.scale()));
        }
        slot = *to;
    }
    for (int i = 0; i < a.size(); ++i) {
        if (table[static_cast<std::size_t>(i)] == -1) {
            throw Error("no image given for value " + format_scaled(a.value(i), a.scale()));
        }
    }
    return GridFunction(a, std::move(table));
}

GridFunction swap_zero_one_function(const DistanceAlphabet& a) {
    auto one = a.index_of(a.scale());
    if (!one) {
        throw Error("alphabet does not contain the value 1");
    }
    auto f = identity_function(a);
    std::vector<int> table(f.table().begin(), f.table().end());
    table[0] = *one;
    table[static_cast<std::size_t>(*one)] = 0;
    return GridFunction(a, std::move(table));
}

GridFunction spike_function(const DistanceAlphabet& a, std::int64_t low,
                            std::int64_t high, std::int64_t at) {
    auto low_idx = a.index_of(low);
    auto high_idx = a.index_of(high);
    auto at_idx = a.index_of(at);
    if (!low_idx || !high_idx || !at_idx) {
        throw Error("spike parameters must be alphabet members");
    }
    if (low <= 0 || at <= 0) {
        throw Error("spike parameters must be nonzero");
    }
    if (high <= 2 * low) {
        throw Error("spike needs high > 2 * low");
    }
    std::vector<int> table(static_cast<std::size_t>(a.size()), *low_idx);
    table[0] = 0;
    table[static_cast<std::size_t>(*at_idx)] = *high_idx;
    return GridFunction(a, std::move(table));
}

bool is_amenable(const GridFunction& f) {
    if (f.image_index(0) != 0) {
        return false;
    }
    for (int i = 1; i < f.alphabet().size(); ++i) {
        if (f.image_index(i) == 0) {
            return false;
        }
    }
    return true;
}

bool is_increasing(const GridFunction& f) {
    for (int i = 1; i < f.alphabet().size(); ++i) {
        if (f.image_value(i) < f.image_value(i - 1)) {
            return false;
        }
    }
    return true;
}

bool is_subadditive_on_grid(const GridFunction& f) {
    const auto& a = f.alphabet();
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i; j < a.size(); ++j) {
            auto sum = a.sum_index(i, j);
            if (!sum) {
                continue;
            }
            if (f.image_value(*sum) > f.image_value(i) + f.image_value(j)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Multiset {x,y,z} of positive values with each element at most the sum of
// the other two; equivalently 2 * max <= x + y + z.
bool is_triangle_triplet(std::int64_t x, std::int64_t y, std::int64_t z) {
    if (x <= 0 || y <= 0 || z <= 0) {
        return false;
    }
    return 2 * std::max({x, y, z}) <= x + y + z;
}

} // namespace

bool is_triangle_triplet_preserving(const GridFunction& f) {
    const auto& a = f.alphabet();
    for (int i = 1; i < a.size(); ++i) {
        for (int j = i; j < a.size(); ++j) {
            for (int k = j; k < a.size(); ++k) {
                if (!is_triangle_triplet(a.value(i), a.value(j), a.value(k))) {
                    continue;
                }
                if (!is_triangle_triplet(f.image_value(i), f.image_value(j),
                                         f.image_value(k))) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace presmon
