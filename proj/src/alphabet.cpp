#include "presmon/alphabet.hpp"

#include "presmon/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace presmon {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a) {
        throw Error("alphabet arithmetic overflow");
    }
    return a * b;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t out = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw Error("invalid number '" + std::string(text) + "'");
    }
    return out;
}

} // namespace

Rational parse_rational(std::string_view text) {
    Rational r;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        r.num = parse_int(text);
        r.den = 1;
    } else {
        r.num = parse_int(text.substr(0, slash));
        r.den = parse_int(text.substr(slash + 1));
    }
    if (r.den <= 0) {
        throw Error("invalid denominator in '" + std::string(text) + "'");
    }
    if (r.num < 0) {
        throw Error("negative value '" + std::string(text) + "' not allowed");
    }
    std::int64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

DistanceAlphabet::DistanceAlphabet(std::int64_t scale, std::vector<std::int64_t> values)
    : scale_(scale), values_(std::move(values)) {}

std::int64_t DistanceAlphabet::value(int index) const {
    if (index < 0 || index >= size()) {
        throw Error("alphabet index out of range");
    }
    return values_[static_cast<std::size_t>(index)];
}

std::optional<int> DistanceAlphabet::index_of(std::int64_t scaled_value) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), scaled_value);
    if (it == values_.end() || *it != scaled_value) {
        return std::nullopt;
    }
    return static_cast<int>(it - values_.begin());
}

std::optional<int> DistanceAlphabet::sum_index(int i, int j) const {
    if (i < 0 || i >= size() || j < 0 || j >= size()) {
        throw Error("alphabet index out of range");
    }
    return index_of(values_[static_cast<std::size_t>(i)] + values_[static_cast<std::size_t>(j)]);
}

DistanceAlphabet alphabet_from_scaled(std::int64_t scale, std::vector<std::int64_t> values) {
    if (scale < 1) {
        throw Error("alphabet scale must be positive");
    }
    if (values.size() < 2) {
        throw Error("alphabet needs at least one nonzero value");
    }
    if (values.front() != 0) {
        throw Error("alphabet values must start at 0");
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1]) {
            throw Error("alphabet values must be strictly increasing");
        }
    }
    std::int64_t g = scale;
    for (std::int64_t v : values) {
        g = std::gcd(g, v);
    }
    if (g > 1) {
        scale /= g;
        for (std::int64_t& v : values) {
            v /= g;
        }
    }
    return DistanceAlphabet(scale, std::move(values));
}

DistanceAlphabet make_alphabet(std::span<const Rational> raw_values) {
    if (raw_values.empty()) {
        throw Error("empty alphabet");
    }
    std::int64_t common = 1;
    for (const Rational& r : raw_values) {
        if (r.num < 0 || r.den <= 0) {
            throw Error("negative value " + std::to_string(r.num) + "/" +
                        std::to_string(r.den) + " not allowed");
        }
        common = checked_mul(common / std::gcd(common, r.den), r.den);
    }
    std::vector<std::int64_t> values;
    values.reserve(raw_values.size() + 1);
    values.push_back(0);
    for (const Rational& r : raw_values) {
        values.push_back(checked_mul(r.num, common / r.den));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return alphabet_from_scaled(common, std::move(values));
}

DistanceAlphabet uniform_grid(std::int64_t n) {
    if (n < 1) {
        throw Error("uniform grid size must be at least 1");
    }
    std::vector<std::int64_t> values(static_cast<std::size_t>(n) + 1);
    std::iota(values.begin(), values.end(), std::int64_t{0});
    return DistanceAlphabet(1, std::move(values));
}

bool is_uniform_grid(const DistanceAlphabet& a) {
    if (a.scale() != 1) {
        return false;
    }
    for (int i = 0; i < a.size(); ++i) {
        if (a.value(i) != i) {
            return false;
        }
    }
    return true;
}

std::string format_scaled(std::int64_t value, std::int64_t scale) {
    std::int64_t g = std::gcd(value, scale);
    if (g > 1) {
        value /= g;
        scale /= g;
    }
    if (scale == 1) {
        return std::to_string(value);
    }
    return std::to_string(value) + "/" + std::to_string(scale);
}

DistanceAlphabet parse_alphabet(std::string_view text) {
    std::vector<Rational> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view piece = text.substr(0, comma);
        if (piece.empty()) {
            throw Error("empty entry in alphabet list");
        }
        parts.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return make_alphabet(parts);
}

} // namespace presmon
