#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace presmon {

/// Exact nonnegative rational, kept in lowest terms with den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Parses "3" or "1/2". Rejects negative values, zero denominators and junk.
Rational parse_rational(std::string_view text);

/// Finite, exact set of admissible distance values. Every value is an
/// integer over one shared positive denominator; the stored integers are
/// strictly increasing, start at 0, and contain at least one nonzero entry.
/// The representation is canonical: gcd(scale, all values) == 1.
class DistanceAlphabet {
public:
    std::int64_t scale() const { return scale_; }
    std::span<const std::int64_t> values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    std::int64_t value(int index) const;

    /// Index of a scaled value, if it is a member.
    std::optional<int> index_of(std::int64_t scaled_value) const;

    /// Index of values[i] + values[j] if the sum is a member.
    /// Throws on out-of-range indices.
    std::optional<int> sum_index(int i, int j) const;

    friend bool operator==(const DistanceAlphabet&, const DistanceAlphabet&) = default;

private:
    friend DistanceAlphabet make_alphabet(std::span<const Rational> raw_values);
    friend DistanceAlphabet uniform_grid(std::int64_t n);
    friend DistanceAlphabet alphabet_from_scaled(std::int64_t scale,
                                                 std::vector<std::int64_t> values);

    DistanceAlphabet(std::int64_t scale, std::vector<std::int64_t> values);

    std::int64_t scale_ = 1;
    std::vector<std::int64_t> values_;
};

/// Builds the alphabet containing 0 and all inputs, sorted and reduced to a
/// canonical common denominator. Rejects an input set that is empty or
/// contains no nonzero value.
DistanceAlphabet make_alphabet(std::span<const Rational> raw_values);

/// The alphabet {0, 1, ..., n} with scale 1. Rejects n = 0.
DistanceAlphabet uniform_grid(std::int64_t n);

/// Validating constructor for already-scaled integers (the JSON wire form).
/// Requires a strictly increasing sequence starting at 0 with at least one
/// nonzero entry; canonicalizes the representation.
DistanceAlphabet alphabet_from_scaled(std::int64_t scale, std::vector<std::int64_t> values);

/// True when the alphabet is exactly {0, 1, ..., n} at scale 1 for some n >= 1.
bool is_uniform_grid(const DistanceAlphabet& a);

/// Comma-separated rationals, e.g. "0,1,2" or "0,1/2,1".
DistanceAlphabet parse_alphabet(std::string_view text);

/// Renders a scaled value as a reduced rational, e.g. "3" or "1/2".
std::string format_scaled(std::int64_t value, std::int64_t scale);

} // namespace presmon
