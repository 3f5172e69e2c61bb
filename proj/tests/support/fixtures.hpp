#pragma once

#include <random>
#include <string>
#include <vector>

#include "stabline/dual.hpp"
#include "stabline/transversal.hpp"

namespace stabline::testing {

inline Rational R(const std::string& text) { return Rational::parse(text); }

inline Line line(const std::string& k, const std::string& l) { return {R(k), R(l)}; }

inline Point pt(const std::string& x, const std::string& y) { return {R(x), R(y)}; }

struct IntSegment {
    std::int64_t x;
    std::int64_t a;
    std::int64_t b;
};

inline SegmentFamily family(const std::vector<IntSegment>& raw) {
    std::vector<Segment> segments;
    for (const auto& s : raw) {
        segments.push_back({Rational(s.x), Rational(s.a), Rational(s.b)});
    }
    return validate_family(std::move(segments));
}

// Six segments of the first worked example, read off its grid.
inline SegmentFamily figure5() { return family({{1, 1, 7}, {3, 4, 10}, {4, 3, 8}, {7, 6, 9}, {9, 3, 10}, {10, 2, 12}}); }

// Same family with segments 3 and 4 raised and lowered.
inline SegmentFamily figure6() { return family({{1, 1, 7}, {3, 4, 10}, {4, 6, 8}, {7, 4, 9}, {9, 3, 10}, {10, 2, 12}}); }

inline SegmentFamily figure13() {
    return family({{1, 1, 11}, {2, 2, 12}, {4, 3, 12}, {6, 2, 11}, {8, 2, 12}, {9, 3, 13}});
}

inline SegmentFamily no_transversal_family() { return family({{1, 0, 1}, {2, 5, 6}, {3, 0, 1}}); }

/// Rationals with numerators in [-20, 20] and denominators in {1, 2, 3}.
class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

    Rational next() {
        std::uniform_int_distribution<std::int64_t> num(-20, 20);
        std::uniform_int_distribution<std::int64_t> den(1, 3);
        return Rational(num(rng_), den(rng_));
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Point point() { return {next(), next()}; }

    /// Family of n segments with distinct abscissas and ordered bounds.
    SegmentFamily family(std::size_t n) {
        std::vector<Segment> segments;
        while (segments.size() < n) {
            Rational x = next();
            bool taken = false;
            for (const auto& s : segments) {
                taken = taken || s.x == x;
            }
            if (taken) {
                continue;
            }
            Rational a = next();
            Rational b = next();
            if (b < a) {
                std::swap(a, b);
            }
            segments.push_back({std::move(x), std::move(a), std::move(b)});
        }
        return validate_family(std::move(segments));
    }

    /// Family built around a random line so that it always has a transversal.
    SegmentFamily feasible_family(std::size_t n) {
        const Line through{next(), next()};
        std::vector<Segment> segments;
        while (segments.size() < n) {
            Rational x = next();
            bool taken = false;
            for (const auto& s : segments) {
                taken = taken || s.x == x;
            }
            if (taken) {
                continue;
            }
            const Rational y = through.value_at(x);
            const Rational below(integer(0, 4), integer(1, 3));
            const Rational above(integer(0, 4), integer(1, 3));
            segments.push_back({x, y - below, y + above});
        }
        return validate_family(std::move(segments));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace stabline::testing
