#include "stabline/transversal.hpp"

#include <algorithm>
#include <numeric>

namespace stabline {

bool Segment::crossed_by(const Line& m) const {
    const Rational y = m.value_at(x);
    return a <= y && y <= b;
}

std::string to_string(ValidationErrorKind kind) {
    switch (kind) {
        case ValidationErrorKind::TooFew:
            return "TooFew";
        case ValidationErrorKind::DuplicateAbscissa:
            return "DuplicateAbscissa";
        case ValidationErrorKind::InvertedBounds:
            return "InvertedBounds";
        case ValidationErrorKind::MalformedRational:
            return "MalformedRational";
        case ValidationErrorKind::MissingField:
            return "MissingField";
        case ValidationErrorKind::MalformedDocument:
            return "MalformedDocument";
    }
    return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind, const std::string& message,
                                 std::vector<std::size_t> indices)
    : std::runtime_error(to_string(kind) + ": " + message), kind_(kind), indices_(std::move(indices)) {}

SegmentFamily validate_family(std::vector<Segment> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].a > raw[i].b) {
            throw ValidationError(ValidationErrorKind::InvertedBounds,
                                  "segment " + std::to_string(i) + " has a = " + raw[i].a.to_string() +
                                      " > b = " + raw[i].b.to_string(),
                                  {i});
        }
    }
    if (raw.size() < 2) {
        throw ValidationError(ValidationErrorKind::TooFew,
                              "need at least 2 segments, got " + std::to_string(raw.size()));
    }

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t lhs, std::size_t rhs) { return raw[lhs].x < raw[rhs].x; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (raw[order[i - 1]].x == raw[order[i]].x) {
            const std::size_t first = std::min(order[i - 1], order[i]);
            const std::size_t second = std::max(order[i - 1], order[i]);
            throw ValidationError(ValidationErrorKind::DuplicateAbscissa,
                                  "segments " + std::to_string(first) + " and " + std::to_string(second) +
                                      " share abscissa " + raw[first].x.to_string(),
                                  {first, second});
        }
    }

    std::vector<Segment> sorted;
    sorted.reserve(raw.size());
    for (std::size_t i : order) {
        sorted.push_back(std::move(raw[i]));
    }
    return SegmentFamily(std::move(sorted));
}

bool stabs_all(const Line& m, const SegmentFamily& family) {
    return std::all_of(family.begin(), family.end(),
                       [&](const Segment& s) { return s.crossed_by(m); });
}

std::optional<Triple> first_violating_triple(const SegmentFamily& family) {
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Segment& si = family[i];
                const Segment& sj = family[j];
                const Segment& sk = family[k];
                if (phi(si.lower(), sj.upper(), sk.lower()).sign() > 0 ||
                    phi(si.upper(), sj.lower(), sk.upper()).sign() < 0) {
                    return Triple{i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

bool condition_ii(const SegmentFamily& family) { return !first_violating_triple(family).has_value(); }

namespace {

// Scans lines through first_end(i) and second_end(j), i < j, keeping the
// first one whose slope wins under `better`.
template <typename FirstEnd, typename SecondEnd, typename Better>
ExtremalLine scan_pairs(const SegmentFamily& family, FirstEnd first_end, SecondEnd second_end,
                        Better better) {
    std::optional<ExtremalLine> best;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            Line candidate = Line::through(first_end(family[i]), second_end(family[j]));
            if (!best || better(candidate.k, best->line.k)) {
                best = ExtremalLine{std::move(candidate), i, j};
            }
        }
    }
    return *best;
}

}  // namespace

ExtremalLine extremal_max_pair(const SegmentFamily& family) {
    return scan_pairs(
        family, [](const Segment& s) { return s.lower(); }, [](const Segment& s) { return s.upper(); },
        [](const Rational& k, const Rational& best) { return k < best; });
}

ExtremalLine extremal_min_pair(const SegmentFamily& family) {
    return scan_pairs(
        family, [](const Segment& s) { return s.upper(); }, [](const Segment& s) { return s.lower(); },
        [](const Rational& k, const Rational& best) { return k > best; });
}

bool exists_transversal(const SegmentFamily& family) {
    return stabs_all(extremal_max_line(family), family);
}

TransversalClass classify(const SegmentFamily& family) {
    Line r = extremal_max_line(family);
    if (!stabs_all(r, family)) {
        return NoTransversal{};
    }
    Line p = extremal_min_line(family);
    if (r == p) {
        return UniqueTransversal{std::move(r)};
    }
    return InfiniteTransversals{std::move(r), std::move(p)};
}

}  // namespace stabline
