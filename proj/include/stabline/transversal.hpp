#pragma once

/**
 * @file transversal.hpp
 * @brief Families of vertical segments and the existence, uniqueness and
 * slope bounds of their common transversals.
 *
 * Segment i has lower endpoint A_i = (x_i, a_i) and upper endpoint
 * B_i = (x_i, b_i). Within a family the abscissas are strictly increasing.
 *
 * Among lines A_iB_j (i < j) the one with the smallest slope is the steepest
 * transversal whenever any transversal exists; symmetrically the B_iA_j line
 * with the largest slope is the flattest one. Existence is equivalent to the
 * steepest candidate stabbing every segment, and to the triple condition
 * phi(A_i, B_j, A_k) <= 0 <= phi(B_i, A_j, B_k) for all i < j < k.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stabline/dual.hpp"
#include "stabline/geometry.hpp"
#include "stabline/rational.hpp"

namespace stabline {

struct Segment {
    Rational x;
    Rational a;  // lower ordinate
    Rational b;  // upper ordinate

    [[nodiscard]] Point lower() const { return {x, a}; }
    [[nodiscard]] Point upper() const { return {x, b}; }
    [[nodiscard]] bool is_point() const { return a == b; }
    [[nodiscard]] bool crossed_by(const Line& m) const;

    friend bool operator==(const Segment&, const Segment&) = default;
};

enum class ValidationErrorKind {
    TooFew,
    DuplicateAbscissa,
    InvertedBounds,
    MalformedRational,
    MissingField,
    MalformedDocument,
};

std::string to_string(ValidationErrorKind kind);

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, const std::string& message,
                    std::vector<std::size_t> indices = {});

    [[nodiscard]] ValidationErrorKind kind() const { return kind_; }
    /// Positions (0-based, in input order) of the offending segments.
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return indices_; }

private:
    ValidationErrorKind kind_;
    std::vector<std::size_t> indices_;
};

/// At least two segments with a <= b, sorted by strictly increasing x.
/// Only validate_family can build one.
class SegmentFamily {
public:
    [[nodiscard]] std::span<const Segment> segments() const { return segments_; }
    [[nodiscard]] std::size_t size() const { return segments_.size(); }
    [[nodiscard]] const Segment& operator[](std::size_t i) const { return segments_[i]; }
    [[nodiscard]] auto begin() const { return segments_.begin(); }
    [[nodiscard]] auto end() const { return segments_.end(); }

    friend bool operator==(const SegmentFamily&, const SegmentFamily&) = default;

private:
    friend SegmentFamily validate_family(std::vector<Segment> raw);
    explicit SegmentFamily(std::vector<Segment> segments) : segments_(std::move(segments)) {}

    std::vector<Segment> segments_;
};

/// Sorts by abscissa and checks the family invariants. Throws ValidationError
/// (InvertedBounds, then TooFew, then DuplicateAbscissa).
SegmentFamily validate_family(std::vector<Segment> raw);

/// Indices (0-based, family order) of a violated triple i < j < k.
struct Triple {
    std::size_t i;
    std::size_t j;
    std::size_t k;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Extremal line together with the endpoints that define it. For the
/// steepest line `from` carries the lower endpoint A_from and `to` the upper
/// endpoint B_to; for the flattest line `from` is B_from and `to` is A_to.
struct ExtremalLine {
    Line line;
    std::size_t from;
    std::size_t to;
};

bool stabs_all(const Line& m, const SegmentFamily& family);

/// Triple condition over all i < j < k; vacuously true for two segments.
bool condition_ii(const SegmentFamily& family);

/// First violated triple in lexicographic order, if any.
std::optional<Triple> first_violating_triple(const SegmentFamily& family);

/// Minimum-slope A_iB_j line (i < j), ties broken by smallest (i, j).
ExtremalLine extremal_max_pair(const SegmentFamily& family);
/// Maximum-slope B_iA_j line (i < j), ties broken by smallest (i, j).
ExtremalLine extremal_min_pair(const SegmentFamily& family);

inline Line extremal_max_line(const SegmentFamily& family) { return extremal_max_pair(family).line; }
inline Line extremal_min_line(const SegmentFamily& family) { return extremal_min_pair(family).line; }

bool exists_transversal(const SegmentFamily& family);

struct NoTransversal {
    friend bool operator==(const NoTransversal&, const NoTransversal&) = default;
};

struct UniqueTransversal {
    Line line;
    friend bool operator==(const UniqueTransversal&, const UniqueTransversal&) = default;
};

struct InfiniteTransversals {
    Line max_slope;  // r
    Line min_slope;  // p
    friend bool operator==(const InfiniteTransversals&, const InfiniteTransversals&) = default;
};

using TransversalClass = std::variant<NoTransversal, UniqueTransversal, InfiniteTransversals>;

TransversalClass classify(const SegmentFamily& family);

}  // namespace stabline
