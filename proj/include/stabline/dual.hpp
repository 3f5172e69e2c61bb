#pragma once

/**
 * @file dual.hpp
 * @brief Point-line duality between the primal plane and (k, l)-space.
 *
 * A non-vertical primal line y = kx + l is the dual point (k, l). The lines
 * through a fixed primal point form a non-vertical dual line, the lines of a
 * fixed slope form a vertical dual line, and the lines crossing a vertical
 * segment form a strip bounded by two parallel dual lines.
 */

#include <array>
#include <compare>
#include <ostream>

#include "stabline/geometry.hpp"
#include "stabline/rational.hpp"

namespace stabline {

/// The primal line y = k*x + l, equivalently the dual point (k, l).
/// Vertical primal lines have no representation.
struct Line {
    Rational k;
    Rational l;

    /// The line through two points with distinct abscissas. Throws
    /// std::invalid_argument when p.x == q.x.
    static Line through(const Point& p, const Point& q);

    [[nodiscard]] Rational value_at(const Rational& x) const { return k * x + l; }
    [[nodiscard]] bool passes_through(const Point& p) const { return value_at(p.x) == p.y; }

    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

/// Writes the dual coordinates as "(k, l)".
std::ostream& operator<<(std::ostream& os, const Line& m);

using DualPoint = Line;

/// A non-vertical line of the dual plane, l = slope * k + intercept.
struct DualLine {
    Rational slope;
    Rational intercept;

    [[nodiscard]] bool contains(const DualPoint& m) const { return m.l == slope * m.k + intercept; }

    friend bool operator==(const DualLine&, const DualLine&) = default;
};

/// The vertical dual line k = slope: every primal line with that slope.
struct VerticalDualLine {
    Rational k;

    [[nodiscard]] bool contains(const DualPoint& m) const { return m.k == k; }

    friend bool operator==(const VerticalDualLine&, const VerticalDualLine&) = default;
};

/// All dual points (k, l) with low - k*x0 <= l <= high - k*x0, i.e. every
/// line crossing the vertical segment x = x0, low <= y <= high.
class DualStrip {
public:
    /// Throws std::invalid_argument when low > high.
    DualStrip(Rational x0, Rational low, Rational high);

    [[nodiscard]] const Rational& x0() const { return x0_; }
    [[nodiscard]] const Rational& low() const { return low_; }
    [[nodiscard]] const Rational& high() const { return high_; }

    [[nodiscard]] bool contains(const DualPoint& m) const;

    [[nodiscard]] DualLine lower_boundary() const { return {-x0_, low_}; }
    [[nodiscard]] DualLine upper_boundary() const { return {-x0_, high_}; }

private:
    Rational x0_;
    Rational low_;
    Rational high_;
};

/// Dual of the two-segment transversal region. Corners are the lines joining
/// an endpoint of the first segment (A lower, B upper) with an endpoint of
/// the second (C lower, D upper).
struct Parallelogram {
    DualPoint ac;
    DualPoint ad;
    DualPoint bc;
    DualPoint bd;
    /// The line through both segment midpoints; equals the vertex average.
    DualPoint centroid;

    [[nodiscard]] std::array<DualPoint, 4> vertices() const { return {ac, ad, bc, bd}; }
};

/// Lines through p: slope -p.x, intercept p.y.
DualLine pencil_dual(const Point& p);

/// Lines of slope c.
VerticalDualLine constant_slope_pencil_dual(const Rational& c);

DualStrip segment_strip(const Rational& x0, const Rational& a, const Rational& b);

/// Throws std::invalid_argument when both strips share an abscissa.
Parallelogram two_segment_parallelogram(const DualStrip& first, const DualStrip& second);

}  // namespace stabline
