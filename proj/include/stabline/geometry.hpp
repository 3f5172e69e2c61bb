#pragma once

#include <string_view>

#include "stabline/rational.hpp"

namespace stabline {

/// A point of the primal plane.
struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Vector2 {
    Rational dx;
    Rational dy;
};

enum class Orientation { CounterClockwise, Collinear, Clockwise };

std::string_view to_string(Orientation orientation);

/// Rotation by an angle whose cosine and sine are both rational, i.e. a
/// rational point on the unit circle such as (3/5, 4/5).
class RationalRotation {
public:
    /// Throws std::invalid_argument unless cos^2 + sin^2 == 1 exactly.
    RationalRotation(Rational cos, Rational sin);

    /// Rotation sending (1, 0) to the direction of the Pythagorean triple
    /// (a, b, c): cos = (a^2 - b^2) / (a^2 + b^2), sin = 2ab / (a^2 + b^2).
    /// Any (a, b) != (0, 0) yields a valid rotation.
    static RationalRotation from_parameters(const Rational& a, const Rational& b);

    [[nodiscard]] const Rational& cos() const { return cos_; }
    [[nodiscard]] const Rational& sin() const { return sin_; }

private:
    Rational cos_;
    Rational sin_;
};

/// Orientation determinant det[[1,1,1],[xa,xb,xc],[ya,yb,yc]], evaluated as
/// (xb - xa)(yc - ya) - (xc - xa)(yb - ya). Positive for a counter-clockwise
/// turn, zero when the three points are collinear.
Rational phi(const Point& a, const Point& b, const Point& c);

Orientation orientation(const Point& a, const Point& b, const Point& c);

Point translate(const Point& p, const Vector2& v);

Point rotate(const Point& p, const RationalRotation& r);

}  // namespace stabline
