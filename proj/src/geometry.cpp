#include "stabline/geometry.hpp"

#include <stdexcept>

namespace stabline {

std::string_view to_string(Orientation orientation) {
    switch (orientation) {
        case Orientation::CounterClockwise:
            return "counter-clockwise";
        case Orientation::Collinear:
            return "collinear";
        case Orientation::Clockwise:
            return "clockwise";
    }
    return "unknown";
}

RationalRotation::RationalRotation(Rational cos, Rational sin)
    : cos_(std::move(cos)), sin_(std::move(sin)) {
    if (cos_ * cos_ + sin_ * sin_ != Rational(1)) {
        throw std::invalid_argument("rotation (" + cos_.to_string() + ", " + sin_.to_string() +
                                    ") is not on the unit circle");
    }
}

RationalRotation RationalRotation::from_parameters(const Rational& a, const Rational& b) {
    const Rational norm = a * a + b * b;
    if (norm.is_zero()) {
        throw std::invalid_argument("rotation parameters must not both be zero");
    }
    return RationalRotation((a * a - b * b) / norm, Rational(2) * a * b / norm);
}

Rational phi(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const int s = phi(a, b, c).sign();
    if (s > 0) {
        return Orientation::CounterClockwise;
    }
    return s < 0 ? Orientation::Clockwise : Orientation::Collinear;
}

Point translate(const Point& p, const Vector2& v) { return {p.x + v.dx, p.y + v.dy}; }

Point rotate(const Point& p, const RationalRotation& r) {
    return {r.cos() * p.x - r.sin() * p.y, r.sin() * p.x + r.cos() * p.y};
}

}  // namespace stabline
