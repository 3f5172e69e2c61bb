#include "stabline/dual.hpp"

#include <ostream>
#include <stdexcept>

namespace stabline {

Line Line::through(const Point& p, const Point& q) {
    if (p.x == q.x) {
        throw std::invalid_argument("no non-vertical line through points sharing abscissa " +
                                    p.x.to_string());
    }
    const Rational k = (q.y - p.y) / (q.x - p.x);
    return {k, p.y - k * p.x};
}

DualStrip::DualStrip(Rational x0, Rational low, Rational high)
    : x0_(std::move(x0)), low_(std::move(low)), high_(std::move(high)) {
    if (low_ > high_) {
        throw std::invalid_argument("segment bounds inverted: " + low_.to_string() + " > " +
                                    high_.to_string());
    }
}

bool DualStrip::contains(const DualPoint& m) const {
    const Rational y = m.value_at(x0_);
    return low_ <= y && y <= high_;
}

DualLine pencil_dual(const Point& p) { return {-p.x, p.y}; }

VerticalDualLine constant_slope_pencil_dual(const Rational& c) { return {c}; }

DualStrip segment_strip(const Rational& x0, const Rational& a, const Rational& b) {
    return DualStrip(x0, a, b);
}

Parallelogram two_segment_parallelogram(const DualStrip& first, const DualStrip& second) {
    // Endpoints A(a, b), B(a, c) and C(d, e), D(d, f).
    const Rational& a = first.x0();
    const Rational& b = first.low();
    const Rational& c = first.high();
    const Rational& d = second.x0();
    const Rational& e = second.low();
    const Rational& f = second.high();
    if (a == d) {
        throw std::invalid_argument("parallelogram needs distinct abscissas, both are " +
                                    a.to_string());
    }
    const Rational run = a - d;
    Parallelogram out{
        .ac = {(b - e) / run, (a * e - b * d) / run},
        .ad = {(b - f) / run, (a * f - b * d) / run},
        .bc = {(c - e) / run, (a * e - c * d) / run},
        .bd = {(c - f) / run, (a * f - c * d) / run},
        .centroid = {(b + c - e - f) / (Rational(2) * run),
                     (a * e + a * f - b * d - c * d) / (Rational(2) * run)},
    };
    return out;
}

std::ostream& operator<<(std::ostream& os, const Line& m) { return os << "(" << m.k << ", " << m.l << ")"; }

}  // namespace stabline
