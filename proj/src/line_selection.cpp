#include "stabline/line_selection.hpp"

#include <algorithm>

namespace stabline {

namespace {

Rational cross(const DualPoint& o, const DualPoint& a, const DualPoint& b) {
    return phi({o.k, o.l}, {a.k, a.l}, {b.k, b.l});
}

// One monotone-chain half: keeps only strict left turns.
void push_chain(std::vector<DualPoint>& chain, std::size_t floor, const DualPoint& p) {
    while (chain.size() >= floor + 2 &&
           cross(chain[chain.size() - 2], chain.back(), p).sign() <= 0) {
        chain.pop_back();
    }
    chain.push_back(p);
}

}  // namespace

std::vector<DualPoint> convex_hull(std::vector<DualPoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) {
        return points;
    }

    std::vector<DualPoint> hull;
    hull.reserve(points.size() + 1);
    for (const DualPoint& p : points) {
        push_chain(hull, 0, p);
    }
    const std::size_t lower_size = hull.size() - 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        push_chain(hull, lower_size, *it);
    }
    hull.pop_back();  // closing point repeats the first one
    return hull;
}

DualPolygon feasibility_polygon(const SegmentFamily& family) {
    const TransversalClass cls = classify(family);
    if (std::holds_alternative<NoTransversal>(cls)) {
        return {};
    }
    if (const auto* unique = std::get_if<UniqueTransversal>(&cls)) {
        return {{unique->line}};
    }
    const auto& extremes = std::get<InfiniteTransversals>(cls);

    std::vector<DualPoint> candidates{extremes.max_slope, extremes.min_slope};
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Line lower = Line::through(family[i].lower(), family[j].lower());
            if (stabs_all(lower, family)) {
                candidates.push_back(std::move(lower));
            }
            Line upper = Line::through(family[i].upper(), family[j].upper());
            if (stabs_all(upper, family)) {
                candidates.push_back(std::move(upper));
            }
        }
    }
    return {convex_hull(std::move(candidates))};
}

Rational polygon_area(const DualPolygon& polygon) {
    const auto& v = polygon.vertices;
    if (v.size() < 3) {
        return Rational(0);
    }
    Rational twice;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const DualPoint& cur = v[i];
        const DualPoint& next = v[(i + 1) % v.size()];
        twice += cur.k * next.l - next.k * cur.l;
    }
    return twice / Rational(2);
}

DualPoint area_centroid(const DualPolygon& polygon) {
    const auto& v = polygon.vertices;
    if (v.empty()) {
        throw NoTransversalError();
    }
    if (v.size() == 1) {
        return v.front();
    }
    const Rational area = polygon_area(polygon);
    if (area.is_zero()) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return {midpoint(lo->k, hi->k), midpoint(lo->l, hi->l)};
    }
    Rational k_sum;
    Rational l_sum;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const DualPoint& cur = v[i];
        const DualPoint& next = v[(i + 1) % v.size()];
        const Rational w = cur.k * next.l - next.k * cur.l;
        k_sum += (cur.k + next.k) * w;
        l_sum += (cur.l + next.l) * w;
    }
    const Rational scale = Rational(6) * area;
    return {k_sum / scale, l_sum / scale};
}

DualPoint vertex_centroid(const DualPolygon& polygon) {
    const auto& v = polygon.vertices;
    if (v.empty()) {
        throw NoTransversalError();
    }
    Rational k_sum;
    Rational l_sum;
    for (const DualPoint& p : v) {
        k_sum += p.k;
        l_sum += p.l;
    }
    const Rational count(static_cast<std::int64_t>(v.size()));
    return {k_sum / count, l_sum / count};
}

Line select_s1(const SegmentFamily& family) {
    const Line r = extremal_max_line(family);
    if (!stabs_all(r, family)) {
        throw NoTransversalError();
    }
    const Line p = extremal_min_line(family);
    return {midpoint(r.k, p.k), midpoint(r.l, p.l)};
}

Line select_s2(const SegmentFamily& family) { return vertex_centroid(feasibility_polygon(family)); }

Line select_s3(const SegmentFamily& family) { return area_centroid(feasibility_polygon(family)); }

SpecialLines select_all(const SegmentFamily& family) {
    const DualPolygon polygon = feasibility_polygon(family);
    if (polygon.empty()) {
        throw NoTransversalError();
    }
    return {select_s1(family), vertex_centroid(polygon), area_centroid(polygon)};
}

}  // namespace stabline
