#pragma once

/**
 * @file line_selection.hpp
 * @brief The dual feasibility polygon of a segment family and three ways to
 * pick one representative transversal from it.
 *
 *  - s1: dual midpoint of the steepest and flattest transversals.
 *  - s2: vertex average (discrete centroid) of the polygon.
 *  - s3: area centroid (continuous centroid) of the polygon.
 */

#include <stdexcept>
#include <vector>

#include "stabline/dual.hpp"
#include "stabline/transversal.hpp"

namespace stabline {

/// Convex polygon in (k, l)-space with vertices in counter-clockwise order,
/// starting from the lexicographically smallest (k, l). Holds 0 vertices
/// when no transversal exists, 1 for a unique transversal and 2 when the
/// region is a segment.
struct DualPolygon {
    std::vector<DualPoint> vertices;

    [[nodiscard]] bool empty() const { return vertices.empty(); }
    [[nodiscard]] std::size_t size() const { return vertices.size(); }

    friend bool operator==(const DualPolygon&, const DualPolygon&) = default;
};

struct SpecialLines {
    Line s1;
    Line s2;
    Line s3;
};

class NoTransversalError : public std::runtime_error {
public:
    NoTransversalError() : std::runtime_error("the segment family has no common transversal") {}
};

/// Strictly convex counter-clockwise hull (monotone chain). Duplicates and
/// points on hull edges are dropped; collinear input yields its two extreme
/// points.
std::vector<DualPoint> convex_hull(std::vector<DualPoint> points);

DualPolygon feasibility_polygon(const SegmentFamily& family);

/// Shoelace area; zero for fewer than three vertices.
Rational polygon_area(const DualPolygon& polygon);

/// Area centroid. Degenerate polygons fall back to the single vertex or the
/// midpoint of the two extreme vertices. Throws NoTransversalError on an
/// empty polygon.
DualPoint area_centroid(const DualPolygon& polygon);

/// Arithmetic mean of the vertices. Throws NoTransversalError on an empty
/// polygon.
DualPoint vertex_centroid(const DualPolygon& polygon);

Line select_s1(const SegmentFamily& family);
Line select_s2(const SegmentFamily& family);
Line select_s3(const SegmentFamily& family);

/// All three at once, sharing one polygon construction.
SpecialLines select_all(const SegmentFamily& family);

}  // namespace stabline
