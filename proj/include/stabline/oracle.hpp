#pragma once

/**
 * @file oracle.hpp
 * @brief Independent checks of the transversal and selection results.
 *
 * None of these routines share code with the extremal-line scan or the
 * candidate-vertex hull they verify:
 *  - existence: try every line through endpoints of two distinct segments;
 *  - region: clip a bounding box by the 2n half-planes of the strips;
 *  - centroid: count rational grid samples inside all strips.
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabline/io.hpp"
#include "stabline/line_selection.hpp"
#include "stabline/transversal.hpp"

namespace stabline {

/// True iff some line through endpoints of two distinct segments stabs the
/// whole family.
bool endpoint_pair_exists(const SegmentFamily& family);

/// Vertices of the transversal region obtained by half-plane clipping,
/// sorted by (k, l). Empty when there is no transversal, one point for a
/// unique one, the two extremes for a degenerate segment region.
std::vector<DualPoint> clipped_region_vertices(const SegmentFamily& family);

struct GridEstimate {
    std::size_t samples = 0;
    std::size_t hits = 0;
    double area = 0.0;
    double k = 0.0;
    double l = 0.0;
};

/// Samples cell centres of a grid with spacing `resolution` over the
/// bounding box of `region`, testing each sample against every strip.
GridEstimate grid_centroid(const SegmentFamily& family, const std::vector<DualPoint>& region,
                           const Rational& resolution);

/// Tolerance the grid estimate of the centroid must meet: 4 * resolution.
Rational grid_tolerance(const Rational& resolution);

struct CentroidCheck {
    DualPoint exact;
    GridEstimate estimate;
    double tolerance = 0.0;
    bool ok = false;
};

struct OracleReport {
    bool implementation_exists = false;
    bool oracle_exists = false;
    std::vector<DualPoint> polygon;         // implementation, sorted
    std::vector<DualPoint> oracle_polygon;  // clipping oracle, sorted
    /// Absent when the region has zero area.
    std::optional<CentroidCheck> centroid;

    [[nodiscard]] bool existence_ok() const { return implementation_exists == oracle_exists; }
    [[nodiscard]] bool region_ok() const { return polygon == oracle_polygon; }
    [[nodiscard]] bool centroid_ok() const { return !centroid || centroid->ok; }
    [[nodiscard]] bool ok() const { return existence_ok() && region_ok() && centroid_ok(); }
};

/// Runs all three oracles on one family without throwing on mismatch.
OracleReport run_oracles(const SegmentFamily& family, const Rational& resolution);

class OracleMismatch : public std::runtime_error {
public:
    OracleMismatch(const std::string& message, SegmentFamily smallest, OracleReport report);

    [[nodiscard]] const SegmentFamily& smallest() const { return smallest_; }
    [[nodiscard]] const OracleReport& report() const { return report_; }

private:
    SegmentFamily smallest_;
    OracleReport report_;
};

/// Greedily drops segments while `fails` keeps holding, down to two.
SegmentFamily shrink_failing(const SegmentFamily& family,
                             const std::function<bool(const SegmentFamily&)>& fails);

/// Runs the oracles; on any mismatch shrinks the instance and throws
/// OracleMismatch carrying the smallest failing family.
OracleReport oracle_check(const InstanceDocument& doc, const Rational& resolution);

std::string oracle_report_to_text(const OracleReport& report);
std::string oracle_report_to_json(const OracleReport& report);

}  // namespace stabline
