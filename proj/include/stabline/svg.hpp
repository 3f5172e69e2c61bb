#pragma once

#include <string>

#include "stabline/io.hpp"

namespace stabline {

enum class RenderMode { Primal, Dual };

/// Static SVG of a report. Primal mode draws the segments, the extremal
/// lines r and p (dashed, class "extremal") and the selectors s1..s3 (class
/// "selector"). Dual mode draws the feasibility polygon (class "feasible"),
/// its vertices (class "vertex") and the selector points (class "mark").
/// Coordinates are decimal approximations for display only.
std::string render_svg(const InstanceDocument& doc, const ResultDocument& result, RenderMode mode);

}  // namespace stabline
