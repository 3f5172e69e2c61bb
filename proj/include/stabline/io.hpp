#pragma once

/**
 * @file io.hpp
 * @brief Instance and result documents.
 *
 * Both are JSON text with every rational written as a string ("n" or
 * "n/d", d > 0). Instance:
 *
 *     {"name": "...", "segments": [{"x": "1", "a": "1", "b": "7"}, ...]}
 *
 * Result fields appear in a fixed order: classification, r, p, s1, s2, s3,
 * polygon, area, certificate. Lines are {"k": ..., "l": ...}; the
 * certificate is a 1-based index triple.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabline/line_selection.hpp"
#include "stabline/transversal.hpp"

namespace stabline {

struct InstanceDocument {
    std::optional<std::string> name;
    SegmentFamily family;

    friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// Throws ValidationError for malformed JSON, missing fields, malformed
/// rationals and every family invariant violation.
InstanceDocument parse_instance(std::string_view text);

/// Canonical form: segments sorted by abscissa, rationals in lowest terms.
std::string serialize_instance(const InstanceDocument& doc);

enum class Classification { None, Unique, Infinite };

std::string_view to_string(Classification classification);

struct ReportOptions {
    bool extremal_lines = true;  // r and p
    bool s1 = true;
    bool s2 = true;
    bool s3 = true;
    bool polygon = true;  // polygon and area
};

struct ResultDocument {
    Classification classification = Classification::None;
    std::optional<Line> r;
    std::optional<Line> p;
    std::optional<Line> s1;
    std::optional<Line> s2;
    std::optional<Line> s3;
    std::optional<std::vector<DualPoint>> polygon;
    std::optional<Rational> area;
    /// 0-based in memory, written 1-based.
    std::optional<Triple> certificate;
};

/// A unique transversal is reported once, as r; a family without
/// transversals only carries its certificate.
ResultDocument run_report(const InstanceDocument& doc, const ReportOptions& options = {});

std::string result_to_json(const ResultDocument& result);
std::string result_to_text(const ResultDocument& result, const std::optional<std::string>& name = {});

/// "y = (5/12)x + 49/12" style rendering of a line.
std::string format_line(const Line& line);

}  // namespace stabline
