#include "stabline/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace stabline {

using ordered_json = nlohmann::ordered_json;

bool endpoint_pair_exists(const SegmentFamily& family) {
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (const Point& p : {family[i].lower(), family[i].upper()}) {
                for (const Point& q : {family[j].lower(), family[j].upper()}) {
                    if (stabs_all(Line::through(p, q), family)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

namespace {

// f(k, l) = coeff_k * k + coeff_l * l + offset >= 0
struct HalfPlane {
    Rational coeff_k;
    Rational coeff_l;
    Rational offset;

    [[nodiscard]] Rational eval(const DualPoint& p) const { return coeff_k * p.k + coeff_l * p.l + offset; }
};

std::vector<DualPoint> clip(const std::vector<DualPoint>& polygon, const HalfPlane& h) {
    std::vector<DualPoint> out;
    const std::size_t m = polygon.size();
    for (std::size_t i = 0; i < m; ++i) {
        const DualPoint& p = polygon[i];
        const DualPoint& q = polygon[(i + 1) % m];
        const Rational fp = h.eval(p);
        const Rational fq = h.eval(q);
        if (fp.sign() >= 0) {
            out.push_back(p);
        }
        if (fp.sign() * fq.sign() < 0) {
            const Rational t = fp / (fp - fq);
            out.push_back({p.k + t * (q.k - p.k), p.l + t * (q.l - p.l)});
        }
    }
    return out;
}

Rational turn(const DualPoint& o, const DualPoint& a, const DualPoint& b) {
    return (a.k - o.k) * (b.l - o.l) - (b.k - o.k) * (a.l - o.l);
}

std::vector<DualPoint> strict_vertices(std::vector<DualPoint> ring) {
    std::vector<DualPoint> distinct = ring;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() <= 2) {
        return distinct;
    }
    const bool all_collinear = std::all_of(distinct.begin() + 2, distinct.end(), [&](const DualPoint& p) {
        return turn(distinct[0], distinct[1], p).is_zero();
    });
    if (all_collinear) {
        return {distinct.front(), distinct.back()};
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ring.size() && ring.size() > 2; ++i) {
            const DualPoint& prev = ring[(i + ring.size() - 1) % ring.size()];
            const DualPoint& next = ring[(i + 1) % ring.size()];
            if (ring[i] == next || turn(prev, ring[i], next).is_zero()) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(ring.begin(), ring.end());
    return ring;
}

}  // namespace

std::vector<DualPoint> clipped_region_vertices(const SegmentFamily& family) {
    const Segment& first = family[0];
    const Segment& last = family[family.size() - 1];
    const Rational run = last.x - first.x;
    const Rational k_min = (last.a - first.b) / run - Rational(1);
    const Rational k_max = (last.b - first.a) / run + Rational(1);
    const Rational at_min = k_min * first.x;
    const Rational at_max = k_max * first.x;
    const Rational l_min = first.a - std::max(at_min, at_max) - Rational(1);
    const Rational l_max = first.b - std::min(at_min, at_max) + Rational(1);

    std::vector<DualPoint> polygon{{k_min, l_min}, {k_max, l_min}, {k_max, l_max}, {k_min, l_max}};
    for (const Segment& s : family) {
        polygon = clip(polygon, {s.x, Rational(1), -s.a});   // x*k + l >= a
        polygon = clip(polygon, {-s.x, Rational(-1), s.b});  // x*k + l <= b
        if (polygon.empty()) {
            return {};
        }
    }
    return strict_vertices(std::move(polygon));
}

GridEstimate grid_centroid(const SegmentFamily& family, const std::vector<DualPoint>& region,
                           const Rational& resolution) {
    GridEstimate out;
    if (region.empty()) {
        return out;
    }
    if (resolution.sign() <= 0) {
        throw std::invalid_argument("grid resolution must be positive");
    }
    Rational k_lo = region.front().k;
    Rational k_hi = k_lo;
    Rational l_lo = region.front().l;
    Rational l_hi = l_lo;
    for (const DualPoint& p : region) {
        k_lo = std::min(k_lo, p.k);
        k_hi = std::max(k_hi, p.k);
        l_lo = std::min(l_lo, p.l);
        l_hi = std::max(l_hi, p.l);
    }
    const auto cells = [&](const Rational& span) {
        return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((span / resolution).to_double())));
    };
    const std::int64_t columns = cells(k_hi - k_lo);
    const std::int64_t rows = cells(l_hi - l_lo);
    const Rational half = resolution / Rational(2);

    std::int64_t sum_i = 0;
    std::int64_t sum_j = 0;
    Rational k = k_lo + half;
    std::vector<Rational> lows(family.size());
    std::vector<Rational> highs(family.size());
    for (std::int64_t i = 0; i < columns; ++i, k += resolution) {
        for (std::size_t s = 0; s < family.size(); ++s) {
            const Rational shift = k * family[s].x;
            lows[s] = family[s].a - shift;
            highs[s] = family[s].b - shift;
        }
        Rational l = l_lo + half;
        for (std::int64_t j = 0; j < rows; ++j, l += resolution) {
            ++out.samples;
            bool inside = true;
            for (std::size_t s = 0; s < family.size() && inside; ++s) {
                inside = lows[s] <= l && l <= highs[s];
            }
            if (inside) {
                ++out.hits;
                sum_i += i;
                sum_j += j;
            }
        }
    }
    if (out.hits == 0) {
        return out;
    }
    const double h = resolution.to_double();
    const auto hits = static_cast<double>(out.hits);
    out.area = hits * h * h;
    out.k = k_lo.to_double() + (static_cast<double>(sum_i) / hits + 0.5) * h;
    out.l = l_lo.to_double() + (static_cast<double>(sum_j) / hits + 0.5) * h;
    return out;
}

Rational grid_tolerance(const Rational& resolution) { return Rational(4) * resolution; }

OracleReport run_oracles(const SegmentFamily& family, const Rational& resolution) {
    OracleReport report;
    report.implementation_exists = exists_transversal(family);
    report.oracle_exists = endpoint_pair_exists(family);

    const DualPolygon polygon = feasibility_polygon(family);
    report.polygon = polygon.vertices;
    std::sort(report.polygon.begin(), report.polygon.end());
    report.oracle_polygon = clipped_region_vertices(family);

    if (report.oracle_polygon.size() >= 3 && !polygon.empty()) {
        CentroidCheck check{.exact = area_centroid(polygon),
                            .estimate = grid_centroid(family, report.oracle_polygon, resolution),
                            .tolerance = grid_tolerance(resolution).to_double()};
        check.ok = check.estimate.hits > 0 &&
                   std::abs(check.estimate.k - check.exact.k.to_double()) <= check.tolerance &&
                   std::abs(check.estimate.l - check.exact.l.to_double()) <= check.tolerance;
        report.centroid = check;
    }
    return report;
}

OracleMismatch::OracleMismatch(const std::string& message, SegmentFamily smallest, OracleReport report)
    : std::runtime_error(message), smallest_(std::move(smallest)), report_(std::move(report)) {}

SegmentFamily shrink_failing(const SegmentFamily& family,
                             const std::function<bool(const SegmentFamily&)>& fails) {
    SegmentFamily current = family;
    bool shrunk = true;
    while (shrunk && current.size() > 2) {
        shrunk = false;
        for (std::size_t drop = 0; drop < current.size(); ++drop) {
            std::vector<Segment> rest;
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (i != drop) {
                    rest.push_back(current[i]);
                }
            }
            SegmentFamily candidate = validate_family(std::move(rest));
            if (fails(candidate)) {
                current = std::move(candidate);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

OracleReport oracle_check(const InstanceDocument& doc, const Rational& resolution) {
    OracleReport report = run_oracles(doc.family, resolution);
    if (report.ok()) {
        return report;
    }
    SegmentFamily smallest = shrink_failing(
        doc.family, [&](const SegmentFamily& f) { return !run_oracles(f, resolution).ok(); });
    OracleReport smallest_report = run_oracles(smallest, resolution);

    std::ostringstream msg;
    msg << "oracle mismatch on " << smallest.size() << " segments:";
    for (const Segment& s : smallest) {
        msg << " (" << s.x << ", [" << s.a << ", " << s.b << "])";
    }
    throw OracleMismatch(msg.str(), std::move(smallest), std::move(smallest_report));
}

namespace {

ordered_json points_json(const std::vector<DualPoint>& points) {
    ordered_json out = ordered_json::array();
    for (const DualPoint& p : points) {
        out.push_back({{"k", p.k.to_string()}, {"l", p.l.to_string()}});
    }
    return out;
}

std::string verdict(bool ok) { return ok ? "agree" : "MISMATCH"; }

}  // namespace

std::string oracle_report_to_json(const OracleReport& report) {
    ordered_json root;
    root["existence"] = {{"implementation", report.implementation_exists},
                         {"oracle", report.oracle_exists},
                         {"agree", report.existence_ok()}};
    root["region"] = {{"implementation", points_json(report.polygon)},
                      {"oracle", points_json(report.oracle_polygon)},
                      {"agree", report.region_ok()}};
    if (report.centroid) {
        const CentroidCheck& c = *report.centroid;
        root["centroid"] = {{"exact", {{"k", c.exact.k.to_string()}, {"l", c.exact.l.to_string()}}},
                            {"estimate",
                             {{"k", c.estimate.k},
                              {"l", c.estimate.l},
                              {"area", c.estimate.area},
                              {"samples", c.estimate.samples},
                              {"hits", c.estimate.hits}}},
                            {"tolerance", c.tolerance},
                            {"agree", c.ok}};
    } else {
        root["centroid"] = nullptr;
    }
    root["ok"] = report.ok();
    return root.dump(2) + "\n";
}

std::string oracle_report_to_text(const OracleReport& report) {
    std::ostringstream os;
    os << "existence: implementation=" << (report.implementation_exists ? "yes" : "no")
       << " oracle=" << (report.oracle_exists ? "yes" : "no") << " -> " << verdict(report.existence_ok())
       << "\n";
    os << "region: implementation=" << report.polygon.size() << " vertices, oracle="
       << report.oracle_polygon.size() << " vertices -> " << verdict(report.region_ok()) << "\n";
    if (report.centroid) {
        const CentroidCheck& c = *report.centroid;
        os << "centroid: exact=(" << c.exact.k << ", " << c.exact.l << ") grid=(" << c.estimate.k << ", "
           << c.estimate.l << ") from " << c.estimate.hits << "/" << c.estimate.samples
           << " samples, tolerance " << c.tolerance << " -> " << verdict(c.ok) << "\n";
    } else {
        os << "centroid: skipped (region has no area)\n";
    }
    os << (report.ok() ? "all oracles agree" : "ORACLE MISMATCH") << "\n";
    return os.str();
}

}  // namespace stabline
