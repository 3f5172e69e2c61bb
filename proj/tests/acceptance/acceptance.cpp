// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stabline/dual.hpp"
#include "stabline/geometry.hpp"
#include "stabline/line_selection.hpp"
#include "stabline/oracle.hpp"
#include "stabline/transversal.hpp"
#include "support/fixtures.hpp"

namespace stabline {
namespace {

using testing::line;
using testing::R;

constexpr int kSuiteSize = 10000;
constexpr int kPropertyTrials = 10000;
constexpr int kParallelogramTrials = 1000;
constexpr int kSamplesPerInstance = 1000;
const Rational kGridResolution = Rational(1, 400);
const Rational kGridTolerance = Rational(1, 100);

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (failures_ < 5) {
                detail_ << (failures_ ? "; " : "") << what;
            }
            ++failures_;
        }
    }

    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        expect(got == want, os.str());
    }

    [[nodiscard]] Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) {
            return {true, summary};
        }
        return {false, std::to_string(failures_) + " failure(s): " + detail_.str()};
    }

private:
    int failures_ = 0;
    std::ostringstream detail_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<DualPoint> vertex_set(const DualPolygon& polygon) {
    return {polygon.vertices.begin(), polygon.vertices.end()};
}

std::string set_text(const std::set<DualPoint>& s) {
    std::ostringstream os;
    for (const auto& p : s) {
        os << p;
    }
    return os.str();
}

// The random families shared by criteria 4, 7, 8 and 10.
const std::vector<SegmentFamily>& suite() {
    static const std::vector<SegmentFamily> families = [] {
        testing::RationalSource source(20240601);
        std::vector<SegmentFamily> out;
        out.reserve(kSuiteSize);
        for (int i = 0; i < kSuiteSize; ++i) {
            out.push_back(source.family(source.index(2, 7)));
        }
        return out;
    }();
    return families;
}

Outcome figure5_golden() {
    const auto start = std::chrono::steady_clock::now();
    const SegmentFamily fam = testing::figure5();
    Checker c;
    c.expect_eq(extremal_max_line(fam), line("1", "1"), "r");
    c.expect_eq(extremal_min_line(fam), line("-1/6", "43/6"), "p");
    c.expect_eq(select_s1(fam), line("5/12", "49/12"), "s1");
    const DualPolygon polygon = feasibility_polygon(fam);
    const std::set<DualPoint> want{line("1/2", "5/2"), line("-1/6", "43/6"), line("1/3", "20/3"), line("1/2", "11/2"),
                                   line("1", "1")};
    c.expect(vertex_set(polygon) == want && polygon.size() == 5, "polygon " + set_text(vertex_set(polygon)));
    c.expect_eq(select_s2(fam), line("13/30", "137/30"), "s2");
    c.expect_eq(polygon_area(polygon), R("2"), "area");
    c.expect_eq(select_s3(fam), line("5/12", "107/24"), "s3");
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
    return c.outcome("exact r, p, s1, 5-vertex polygon, s2, area 2, s3 in " + std::to_string(elapsed) + " s");
}

Outcome figure6_golden() {
    const SegmentFamily fam = testing::figure6();
    Checker c;
    c.expect_eq(extremal_max_line(fam), line("4/5", "14/5"), "r");
    c.expect_eq(extremal_min_line(fam), line("-1/3", "22/3"), "p");
    c.expect_eq(select_s1(fam), line("7/30", "76/15"), "s1");
    c.expect_eq(select_s2(fam), line("13/40", "223/40"), "s2");
    c.expect_eq(polygon_area(feasibility_polygon(fam)), R("71/60"), "area");
    const Line s3 = select_s3(fam);
    c.expect_eq(s3, line("39731/127800", "11873/2130"), "s3");
    if (s3 != line("39731/127800", "11873/2130")) {
        const GridEstimate est = grid_centroid(fam, clipped_region_vertices(fam), kGridResolution);
        std::ostringstream os;
        os << "grid centroid k at 1/400 is " << est.k << ", |k - 39731/127800| = "
           << std::abs(est.k - R("39731/127800").to_double()) << ", |k - " << s3.k
           << "| = " << std::abs(est.k - s3.k.to_double());
        c.expect(false, os.str());
    }
    return c.outcome("exact r, p, s1, s2, area 71/60, s3");
}

Outcome figure13_golden() {
    const SegmentFamily fam = testing::figure13();
    Checker c;
    const DualPolygon polygon = feasibility_polygon(fam);
    const std::set<DualPoint> want{line("1", "0"),   line("1/2", "1"), line("0", "3"), line("-1", "12"),
                                   line("0", "11"),  line("1/2", "8"), line("1", "4"), line("3/2", "-1/2")};
    c.expect(vertex_set(polygon) == want && polygon.size() == 8, "polygon " + set_text(vertex_set(polygon)));
    c.expect_eq(select_s1(fam), line("1/4", "23/4"), "s1");
    c.expect_eq(select_s2(fam), line("7/16", "77/16"), "s2");
    c.expect_eq(select_s3(fam), line("11/46", "267/46"), "s3");
    return c.outcome("8-vertex octagon, exact s1, s2, s3");
}

Outcome theorem_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    Checker c;
    int feasible = 0;
    int index = 0;
    for (const SegmentFamily& fam : suite()) {
        const bool oracle = endpoint_pair_exists(fam);
        feasible += oracle ? 1 : 0;
        const bool by_r = stabs_all(extremal_max_line(fam), fam);
        const bool by_p = stabs_all(extremal_min_line(fam), fam);
        bool agree = by_r == oracle && by_p == oracle;
        if (fam.size() >= 3) {
            agree = agree && condition_ii(fam) == oracle;
        }
        c.expect(agree, "instance " + std::to_string(index));
        ++index;
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
    return c.outcome(std::to_string(kSuiteSize) + " families (" + std::to_string(feasible) +
                     " with transversals), zero mismatches in " + std::to_string(elapsed) + " s");
}

Outcome phi_properties() {
    testing::RationalSource source(5151);
    Checker c;
    for (int i = 0; i < kPropertyTrials; ++i) {
        const Point a = source.point();
        const Point b = source.point();
        const Point cc = source.point();
        const Rational base = phi(a, b, cc);

        const Vector2 v{source.next(), source.next()};
        c.expect(phi(translate(a, v), translate(b, v), translate(cc, v)) == base, "translation trial " + std::to_string(i));

        Rational s = source.next();
        Rational t = source.next();
        if (s.is_zero() && t.is_zero()) {
            s = Rational(1);
        }
        const RationalRotation rot = RationalRotation::from_parameters(s, t);
        c.expect(phi(rotate(a, rot), rotate(b, rot), rotate(cc, rot)) == base, "rotation trial " + std::to_string(i));

        // Monotonicity in the vertical coordinate of the first point.
        Point left = source.point();
        Point right = source.point();
        if (left.x == right.x) {
            right.x += Rational(1);
        }
        if (right.x < left.x) {
            std::swap(left, right);
        }
        const Point d{a.x, i % 10 == 0 ? a.y : source.next()};
        const Rational diff = phi(a, left, right) - phi(d, left, right);
        c.expect(diff == (a.y - d.y) * (right.x - left.x), "identity trial " + std::to_string(i));
        const auto order = a.y <=> d.y;
        c.expect(order == (phi(a, left, right) <=> phi(d, left, right)) &&
                     order == (phi(left, d, right) <=> phi(left, a, right)) &&
                     order == (phi(left, right, a) <=> phi(left, right, d)),
                 "equivalence trial " + std::to_string(i));
        c.expect(diff.is_zero() == (a == d), "equality clause trial " + std::to_string(i));
    }
    return c.outcome(std::to_string(kPropertyTrials) + " trials each: translation, Pythagorean rotation, monotone identity");
}

Outcome parallelogram_centroid() {
    testing::RationalSource source(6161);
    Checker c;
    for (int i = 0; i < kParallelogramTrials; ++i) {
        const SegmentFamily fam = source.family(2);
        const Segment& s = fam[0];
        const Segment& u = fam[1];
        const Parallelogram par = two_segment_parallelogram(segment_strip(s.x, s.a, s.b), segment_strip(u.x, u.a, u.b));
        Rational k_sum;
        Rational l_sum;
        for (const DualPoint& v : par.vertices()) {
            k_sum += v.k;
            l_sum += v.l;
        }
        const Line mean{k_sum / Rational(4), l_sum / Rational(4)};
        const Line midline = Line::through({s.x, midpoint(s.a, s.b)}, {u.x, midpoint(u.a, u.b)});
        c.expect(mean == midline, "trial " + std::to_string(i));
    }
    return c.outcome(std::to_string(kParallelogramTrials) + " two-segment families, vertex mean == midpoint line");
}

Outcome slope_extremality() {
    testing::RationalSource source(7171);
    Checker c;
    int instances = 0;
    long samples = 0;
    int index = 0;
    for (const SegmentFamily& fam : suite()) {
        ++index;
        const DualPolygon polygon = feasibility_polygon(fam);
        if (polygon.empty()) {
            continue;
        }
        ++instances;
        const Line r = extremal_max_line(fam);
        const Line p = extremal_min_line(fam);
        c.expect(stabs_all(r, fam) && stabs_all(p, fam), "extremes stab, instance " + std::to_string(index));
        const auto& v = polygon.vertices;
        const auto [lowest, highest] =
            std::minmax_element(v.begin(), v.end(), [](const Line& a, const Line& b) { return a.k < b.k; });
        c.expect(lowest->k == p.k && highest->k == r.k, "bounds not attained, instance " + std::to_string(index));
        std::vector<std::int64_t> weights(v.size());
        for (int s = 0; s < kSamplesPerInstance; ++s) {
            std::int64_t total = 0;
            for (auto& w : weights) {
                w = source.integer(0, 16);
                total += w;
            }
            if (total == 0) {
                weights[0] = total = 1;
            }
            Rational k;
            Rational l;
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (weights[j] != 0) {
                    k += Rational(weights[j]) * v[j].k;
                    l += Rational(weights[j]) * v[j].l;
                }
            }
            const Line m{k / Rational(total), l / Rational(total)};
            ++samples;
            c.expect(stabs_all(m, fam), "sample is not a transversal, instance " + std::to_string(index));
            c.expect(p.k <= m.k && m.k <= r.k, "slope out of bounds, instance " + std::to_string(index));
        }
    }
    return c.outcome(std::to_string(instances) + " instances, " + std::to_string(samples) +
                     " sampled transversals within [k_p, k_r]; r and p attain the bounds");
}

Outcome region_equivalence() {
    Checker c;
    int index = 0;
    int nonempty = 0;
    for (const SegmentFamily& fam : suite()) {
        const std::set<DualPoint> implementation = vertex_set(feasibility_polygon(fam));
        const std::vector<DualPoint> clipped = clipped_region_vertices(fam);
        const std::set<DualPoint> oracle(clipped.begin(), clipped.end());
        nonempty += oracle.empty() ? 0 : 1;
        c.expect(implementation == oracle, "instance " + std::to_string(index) + ": " + set_text(implementation) +
                                               " vs " + set_text(oracle));
        ++index;
    }
    return c.outcome(std::to_string(kSuiteSize) + " families (" + std::to_string(nonempty) +
                     " non-empty regions), vertex sets identical");
}

Outcome grid_centroid_oracle() {
    Checker c;
    std::ostringstream summary;
    c.expect(grid_tolerance(kGridResolution) == kGridTolerance, "tolerance is not 1/100 at resolution 1/400");
    const std::pair<const char*, SegmentFamily> figures[] = {
        {"fig5", testing::figure5()}, {"fig6", testing::figure6()}, {"fig13", testing::figure13()}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& [name, fam] = figures[i];
        const Line s3 = select_s3(fam);
        const GridEstimate est = grid_centroid(fam, clipped_region_vertices(fam), kGridResolution);
        const double dk = std::abs(est.k - s3.k.to_double());
        const double dl = std::abs(est.l - s3.l.to_double());
        const double tol = kGridTolerance.to_double();
        c.expect(dk <= tol && dl <= tol, std::string(name) + " grid error (" + std::to_string(dk) + ", " +
                                             std::to_string(dl) + ")");
        summary << name << " err=(" << dk << ", " << dl << ") ";
    }
    return c.outcome(summary.str() + "tolerance 1/100 at resolution 1/400");
}

Outcome selector_feasibility() {
    Checker c;
    int instances = 0;
    int index = 0;
    for (const SegmentFamily& fam : suite()) {
        ++index;
        if (!exists_transversal(fam)) {
            continue;
        }
        ++instances;
        const SpecialLines s = select_all(fam);
        c.expect(stabs_all(s.s1, fam), "s1, instance " + std::to_string(index));
        c.expect(stabs_all(s.s2, fam), "s2, instance " + std::to_string(index));
        c.expect(stabs_all(s.s3, fam), "s3, instance " + std::to_string(index));
    }
    return c.outcome(std::to_string(instances) + " instances with transversals, s1/s2/s3 all stab");
}

}  // namespace
}  // namespace stabline

int main() {
    using namespace stabline;
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1  Figure 5 golden", figure5_golden},
        {"2  Figure 6 golden", figure6_golden},
        {"3  Figure 13 golden", figure13_golden},
        {"4  existence equivalence suite", theorem_equivalence},
        {"5  orientation determinant properties", phi_properties},
        {"6  two-segment centroid midline", parallelogram_centroid},
        {"7  slope extremality", slope_extremality},
        {"8  region oracle equivalence", region_equivalence},
        {"9  continuous-centroid grid oracle", grid_centroid_oracle},
        {"10 selector feasibility", selector_feasibility},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome outcome = check();
        std::printf("[%s] %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str(),
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        std::fflush(stdout);
        failed += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
