#include "stabline/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace stabline {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct Frame {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;

    static Frame around(const std::vector<std::pair<double, double>>& pts) {
        Frame f{0.0, 1.0, 0.0, 1.0};
        if (pts.empty()) {
            return f;
        }
        f.x_lo = f.x_hi = pts.front().first;
        f.y_lo = f.y_hi = pts.front().second;
        for (const auto& [x, y] : pts) {
            f.x_lo = std::min(f.x_lo, x);
            f.x_hi = std::max(f.x_hi, x);
            f.y_lo = std::min(f.y_lo, y);
            f.y_hi = std::max(f.y_hi, y);
        }
        const double pad_x = std::max(0.1 * (f.x_hi - f.x_lo), 0.5);
        const double pad_y = std::max(0.1 * (f.y_hi - f.y_lo), 0.5);
        f.x_lo -= pad_x;
        f.x_hi += pad_x;
        f.y_lo -= pad_y;
        f.y_hi += pad_y;
        return f;
    }

    [[nodiscard]] double sx(double x) const { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); }
    [[nodiscard]] double sy(double y) const {
        return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin);
    }
};

void header(std::ostringstream& os, const std::string& title) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight)
       << "\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" overflow=\"hidden\">\n";
    os << "<title>" << escape(title) << "</title>\n";
    os << "<style>\n"
          ".segment{stroke:#1f4e9c;stroke-width:3}\n"
          ".endpoint{fill:#fff;stroke:#1f4e9c;stroke-width:1.5}\n"
          ".extremal{stroke:#c0392b;stroke-width:1.5;stroke-dasharray:6 4}\n"
          ".selector{stroke-width:1.5}\n"
          ".s1{stroke:#e67e22;fill:#e67e22}\n"
          ".s2{stroke:#27ae60;fill:#27ae60}\n"
          ".s3{stroke:#8e44ad;fill:#8e44ad}\n"
          ".feasible{fill:#cfe3f7;stroke:#1f4e9c;stroke-width:1.5}\n"
          ".vertex{fill:#1f4e9c}\n"
          ".axis{stroke:#999;stroke-width:1}\n"
          "text{font-family:sans-serif;font-size:12px}\n"
          "</style>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
       << "\" fill=\"#fff\"/>\n";
}

void axes(std::ostringstream& os, const Frame& f) {
    if (f.y_lo <= 0.0 && 0.0 <= f.y_hi) {
        os << "<line class=\"axis\" x1=\"" << num(f.sx(f.x_lo)) << "\" y1=\"" << num(f.sy(0.0)) << "\" x2=\""
           << num(f.sx(f.x_hi)) << "\" y2=\"" << num(f.sy(0.0)) << "\"/>\n";
    }
    if (f.x_lo <= 0.0 && 0.0 <= f.x_hi) {
        os << "<line class=\"axis\" x1=\"" << num(f.sx(0.0)) << "\" y1=\"" << num(f.sy(f.y_lo)) << "\" x2=\""
           << num(f.sx(0.0)) << "\" y2=\"" << num(f.sy(f.y_hi)) << "\"/>\n";
    }
}

void primal_line(std::ostringstream& os, const Frame& f, const Line& line, const std::string& cls,
                 const std::string& label) {
    const double k = line.k.to_double();
    const double l = line.l.to_double();
    os << "<line class=\"" << cls << "\" x1=\"" << num(f.sx(f.x_lo)) << "\" y1=\"" << num(f.sy(k * f.x_lo + l))
       << "\" x2=\"" << num(f.sx(f.x_hi)) << "\" y2=\"" << num(f.sy(k * f.x_hi + l)) << "\"><title>" << label
       << ": " << format_line(line) << "</title></line>\n";
}

std::string render_primal(const InstanceDocument& doc, const ResultDocument& result) {
    std::vector<std::pair<double, double>> pts;
    for (const Segment& s : doc.family) {
        pts.emplace_back(s.x.to_double(), s.a.to_double());
        pts.emplace_back(s.x.to_double(), s.b.to_double());
    }
    const Frame f = Frame::around(pts);

    std::ostringstream os;
    header(os, doc.name.value_or("segments") + " (primal)");
    axes(os, f);
    for (const Segment& s : doc.family) {
        const double x = f.sx(s.x.to_double());
        const double ya = f.sy(s.a.to_double());
        const double yb = f.sy(s.b.to_double());
        os << "<line class=\"segment\" x1=\"" << num(x) << "\" y1=\"" << num(ya) << "\" x2=\"" << num(x)
           << "\" y2=\"" << num(yb) << "\"/>\n";
        os << "<circle class=\"endpoint\" cx=\"" << num(x) << "\" cy=\"" << num(ya) << "\" r=\"3\"/>\n";
        os << "<circle class=\"endpoint\" cx=\"" << num(x) << "\" cy=\"" << num(yb) << "\" r=\"3\"/>\n";
    }
    if (result.r) {
        primal_line(os, f, *result.r, "extremal r", "r");
    }
    if (result.p) {
        primal_line(os, f, *result.p, "extremal p", "p");
    }
    const std::pair<const char*, const std::optional<Line>*> selectors[] = {
        {"s1", &result.s1}, {"s2", &result.s2}, {"s3", &result.s3}};
    for (const auto& [name, line] : selectors) {
        if (*line) {
            primal_line(os, f, **line, std::string("selector ") + name, name);
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_dual(const InstanceDocument& doc, const ResultDocument& result) {
    std::vector<std::pair<double, double>> pts;
    const std::vector<DualPoint> empty;
    const std::vector<DualPoint>& polygon = result.polygon ? *result.polygon : empty;
    for (const DualPoint& v : polygon) {
        pts.emplace_back(v.k.to_double(), v.l.to_double());
    }
    const Frame f = Frame::around(pts);

    std::ostringstream os;
    header(os, doc.name.value_or("segments") + " (dual)");
    axes(os, f);
    if (polygon.empty()) {
        os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\">no transversal</text>\n";
    } else if (polygon.size() >= 2) {
        os << "<polygon class=\"feasible\" points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            os << (i ? " " : "") << num(f.sx(polygon[i].k.to_double())) << ","
               << num(f.sy(polygon[i].l.to_double()));
        }
        os << "\"/>\n";
    }
    for (const DualPoint& v : polygon) {
        os << "<circle class=\"vertex\" cx=\"" << num(f.sx(v.k.to_double())) << "\" cy=\""
           << num(f.sy(v.l.to_double())) << "\" r=\"3\"><title>(" << v.k << ", " << v.l
           << ")</title></circle>\n";
    }
    const std::pair<const char*, const std::optional<Line>*> marks[] = {
        {"s1", &result.s1}, {"s2", &result.s2}, {"s3", &result.s3}};
    for (const auto& [name, point] : marks) {
        if (*point) {
            const double cx = f.sx((*point)->k.to_double());
            const double cy = f.sy((*point)->l.to_double());
            os << "<circle class=\"mark " << name << "\" cx=\"" << num(cx) << "\" cy=\"" << num(cy)
               << "\" r=\"4\"><title>" << name << ": (" << (*point)->k << ", " << (*point)->l
               << ")</title></circle>\n";
            os << "<text class=\"" << name << "\" x=\"" << num(cx + 6) << "\" y=\"" << num(cy - 6) << "\">" << name
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const InstanceDocument& doc, const ResultDocument& result, RenderMode mode) {
    return mode == RenderMode::Primal ? render_primal(doc, result) : render_dual(doc, result);
}

}  // namespace stabline
