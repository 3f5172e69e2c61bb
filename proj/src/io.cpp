#include "stabline/io.hpp"

#include <sstream>

#include <json.hpp>

namespace stabline {

using ordered_json = nlohmann::ordered_json;

namespace {

Rational parse_field(const nlohmann::json& segment, const char* field, std::size_t index) {
    const auto it = segment.find(field);
    if (it == segment.end()) {
        throw ValidationError(ValidationErrorKind::MissingField,
                              "segment " + std::to_string(index) + " has no \"" + field + "\"",
                              {index});
    }
    if (!it->is_string()) {
        throw ValidationError(ValidationErrorKind::MalformedRational,
                              "segment " + std::to_string(index) + " field \"" + field +
                                  "\" must be a rational string",
                              {index});
    }
    try {
        return Rational::parse(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(ValidationErrorKind::MalformedRational,
                              "segment " + std::to_string(index) + " field \"" + field + "\": " + e.what(),
                              {index});
    }
}

ordered_json line_json(const Line& line) {
    ordered_json out;
    out["k"] = line.k.to_string();
    out["l"] = line.l.to_string();
    return out;
}

std::string format_coefficient(const Rational& k) {
    if (k == Rational(1)) {
        return "";
    }
    if (k == Rational(-1)) {
        return "-";
    }
    return k.is_integer() ? k.to_string() : "(" + k.to_string() + ")";
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(ValidationErrorKind::MalformedDocument, e.what());
    }
    if (!root.is_object()) {
        throw ValidationError(ValidationErrorKind::MalformedDocument, "instance must be a JSON object");
    }

    std::optional<std::string> name;
    if (const auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) {
            throw ValidationError(ValidationErrorKind::MalformedDocument, "\"name\" must be a string");
        }
        name = it->get<std::string>();
    }

    const auto segments = root.find("segments");
    if (segments == root.end()) {
        throw ValidationError(ValidationErrorKind::MissingField, "instance has no \"segments\"");
    }
    if (!segments->is_array()) {
        throw ValidationError(ValidationErrorKind::MalformedDocument, "\"segments\" must be an array");
    }

    std::vector<Segment> raw;
    raw.reserve(segments->size());
    for (std::size_t i = 0; i < segments->size(); ++i) {
        const auto& entry = (*segments)[i];
        if (!entry.is_object()) {
            throw ValidationError(ValidationErrorKind::MalformedDocument,
                                  "segment " + std::to_string(i) + " must be an object", {i});
        }
        raw.push_back({parse_field(entry, "x", i), parse_field(entry, "a", i), parse_field(entry, "b", i)});
    }
    return {std::move(name), validate_family(std::move(raw))};
}

std::string serialize_instance(const InstanceDocument& doc) {
    ordered_json root;
    if (doc.name) {
        root["name"] = *doc.name;
    }
    root["segments"] = ordered_json::array();
    for (const Segment& s : doc.family) {
        ordered_json entry;
        entry["x"] = s.x.to_string();
        entry["a"] = s.a.to_string();
        entry["b"] = s.b.to_string();
        root["segments"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

std::string_view to_string(Classification classification) {
    switch (classification) {
        case Classification::None:
            return "none";
        case Classification::Unique:
            return "unique";
        case Classification::Infinite:
            return "infinite";
    }
    return "unknown";
}

ResultDocument run_report(const InstanceDocument& doc, const ReportOptions& options) {
    const SegmentFamily& family = doc.family;
    ResultDocument result;
    const TransversalClass cls = classify(family);

    if (std::holds_alternative<NoTransversal>(cls)) {
        result.classification = Classification::None;
        result.certificate = first_violating_triple(family);
        return result;
    }

    const DualPolygon polygon = feasibility_polygon(family);
    if (options.polygon) {
        result.polygon = polygon.vertices;
        result.area = polygon_area(polygon);
    }

    if (const auto* unique = std::get_if<UniqueTransversal>(&cls)) {
        result.classification = Classification::Unique;
        result.r = unique->line;
        return result;
    }

    const auto& extremes = std::get<InfiniteTransversals>(cls);
    result.classification = Classification::Infinite;
    if (options.extremal_lines) {
        result.r = extremes.max_slope;
        result.p = extremes.min_slope;
    }
    if (options.s1) {
        result.s1 = Line{midpoint(extremes.max_slope.k, extremes.min_slope.k),
                         midpoint(extremes.max_slope.l, extremes.min_slope.l)};
    }
    if (options.s2) {
        result.s2 = vertex_centroid(polygon);
    }
    if (options.s3) {
        result.s3 = area_centroid(polygon);
    }
    return result;
}

std::string result_to_json(const ResultDocument& result) {
    ordered_json root;
    root["classification"] = std::string(to_string(result.classification));
    const std::pair<const char*, const std::optional<Line>*> lines[] = {
        {"r", &result.r}, {"p", &result.p}, {"s1", &result.s1}, {"s2", &result.s2}, {"s3", &result.s3}};
    for (const auto& [key, line] : lines) {
        if (*line) {
            root[key] = line_json(**line);
        }
    }
    if (result.polygon) {
        root["polygon"] = ordered_json::array();
        for (const DualPoint& v : *result.polygon) {
            root["polygon"].push_back(line_json(v));
        }
    }
    if (result.area) {
        root["area"] = result.area->to_string();
    }
    if (result.certificate) {
        const Triple& t = *result.certificate;
        root["certificate"] = {t.i + 1, t.j + 1, t.k + 1};
    }
    return root.dump(2) + "\n";
}

std::string format_line(const Line& line) {
    std::string out = "y = ";
    if (line.k.is_zero()) {
        return out + line.l.to_string();
    }
    out += format_coefficient(line.k) + "x";
    if (line.l.sign() > 0) {
        out += " + " + line.l.to_string();
    } else if (line.l.sign() < 0) {
        out += " - " + line.l.abs().to_string();
    }
    return out;
}

std::string result_to_text(const ResultDocument& result, const std::optional<std::string>& name) {
    std::ostringstream os;
    if (name) {
        os << "instance: " << *name << "\n";
    }
    os << "classification: " << to_string(result.classification) << "\n";
    const std::pair<const char*, const std::optional<Line>*> lines[] = {
        {"r ", &result.r}, {"p ", &result.p}, {"s1", &result.s1}, {"s2", &result.s2}, {"s3", &result.s3}};
    for (const auto& [label, line] : lines) {
        if (*line) {
            os << label << ": " << format_line(**line) << "\n";
        }
    }
    if (result.polygon) {
        os << "polygon (" << result.polygon->size() << " vertices, k l):\n";
        for (const DualPoint& v : *result.polygon) {
            os << "  " << v.k << " " << v.l << "\n";
        }
    }
    if (result.area) {
        os << "area: " << *result.area << "\n";
    }
    if (result.certificate) {
        const Triple& t = *result.certificate;
        os << "certificate: segments " << t.i + 1 << ", " << t.j + 1 << ", " << t.k + 1
           << " admit no common transversal\n";
    }
    return os.str();
}

}  // namespace stabline
