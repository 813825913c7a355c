#include "bimoebius/json_io.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bimoebius/errors.hpp"

namespace bimo {

namespace {

Bicomplex coefficient(const Json& spec, const char* name) {
    if (!spec.contains(name)) {
        throw SpecError(std::string("transform spec is missing \"") + name + "\"");
    }
    const Json& member = spec.at(name);
    if (!member.is_string()) {
        throw SpecError(std::string("transform coefficient \"") + name +
                        "\" must be a literal string");
    }
    const ExtendedBicomplex value = parse_literal(member.get<std::string>());
    if (!value.is_finite()) {
        throw SpecError(std::string("transform coefficient \"") + name + "\" must be finite");
    }
    return value.finite_value();
}

std::string point_literal(const ExtendedComplex& p1, const ExtendedComplex& p2) {
    return format_literal(ExtendedBicomplex(p1, p2));
}

// Sort key per idempotent component: infinities after all finite values,
// finite values by (re, im).
std::array<double, 3> component_key(const ExtendedComplex& c) {
    if (c.is_infinity()) return {1.0, 0.0, 0.0};
    return {0.0, c.value().real(), c.value().imag()};
}

Json component_solution_to_json(const ComponentSolution& sol) {
    if (sol.all_points) return Json{{"all_points", true}};
    Json roots = Json::array();
    for (const ComponentRoot& root : sol.roots) {
        roots.push_back(Json{
            {"point", root.point.is_infinity() ? "inf" : format_complex(root.point.value())},
            {"multiplicity", root.multiplicity},
        });
    }
    return Json{{"roots", std::move(roots)}};
}

}  // namespace

MobiusTransform transform_from_json(const Json& spec, double default_eps) {
    if (!spec.is_object()) throw SpecError("transform spec must be a JSON object");
    double eps = default_eps;
    if (spec.contains("eps")) {
        if (!spec.at("eps").is_number()) throw SpecError("\"eps\" must be a number");
        eps = spec.at("eps").get<double>();
        if (!(eps >= 0.0)) throw SpecError("\"eps\" must be non-negative");
    }
    return MobiusTransform::make(coefficient(spec, "a"), coefficient(spec, "b"),
                                 coefficient(spec, "c"), coefficient(spec, "d"), eps);
}

Json transform_to_json(const MobiusTransform& s) {
    return Json{
        {"a", format_literal(s.a())}, {"b", format_literal(s.b())},
        {"c", format_literal(s.c())}, {"d", format_literal(s.d())},
        {"det", format_literal(s.det())},
    };
}

std::vector<FixedPoint> sorted_fixed_points(const FixedPointSet& set) {
    std::vector<FixedPoint> points = set.enumerated;
    std::sort(points.begin(), points.end(), [](const FixedPoint& a, const FixedPoint& b) {
        const auto ka1 = component_key(a.point.p1());
        const auto kb1 = component_key(b.point.p1());
        if (ka1 != kb1) return ka1 < kb1;
        return component_key(a.point.p2()) < component_key(b.point.p2());
    });
    return points;
}

Json fixed_point_set_to_json(const FixedPointSet& set) {
    const bool infinite = set.sol1.all_points || set.sol2.all_points;
    Json out;
    if (infinite) {
        out["count"] = "infinite";
    } else {
        out["count"] = set.enumerated.size();
    }
    Json points = Json::array();
    for (const FixedPoint& fp : sorted_fixed_points(set)) {
        points.push_back(Json{
            {"point", point_literal(fp.point.p1(), fp.point.p2())},
            {"multiplicity", fp.multiplicity},
        });
    }
    out["points"] = std::move(points);
    out["is_identity"] = set.is_identity;
    out["component_solutions"] =
        Json::array({component_solution_to_json(set.sol1), component_solution_to_json(set.sol2)});
    return out;
}

}  // namespace bimo
