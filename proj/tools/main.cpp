#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bimoebius/fixed_points.hpp"
#include "bimoebius/json_io.hpp"
#include "bimoebius/literal.hpp"

// Exit codes: 0 success, 1 domain error, 2 usage/parse error.  Every run
// writes exactly one JSON document to stdout (orbit: one per line), human
// diagnostics go to stderr.

namespace {

using bimo::Json;

// Thrown by command handlers that need a custom error payload.
struct CommandFailure {
    Json payload;
    std::string diagnostic;
    int code = 1;
};

Json error_payload(const std::string& code, const std::string& message) {
    return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

struct ErrorClass {
    const char* code;
    int exit_code;
};

ErrorClass classify_error(const bimo::Error& e) {
    if (dynamic_cast<const bimo::ParseError*>(&e)) return {"ParseError", 2};
    if (dynamic_cast<const bimo::OverflowError*>(&e)) return {"OverflowError", 2};
    if (dynamic_cast<const bimo::SpecError*>(&e)) return {"SpecError", 2};
    if (dynamic_cast<const bimo::DegenerateDeterminant*>(&e)) return {"DegenerateDeterminant", 1};
    if (dynamic_cast<const bimo::SingularOperand*>(&e)) return {"SingularOperand", 1};
    if (dynamic_cast<const bimo::CNotInvertible*>(&e)) return {"CNotInvertible", 1};
    if (dynamic_cast<const bimo::CartesianInfinity*>(&e)) return {"CartesianInfinity", 1};
    if (dynamic_cast<const bimo::NonFiniteValue*>(&e)) return {"NonFiniteValue", 1};
    return {"Error", 1};
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

// A transform option value is inline JSON or @file.
Json read_spec_json(const std::string& opt) {
    std::string text = opt;
    if (!opt.empty() && opt.front() == '@') {
        const std::string path = opt.substr(1);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw bimo::SpecError("cannot open transform spec file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return Json::parse(text);
}

bimo::MobiusTransform load_transform(const std::string& opt, double eps) {
    return bimo::transform_from_json(read_spec_json(opt), eps);
}

void cmd_eval(const std::string& tspec, const std::string& point, double eps) {
    const bimo::MobiusTransform s = load_transform(tspec, eps);
    const bimo::ExtendedBicomplex w = bimo::parse_literal(point);
    const bimo::ExtendedBicomplex r = bimo::eval(s, w);
    emit(Json{{"result", bimo::format_literal(r)},
              {"class", bimo::to_string(bimo::classify(r, eps))}});
}

void cmd_compose(const std::vector<std::string>& tspecs, double eps) {
    if (tspecs.size() < 2)
        throw bimo::SpecError("compose needs at least two --transform values");
    bimo::MobiusTransform acc = load_transform(tspecs.front(), eps);
    for (std::size_t k = 1; k < tspecs.size(); ++k)
        acc = bimo::compose(acc, load_transform(tspecs[k], eps));
    emit(bimo::transform_to_json(acc));
}

void cmd_invert(const std::string& tspec, double eps) {
    emit(bimo::transform_to_json(bimo::invert_transform(load_transform(tspec, eps))));
}

void cmd_fixed_points(const std::string& tspec, double eps) {
    emit(bimo::fixed_point_set_to_json(bimo::fixed_points(load_transform(tspec, eps))));
}

void cmd_classify(const std::string& point, double eps) {
    const bimo::ExtendedBicomplex w = bimo::parse_literal(point);
    emit(Json{{"class", bimo::to_string(bimo::classify(w, eps))}});
}

void cmd_orbit(const std::string& tspec, const std::string& start, int n, double tol,
               double eps) {
    const bimo::MobiusTransform s = load_transform(tspec, eps);
    const bimo::OrbitTrace trace = bimo::orbit(s, bimo::parse_literal(start), n, tol);
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        emit(Json{{"k", k},
                  {"point", bimo::format_literal(trace.points[k])},
                  {"class", bimo::to_string(bimo::classify(trace.points[k], eps))}});
    }
    emit(Json{{"converged", trace.converged}, {"steps", trace.steps()}});
}

void cmd_decompose(const std::string& tspec, double eps) {
    const bimo::MobiusTransform s = load_transform(tspec, eps);
    const bimo::GeneratorDecomposition dec = bimo::decompose_generators(s);
    Json generators = Json::array();
    for (const bimo::MobiusTransform& g : dec.generators)
        generators.push_back(bimo::transform_to_json(g));
    if (dec.affine) {
        // c = 0: the four-generator form divides by c.  Report the domain
        // error but hand back the two-generator affine factorization.
        Json payload = error_payload(
            "CNotInvertible", "c = 0: transform is affine, no inversion generator exists");
        payload["error"]["affine_generators"] = std::move(generators);
        throw CommandFailure{std::move(payload),
                             "c = 0: returning the affine dilation+translation pair", 1};
    }
    emit(generators);
}

void cmd_parse(const std::string& point, const std::string& style, double eps) {
    const bimo::ExtendedBicomplex w = bimo::parse_literal(point);
    const bimo::LiteralStyle st = style == "cartesian" ? bimo::LiteralStyle::Cartesian
                                                       : bimo::LiteralStyle::Idempotent;
    Json out{{"normalized", bimo::format_literal(w, st)},
             {"class", bimo::to_string(bimo::classify(w, eps))}};
    if (w.is_finite())
        out["subalgebra"] = bimo::to_string(bimo::subalgebra_of(w.finite_value()));
    emit(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex Moebius transformations on the extended plane"};
    app.require_subcommand(1);

    std::string tspec, point, start, style = "idempotent";
    std::vector<std::string> tspecs;
    double eps = bimo::kSingularEps;
    double tol = 1e-9;
    int n = 64;

    const char* tspec_help = "transform spec: inline JSON {\"a\",\"b\",\"c\",\"d\"[,\"eps\"]} or @file";

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate S(w) at a point");
    c_eval->add_option("-t,--transform", tspec, tspec_help)->required();
    c_eval->add_option("--point", point, "point literal")->required();
    c_eval->add_option("--eps", eps, "singularity tolerance");
    c_eval->callback([&] { cmd_eval(tspec, point, eps); });

    CLI::App* c_compose = app.add_subcommand("compose", "left-fold composition of transforms");
    c_compose->add_option("-t,--transform", tspecs, tspec_help)->required();
    c_compose->add_option("--eps", eps, "singularity tolerance");
    c_compose->callback([&] { cmd_compose(tspecs, eps); });

    CLI::App* c_invert = app.add_subcommand("invert", "group inverse of a transform");
    c_invert->add_option("-t,--transform", tspec, tspec_help)->required();
    c_invert->add_option("--eps", eps, "singularity tolerance");
    c_invert->callback([&] { cmd_invert(tspec, eps); });

    CLI::App* c_fixed = app.add_subcommand("fixed-points", "fixed points of a transform");
    c_fixed->add_option("-t,--transform", tspec, tspec_help)->required();
    c_fixed->add_option("--eps", eps, "singularity tolerance");
    c_fixed->callback([&] { cmd_fixed_points(tspec, eps); });

    CLI::App* c_classify = app.add_subcommand("classify", "taxonomy class of a point");
    c_classify->add_option("--point", point, "point literal")->required();
    c_classify->add_option("--eps", eps, "singularity tolerance");
    c_classify->callback([&] { cmd_classify(point, eps); });

    CLI::App* c_orbit = app.add_subcommand("orbit", "iterate S from a start point");
    c_orbit->add_option("-t,--transform", tspec, tspec_help)->required();
    c_orbit->add_option("--start", start, "start point literal")->required();
    c_orbit->add_option("-n,--steps", n, "maximum number of steps")
        ->check(CLI::PositiveNumber);
    c_orbit->add_option("--tol", tol, "convergence tolerance");
    c_orbit->add_option("--eps", eps, "singularity tolerance");
    c_orbit->callback([&] { cmd_orbit(tspec, start, n, tol, eps); });

    CLI::App* c_decompose =
        app.add_subcommand("decompose", "translation/inversion/dilation generators");
    c_decompose->add_option("-t,--transform", tspec, tspec_help)->required();
    c_decompose->add_option("--eps", eps, "singularity tolerance");
    c_decompose->callback([&] { cmd_decompose(tspec, eps); });

    CLI::App* c_parse = app.add_subcommand("parse", "normalize a literal");
    c_parse->add_option("--point", point, "point literal")->required();
    c_parse->add_option("--style", style, "output style")
        ->check(CLI::IsMember({"cartesian", "idempotent"}));
    c_parse->add_option("--eps", eps, "singularity tolerance");
    c_parse->callback([&] { cmd_parse(point, style, eps); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit(error_payload("UsageError", e.what()));
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CommandFailure& f) {
        emit(f.payload);
        std::cerr << f.diagnostic << "\n";
        return f.code;
    } catch (const bimo::ParseError& e) {
        Json payload = error_payload("ParseError", e.what());
        payload["error"]["offset"] = e.offset;
        payload["error"]["expected"] = e.expected;
        emit(payload);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bimo::Error& e) {
        const ErrorClass ec = classify_error(e);
        emit(error_payload(ec.code, e.what()));
        std::cerr << e.what() << "\n";
        return ec.exit_code;
    } catch (const Json::exception& e) {
        emit(error_payload("SpecError", e.what()));
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
