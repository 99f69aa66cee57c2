// Command-line front end for the rational cubic fractal spline library:
// bound reports, fitting, sampling, certified evaluation, shape checks,
// convergence runs, derivative estimation and SVG plots.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fif/analysis.hpp"
#include "fif/estimate.hpp"
#include "fif/eval.hpp"
#include "fif/model.hpp"
#include "fif/shape.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 ok, 2 validation, 3 infeasible shape, 4 I/O.
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

struct CliError {
    int code;
    std::string message;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Dataset {
    std::vector<double> x, y, d;
    bool d_estimated = false;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& tok, std::size_t row) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw CliError{kExitValidation, "row " + std::to_string(row) +
                                            ": non-numeric field '" + tok + "'"};
    }
    if (used != tok.size())
        throw CliError{kExitValidation, "row " + std::to_string(row) +
                                            ": non-numeric field '" + tok + "'"};
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(trim(tok));
    if (!line.empty() && line.back() == ',')
        out.push_back("");
    return out;
}

Dataset parse_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CliError{kExitIo, "cannot open input file '" + path + "'"};

    Dataset ds;
    bool has_d = false;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw CliError{kExitValidation, std::string("JSON parse error: ") + e.what()};
        }
        if (!doc.is_array() || doc.empty())
            throw CliError{kExitValidation, "JSON input must be a nonempty array of records"};
        has_d = doc.front().contains("d");
        std::size_t row = 0;
        for (const auto& rec : doc) {
            ++row;
            if (!rec.is_object() || !rec.contains("x") || !rec.contains("y") ||
                rec.contains("d") != has_d)
                throw CliError{kExitValidation,
                               "row " + std::to_string(row) + ": expected {x, y" +
                                   (has_d ? ", d}" : "}")};
            ds.x.push_back(rec.at("x").get<double>());
            ds.y.push_back(rec.at("y").get<double>());
            if (has_d)
                ds.d.push_back(rec.at("d").get<double>());
        }
    } else {
        std::string line;
        if (!std::getline(in, line))
            throw CliError{kExitValidation, "empty input file"};
        auto header = split_csv(line);
        for (auto& t : header)
            std::transform(t.begin(), t.end(), t.begin(),
                           [](unsigned char c) { return char(std::tolower(c)); });
        if (header.size() < 2 || header[0] != "x" || header[1] != "y" ||
            (header.size() == 3 && header[2] != "d") || header.size() > 3)
            throw CliError{kExitValidation, "CSV header must be x,y or x,y,d"};
        has_d = header.size() == 3;
        std::size_t row = 1;
        while (std::getline(in, line)) {
            ++row;
            if (trim(line).empty())
                continue;
            const auto toks = split_csv(line);
            if (toks.size() != header.size())
                throw CliError{kExitValidation, "row " + std::to_string(row) +
                                                    ": expected " +
                                                    std::to_string(header.size()) +
                                                    " fields, got " +
                                                    std::to_string(toks.size())};
            ds.x.push_back(parse_number(toks[0], row));
            ds.y.push_back(parse_number(toks[1], row));
            if (has_d)
                ds.d.push_back(parse_number(toks[2], row));
        }
    }

    if (ds.x.size() < 2)
        throw CliError{kExitValidation, "need at least 2 data points"};
    for (std::size_t i = 1; i < ds.x.size(); ++i) {
        if (ds.x[i] == ds.x[i - 1])
            throw CliError{kExitValidation, "row " + std::to_string(i + 2) +
                                                ": duplicate x = " + fmt(ds.x[i])};
        if (ds.x[i] < ds.x[i - 1])
            throw CliError{kExitValidation, "row " + std::to_string(i + 2) +
                                                ": x values must be increasing"};
    }
    if (!has_d) {
        try {
            ds.d = fif::arithmetic_mean_derivatives(ds.x, ds.y);
        } catch (const std::exception& e) {
            throw CliError{kExitValidation, e.what()};
        }
        ds.d_estimated = true;
    }
    return ds;
}

fif::ShapeClass parse_shape(const std::string& name) {
    if (name == "increasing" || name == "monotone-increasing")
        return fif::ShapeClass::MonotoneIncreasing;
    if (name == "decreasing" || name == "monotone-decreasing")
        return fif::ShapeClass::MonotoneDecreasing;
    if (name == "convex")
        return fif::ShapeClass::Convex;
    if (name == "concave")
        return fif::ShapeClass::Concave;
    if (name == "positive")
        return fif::ShapeClass::Positive;
    if (name == "convex-increasing")
        return fif::ShapeClass::ConvexMonotoneIncreasing;
    if (name == "none" || name == "unconstrained")
        return fif::ShapeClass::Unconstrained;
    throw CliError{kExitValidation, "unknown shape class '" + name + "'"};
}

struct JobConfig {
    std::string input;
    std::string shape_name;
    double t = 0.5;
    std::vector<double> alpha;
    std::vector<double> r;
    int depth = 6;
    double tol = 1e-10;
    std::string out;
    bool json_output = false;
};

std::ostream& open_out(const JobConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty())
        return std::cout;
    file.open(cfg.out);
    if (!file)
        throw CliError{kExitIo, "cannot open output file '" + cfg.out + "'"};
    return file;
}

// Parameter resolution policy:
//   alpha and r given        -> use as is
//   shape given              -> automatic selection (r overridable)
//   alpha given, shape given -> class's optimal r rule for that alpha
//   alpha given, no shape    -> r = 3
//   nothing                  -> classical (alpha = 0, r = 3)
fif::FifParameters resolve_parameters(const fif::HermiteData& data, const JobConfig& cfg,
                                      std::optional<fif::ShapeClass> shape) {
    const std::size_t m = data.interval_count();
    auto sized = [&](const std::vector<double>& v, const char* what) {
        if (v.size() != m)
            throw CliError{kExitValidation, std::string("expected ") + std::to_string(m) +
                                                " " + what + " values, got " +
                                                std::to_string(v.size())};
        return v;
    };

    fif::FifParameters params;
    try {
    if (!cfg.alpha.empty()) {
        params.alpha = sized(cfg.alpha, "--alpha");
        if (!cfg.r.empty()) {
            params.r = sized(cfg.r, "--r");
        } else if (shape && *shape != fif::ShapeClass::Unconstrained) {
            switch (*shape) {
            case fif::ShapeClass::MonotoneIncreasing:
                params.r = fif::monotone_r_bound(data, params.alpha).optimal;
                break;
            case fif::ShapeClass::MonotoneDecreasing:
                params.r = fif::monotone_r_bound(data.negated(), params.alpha).optimal;
                break;
            case fif::ShapeClass::Convex:
            case fif::ShapeClass::ConvexMonotoneIncreasing:
                params.r = fif::convex_r_bound(data, params.alpha).optimal;
                break;
            case fif::ShapeClass::Concave:
                params.r = fif::convex_r_bound(data.negated(), params.alpha).optimal;
                break;
            case fif::ShapeClass::Positive: {
                params.r = fif::positive_r_lower(data, params.alpha);
                for (double& ri : params.r)
                    ri = std::max(3.0, ri + 1.0);
                break;
            }
            default:
                break;
            }
        } else {
            params.r.assign(m, 3.0);
        }
    } else if (shape) {
        if (!cfg.r.empty())
            sized(cfg.r, "--r");
        params = fif::select_parameters(data, *shape, cfg.t,
                                        cfg.r.empty() ? nullptr : &cfg.r);
    } else {
        params.alpha.assign(m, 0.0);
        params.r = cfg.r.empty() ? std::vector<double>(m, 3.0) : sized(cfg.r, "--r");
    }
    } catch (const std::invalid_argument& e) {
        throw CliError{shape ? kExitInfeasible : kExitValidation, e.what()};
    }

    const auto report = shape ? fif::validate_shape_parameters(data, params, *shape)
                              : fif::validate_parameters(data, params);
    if (!report.ok())
        throw CliError{shape ? kExitInfeasible : kExitValidation, report.to_string()};
    return params;
}

json params_json(const fif::FifParameters& params) {
    return json{{"alpha", params.alpha}, {"r", params.r}, {"kappa", params.kappa}};
}

int cmd_bounds(const JobConfig& cfg) {
    const Dataset ds = parse_dataset(cfg.input);
    const fif::HermiteData data(ds.x, ds.y, ds.d);
    if (cfg.shape_name.empty())
        throw CliError{kExitValidation, "bounds requires --shape"};
    const fif::ShapeClass shape = parse_shape(cfg.shape_name);
    const fif::BoundsReport report = fif::alpha_bounds(data, shape);

    if (!report.feasible()) {
        std::string msg = "shape constraints infeasible:";
        for (const auto& v : report.necessary_violations)
            msg += "\n  " + v;
        throw CliError{kExitInfeasible, msg};
    }

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json j{{"shape", fif::to_string(shape)}, {"intervals", json::array()}};
        for (const auto& iv : report.intervals) {
            json terms = json::array();
            for (const auto& term : iv.alpha_terms)
                terms.push_back({{"name", term.name},
                                 {"value", term.value ? json(*term.value) : json()}});
            j["intervals"].push_back({{"alpha_max", iv.alpha_max},
                                      {"alpha_max_data", iv.alpha_max_data},
                                      {"forced_zero", iv.forced_zero},
                                      {"terms", terms}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "shape: " << fif::to_string(shape) << "\n";
        os << "admissible scaling factors per interval: alpha in [0, bound)\n";
        for (std::size_t i = 0; i < report.intervals.size(); ++i) {
            const auto& iv = report.intervals[i];
            os << "interval " << i + 1 << ": bound " << fmt(iv.alpha_max)
               << "  data-only bound " << fmt(iv.alpha_max_data);
            if (iv.forced_zero)
                os << "  (degenerate: alpha forced to 0)";
            os << "\n";
            for (const auto& term : iv.alpha_terms)
                os << "    " << term.name << ": "
                   << (term.value ? fmt(*term.value) : std::string("unbounded")) << "\n";
            if (iv.alpha_max != iv.alpha_max_data)
                os << "    note: contraction requirement tightens the data-only bound "
                   << fmt(iv.alpha_max_data) << " to " << fmt(iv.alpha_max) << "\n";
        }
    }
    return 0;
}

int cmd_fit(const JobConfig& cfg) {
    const Dataset ds = parse_dataset(cfg.input);
    const fif::HermiteData data(ds.x, ds.y, ds.d);
    std::optional<fif::ShapeClass> shape;
    if (!cfg.shape_name.empty())
        shape = parse_shape(cfg.shape_name);
    const fif::FifParameters params = resolve_parameters(data, cfg, shape);
    const fif::RationalCubicFif fif = fif::build_fif(data, params);

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json j{{"knots", data.x()},
               {"values", data.y()},
               {"slopes", data.d()},
               {"slopes_estimated", ds.d_estimated},
               {"shape", shape ? fif::to_string(*shape) : "none"},
               {"parameters", params_json(params)},
               {"valid", true},
               {"coefficients", json::array()}};
        for (std::size_t i = 0; i < fif.interval_count(); ++i) {
            const auto& c = fif.value_coeffs(i);
            j["coefficients"].push_back({{"A", c[0]}, {"B", c[1]}, {"C", c[2]}, {"D", c[3]}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "model: rational cubic fractal spline, " << data.interval_count()
           << " intervals\n";
        if (ds.d_estimated)
            os << "slopes: estimated (three-point arithmetic mean)\n";
        os << "shape: " << (shape ? fif::to_string(*shape) : "none") << "\n";
        os << "validation: ok\n";
        os << "interval        alpha              r                A  B  C  D\n";
        for (std::size_t i = 0; i < fif.interval_count(); ++i) {
            const auto& c = fif.value_coeffs(i);
            os << i + 1 << "  " << fmt(params.alpha[i]) << "  " << fmt(params.r[i])
               << "  " << fmt(c[0]) << "  " << fmt(c[1]) << "  " << fmt(c[2]) << "  "
               << fmt(c[3]) << "\n";
        }
    }
    return 0;
}

int cmd_sample(const JobConfig& cfg) {
    const Dataset ds = parse_dataset(cfg.input);
    const fif::HermiteData data(ds.x, ds.y, ds.d);
    std::optional<fif::ShapeClass> shape;
    if (!cfg.shape_name.empty())
        shape = parse_shape(cfg.shape_name);
    const fif::FifParameters params = resolve_parameters(data, cfg, shape);
    const fif::RationalCubicFif fif = fif::build_fif(data, params);
    const fif::CurveSample sample = fif::sample_attractor(fif, cfg.depth);

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json pts = json::array();
        for (const auto& p : sample.points)
            pts.push_back({{"x", p.x}, {"S", p.value}, {"S1", p.slope}});
        os << json{{"depth", sample.depth}, {"points", pts}}.dump(2) << "\n";
    } else {
        os << "x,S,S1,depth\n";
        for (const auto& p : sample.points)
            os << fmt(p.x) << ',' << fmt(p.value) << ',' << fmt(p.slope) << ','
               << sample.depth << "\n";
    }
    return 0;
}

int cmd_eval(const JobConfig& cfg, double query, bool derivative) {
    const Dataset ds = parse_dataset(cfg.input);
    const fif::HermiteData data(ds.x, ds.y, ds.d);
    std::optional<fif::ShapeClass> shape;
    if (!cfg.shape_name.empty())
        shape = parse_shape(cfg.shape_name);
    const fif::FifParameters params = resolve_parameters(data, cfg, shape);
    const fif::RationalCubicFif fif = fif::build_fif(data, params);

    const fif::EvalSettings settings{cfg.tol, 64};
    fif::EvalResult value, slope;
    try {
        value = fif::eval_at(fif, query, settings);
        if (derivative)
            slope = fif::eval_derivative_at(fif, query, settings);
    } catch (const std::domain_error& e) {
        throw CliError{kExitValidation, e.what()};
    }

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json j{{"x", query},
               {"S", value.value},
               {"error_bound", value.error_bound},
               {"depth", value.depth}};
        if (derivative) {
            j["S1"] = slope.value;
            j["S1_error_bound"] = slope.error_bound;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "S(" << fmt(query) << ") = " << fmt(value.value) << "  +/- "
           << fmt(value.error_bound) << "  (depth " << value.depth << ")\n";
        if (derivative)
            os << "S'(" << fmt(query) << ") = " << fmt(slope.value) << "  +/- "
               << fmt(slope.error_bound) << "  (depth " << slope.depth << ")\n";
    }
    return 0;
}

int cmd_check(const JobConfig& cfg) {
    const Dataset ds = parse_dataset(cfg.input);
    const fif::HermiteData data(ds.x, ds.y, ds.d);
    if (cfg.shape_name.empty())
        throw CliError{kExitValidation, "check requires --shape"};
    const fif::ShapeClass shape = parse_shape(cfg.shape_name);
    const fif::FifParameters params = resolve_parameters(data, cfg, shape);
    const fif::RationalCubicFif fif = fif::build_fif(data, params);
    const fif::ShapeCheck check = fif::verify_shape(fif, shape, cfg.depth);

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json j{{"shape", fif::to_string(shape)},
               {"depth", cfg.depth},
               {"pass", check.pass}};
        if (!check.pass) {
            j["witness"] = {check.witness_x0, check.witness_x1};
            j["detail"] = check.detail;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "shape: " << fif::to_string(shape) << "  depth: " << cfg.depth << "\n";
        os << "verdict: " << (check.pass ? "pass" : "FAIL") << "\n";
        if (!check.pass)
            os << "witness: x in [" << fmt(check.witness_x0) << ", "
               << fmt(check.witness_x1) << "]  " << check.detail << "\n";
    }
    return check.pass ? 0 : kExitValidation;
}

int cmd_converge(const JobConfig& cfg, int regime, std::vector<int> knots,
                 double fixed_r) {
    if (regime < 1 || regime > 3)
        throw CliError{kExitValidation, "--regime must be 1, 2 or 3"};
    if (knots.empty())
        knots = {9, 17, 33, 65};

    const auto f = [](double x) { return std::sin(x); };
    const auto df = [](double x) { return std::cos(x); };
    const fif::AlphaRule arule = regime == 1   ? fif::AlphaRule::Quadratic
                                 : regime == 2 ? fif::AlphaRule::Cubic
                                               : fif::AlphaRule::Quartic;
    const fif::TensionRule rrule =
        regime == 2 ? fif::TensionRule::ThreePlusH : fif::TensionRule::Fixed;

    const fif::DerivativeNorms norms = fif::sample_derivative_norms(f, 0.0, 1.0);
    fif::ConvergenceResult result;
    try {
        result = fif::convergence_order(f, df, 0.0, 1.0, knots, arule, rrule, fixed_r,
                                        &norms);
    } catch (const std::exception& e) {
        throw CliError{kExitValidation, e.what()};
    }

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        os << json{{"generator", "sin"},
                   {"regime", regime},
                   {"knots", knots},
                   {"h", result.mesh_h},
                   {"error", result.errors},
                   {"bound", result.bound_totals},
                   {"order", result.order},
                   {"exact", result.exact}}
                  .dump(2)
           << "\n";
    } else {
        os << "generator: sin on [0,1], regime " << regime << "\n";
        os << "N,h,error,bound\n";
        for (std::size_t k = 0; k < result.mesh_h.size(); ++k)
            os << knots[k] << ',' << fmt(result.mesh_h[k]) << ','
               << fmt(result.errors[k]) << ',' << fmt(result.bound_totals[k]) << "\n";
        os << "estimated order: " << fmt(result.order) << "\n";
    }
    return 0;
}

int cmd_estimate_derivs(const JobConfig& cfg) {
    const Dataset ds = parse_dataset(cfg.input);
    std::vector<double> d;
    try {
        d = fif::arithmetic_mean_derivatives(ds.x, ds.y);
    } catch (const std::exception& e) {
        throw CliError{kExitValidation, e.what()};
    }

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    if (cfg.json_output) {
        json pts = json::array();
        for (std::size_t i = 0; i < ds.x.size(); ++i)
            pts.push_back({{"x", ds.x[i]}, {"y", ds.y[i]}, {"d", d[i]}});
        os << pts.dump(2) << "\n";
    } else {
        os << "x,y,d\n";
        for (std::size_t i = 0; i < ds.x.size(); ++i)
            os << fmt(ds.x[i]) << ',' << fmt(ds.y[i]) << ',' << fmt(d[i]) << "\n";
    }
    return 0;
}

// Reads a curve as the first two numeric columns of a CSV (either a dataset
// x,y[,d] or a sample x,S,S1,depth).
int cmd_plot(const JobConfig& cfg, int width, int height) {
    std::ifstream in(cfg.input);
    if (!in)
        throw CliError{kExitIo, "cannot open input file '" + cfg.input + "'"};
    std::string line;
    if (!std::getline(in, line))
        throw CliError{kExitValidation, "empty input file"};
    std::vector<double> xs, ys;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty())
            continue;
        const auto toks = split_csv(line);
        if (toks.size() < 2)
            throw CliError{kExitValidation,
                           "row " + std::to_string(row) + ": expected at least 2 fields"};
        xs.push_back(parse_number(toks[0], row));
        ys.push_back(parse_number(toks[1], row));
    }
    if (xs.size() < 2)
        throw CliError{kExitValidation, "need at least 2 points to plot"};

    const auto [xlo_it, xhi_it] = std::minmax_element(xs.begin(), xs.end());
    const auto [ylo_it, yhi_it] = std::minmax_element(ys.begin(), ys.end());
    const double xlo = *xlo_it, xhi = *xhi_it;
    double ylo = *ylo_it, yhi = *yhi_it;
    if (yhi == ylo) {
        ylo -= 0.5;
        yhi += 0.5;
    }
    const double mx = 0.05 * (xhi - xlo), my = 0.05 * (yhi - ylo);
    const double w = double(width), h = double(height);
    const auto px = [&](double x) {
        return (x - (xlo - mx)) / ((xhi - xlo) + 2 * mx) * w;
    };
    const auto py = [&](double y) {
        return h - (y - (ylo - my)) / ((yhi - ylo) + 2 * my) * h;
    };

    std::ofstream file;
    std::ostream& os = open_out(cfg, file);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    os << "<line x1=\"" << fmt(px(xlo)) << "\" y1=\"" << fmt(py(ylo)) << "\" x2=\""
       << fmt(px(xhi)) << "\" y2=\"" << fmt(py(ylo))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << fmt(px(xlo)) << "\" y1=\"" << fmt(py(ylo)) << "\" x2=\""
       << fmt(px(xlo)) << "\" y2=\"" << fmt(py(yhi))
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << fmt(px(xlo)) << "\" y=\"" << fmt(py(ylo) + 14)
       << "\" font-size=\"10\">" << fmt(xlo) << "</text>\n";
    os << "<text x=\"" << fmt(px(xhi) - 30) << "\" y=\"" << fmt(py(ylo) + 14)
       << "\" font-size=\"10\">" << fmt(xhi) << "</text>\n";
    os << "<text x=\"" << fmt(px(xlo) + 4) << "\" y=\"" << fmt(py(ylo) - 4)
       << "\" font-size=\"10\">" << fmt(*ylo_it) << "</text>\n";
    os << "<text x=\"" << fmt(px(xlo) + 4) << "\" y=\"" << fmt(py(yhi) + 10)
       << "\" font-size=\"10\">" << fmt(*yhi_it) << "</text>\n";
    os << "<path fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" d=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i == 0 ? 'M' : 'L') << fmt(px(xs[i])) << ' ' << fmt(py(ys[i]));
    os << "\"/>\n</svg>\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shape-preserving rational cubic fractal spline toolkit"};
    app.require_subcommand(1);

    JobConfig cfg;
    double query = 0.0;
    bool derivative = false;
    int regime = 3;
    std::vector<int> knots;
    double fixed_r = 3.0;
    int width = 640, height = 480;

    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", cfg.input, "data file (CSV x,y[,d] or JSON)")
                ->required();
        sub->add_option("--shape", cfg.shape_name,
                        "shape class: increasing, decreasing, convex, concave, "
                        "positive, convex-increasing, none");
        sub->add_option("--t", cfg.t, "fractality dial in [0,1)");
        sub->add_option("--alpha", cfg.alpha, "explicit scaling factors")->delimiter(',');
        sub->add_option("--r", cfg.r, "explicit shape parameters")->delimiter(',');
        sub->add_option("--depth", cfg.depth, "composition depth")
            ->check(CLI::Range(1, 24));
        sub->add_option("--tol", cfg.tol, "evaluation tolerance");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_flag("--json", cfg.json_output, "machine-readable output");
    };

    auto* bounds = app.add_subcommand("bounds", "admissible scaling-factor report");
    add_common(bounds, true);
    auto* fit = app.add_subcommand("fit", "model summary for chosen parameters");
    add_common(fit, true);
    auto* sample = app.add_subcommand("sample", "exact attractor sample to CSV");
    add_common(sample, true);
    auto* eval = app.add_subcommand("eval", "certified point evaluation");
    add_common(eval, true);
    eval->add_option("--x", query, "query abscissa")->required();
    eval->add_flag("--derivative", derivative, "also evaluate the slope");
    auto* check = app.add_subcommand("check", "numerical shape verification");
    add_common(check, true);
    auto* converge = app.add_subcommand("converge", "convergence-order run (sin generator)");
    add_common(converge, false);
    converge->add_option("--regime", regime, "scaling law: 1, 2 or 3");
    converge->add_option("--knots", knots, "mesh sizes")->delimiter(',');
    converge->add_option("--fixed-r", fixed_r, "tension value for fixed-r regimes");
    auto* estimate = app.add_subcommand("estimate-derivs", "three-point slope estimates");
    add_common(estimate, true);
    auto* plot = app.add_subcommand("plot", "SVG polyline of a curve CSV");
    add_common(plot, true);
    plot->add_option("--width", width, "image width in px");
    plot->add_option("--height", height, "image height in px");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (app.got_subcommand(bounds))
            return cmd_bounds(cfg);
        if (app.got_subcommand(fit))
            return cmd_fit(cfg);
        if (app.got_subcommand(sample))
            return cmd_sample(cfg);
        if (app.got_subcommand(eval))
            return cmd_eval(cfg, query, derivative);
        if (app.got_subcommand(check))
            return cmd_check(cfg);
        if (app.got_subcommand(converge))
            return cmd_converge(cfg, regime, knots, fixed_r);
        if (app.got_subcommand(estimate))
            return cmd_estimate_derivs(cfg);
        if (app.got_subcommand(plot))
            return cmd_plot(cfg, width, height);
    } catch (const CliError& e) {
        if (cfg.json_output)
            std::cerr << json{{"error", e.message}, {"code", e.code}}.dump() << "\n";
        else
            std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        if (cfg.json_output)
            std::cerr << json{{"error", e.what()}, {"code", kExitValidation}}.dump()
                      << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
