// Command-line front end: evaluates regularized Riesz potentials of CSG
// shapes, tabulates the unit-ball closed forms against the engine, locates
// potential centers, and measures ball proximity (asphericity, minimal
// rings, best-approximating ball).  Emits CSV/JSON reports and SVG plots.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riesz/ballpot.hpp"
#include "riesz/centers.hpp"
#include "riesz/engine.hpp"
#include "riesz/errors.hpp"
#include "riesz/report.hpp"
#include "riesz/rings.hpp"
#include "riesz/shape_json.hpp"
#include "riesz/version.hpp"

namespace {

using nlohmann::json;
using namespace riesz;

struct CommonOpts {
    std::string shape_source;
    int quad_size = 0; // 0: dimension default
    std::uint64_t seed = 0;
    std::string out;
    bool timestamp = false;
};

Shape load_shape(const std::string& source) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) return builtin_shape(source.substr(prefix.size()));
    std::ifstream in(source);
    if (!in) throw validation_error("cannot open shape file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return shape_from_json_string(ss.str());
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (...) {
            throw validation_error(std::string("bad ") + what + " value '" + tok + "'");
        }
    }
    if (out.empty()) throw validation_error(std::string("empty ") + what + " list");
    return out;
}

Vec parse_point(const std::string& text) { return Vec(parse_list(text, "point")); }

// Output sink: --out file or stdout.
struct Sink {
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw validation_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file.is_open() ? file : std::cout; }
    std::ofstream file;
};

void write_meta(CsvWriter& csv, const CommonOpts& opts, const std::string& command,
                std::size_t quad_size) {
    csv.meta("tool", std::string("riesz ") + kVersion);
    csv.meta("command", command);
    csv.meta("seed", std::to_string(opts.seed));
    csv.meta("quadrature", std::to_string(quad_size));
    if (opts.timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
        csv.meta("timestamp", buf);
    }
}

json point_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
    return a;
}

int cmd_potential(const CommonOpts& opts, const std::vector<std::string>& point_args,
                  const std::vector<double>& lambdas, bool with_vhat, bool with_gradient) {
    Shape shape = load_shape(opts.shape_source);
    auto quad = SphereQuadrature::make_default(shape.dim(), opts.quad_size, opts.seed);
    Sink sink(opts.out);
    CsvWriter csv(sink.stream());
    write_meta(csv, opts, "potential", quad.size());
    std::vector<std::string> cols = {"lambda"};
    for (int i = 0; i < shape.dim(); ++i) cols.push_back("x" + std::to_string(i));
    cols.push_back("value");
    cols.push_back("regularized");
    if (with_vhat) cols.push_back("vhat");
    if (with_gradient)
        for (int i = 0; i < shape.dim(); ++i) cols.push_back("grad" + std::to_string(i));
    csv.header(cols);
    for (double lambda : lambdas) {
        for (const auto& parg : point_args) {
            Vec x = parse_point(parg);
            PotentialValue pv = potential(shape, x, lambda, quad);
            std::vector<std::string> cells = {CsvWriter::format(lambda)};
            for (int i = 0; i < x.dim(); ++i) cells.push_back(CsvWriter::format(x[i]));
            cells.push_back(CsvWriter::format(pv.value));
            cells.push_back(pv.regularized ? "1" : "0");
            if (with_vhat) cells.push_back(CsvWriter::format(v_hat(shape, x, lambda, quad)));
            if (with_gradient) {
                Vec g = gradient(shape, x, lambda, quad);
                for (int i = 0; i < g.dim(); ++i) cells.push_back(CsvWriter::format(g[i]));
            }
            csv.row_mixed(cells);
        }
    }
    return 0;
}

int cmd_ball_oracle(const CommonOpts& opts, int n, const std::vector<double>& lambdas,
                    const std::vector<double>& ts, const std::string& svg_path) {
    auto quad = SphereQuadrature::make_default(n, opts.quad_size, opts.seed);
    Shape ball = fixtures::unit_ball(n);
    Sink sink(opts.out);
    CsvWriter csv(sink.stream());
    write_meta(csv, opts, "ball-oracle", quad.size());
    csv.header({"n", "lambda", "t", "closed_form", "engine", "abs_error", "rel_error"});
    double max_rel = 0.0;
    std::vector<SvgSeries> series;
    for (double lambda : lambdas) {
        SvgSeries closed{"closed form, lambda=" + CsvWriter::format(lambda), "#1f77b4", {}, {}};
        SvgSeries eng{"engine, lambda=" + CsvWriter::format(lambda), "#d62728", {}, {}};
        for (double t : ts) {
            double cf = ball_potential(n, lambda, t);
            Vec x(n);
            x[0] = t;
            double ev = potential(ball, x, lambda, quad).value;
            double abs_err = std::fabs(ev - cf);
            double rel = abs_err / std::max(std::fabs(cf), 1e-300);
            max_rel = std::max(max_rel, rel);
            csv.row({static_cast<double>(n), lambda, t, cf, ev, abs_err, rel});
            closed.x.push_back(t);
            closed.y.push_back(cf);
            eng.x.push_back(t);
            eng.y.push_back(ev);
        }
        series.push_back(closed);
        series.push_back(eng);
    }
    csv.meta("max_rel_error", CsvWriter::format(max_rel));
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw validation_error("cannot open SVG output '" + svg_path + "'");
        write_svg_lines(svg, series, "unit-ball potential: closed form vs engine");
    }
    return 0;
}

int cmd_center(const CommonOpts& opts, double lambda, int starts) {
    Shape shape = load_shape(opts.shape_source);
    auto quad = SphereQuadrature::make_default(shape.dim(), opts.quad_size, opts.seed);
    CenterSearchConfig cfg;
    cfg.lambda = lambda;
    cfg.starts = starts;
    cfg.seed = opts.seed;
    CenterReport rep = find_centers(shape, cfg, quad);
    json j;
    j["tool"] = std::string("riesz ") + kVersion;
    j["lambda"] = rep.lambda;
    j["seed"] = opts.seed;
    j["quadrature"] = quad.size();
    j["search_domain"] = rep.search_domain;
    j["unique"] = rep.unique;
    j["n_centers"] = rep.centers.size();
    json cs = json::array();
    for (const auto& c : rep.centers)
        cs.push_back(json{{"point", point_json(c.point)}, {"vhat", c.value}});
    j["centers"] = cs;
    Sink sink(opts.out);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& family_name,
              const std::vector<double>& params, const std::vector<double>& lambdas,
              int starts, const std::string& svg_path) {
    std::vector<std::pair<double, Shape>> family;
    for (double p : params) {
        if (family_name == "star-cos3")
            family.emplace_back(p, fixtures::star_cos3(p));
        else if (family_name == "two-point-parallel")
            family.emplace_back(
                p, Shape::parallel_body({Vec{0.0, 0.0}, Vec{1.0, 0.0}}, p));
        else
            throw validation_error("sweep: unknown family '" + family_name + "'");
    }
    auto quad = SphereQuadrature::make_default(2, opts.quad_size, opts.seed);
    CenterSearchConfig base;
    base.starts = starts;
    base.seed = opts.seed;
    auto rows = uniqueness_sweep(family, lambdas, base, quad);

    Sink sink(opts.out);
    CsvWriter csv(sink.stream());
    write_meta(csv, opts, "sweep " + family_name, quad.size());
    std::vector<std::string> cols = {"param", "lambda", "n_centers", "cx", "cy",
                                     "vhat",  "asphericity"};
    csv.header(cols);
    for (const auto& r : rows)
        csv.row({r.param, r.lambda, static_cast<double>(r.n_centers), r.center[0], r.center[1],
                 r.vhat, r.asphericity});

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw validation_error("cannot open SVG output '" + svg_path + "'");
        std::vector<std::string> col_labels, row_labels;
        for (double l : lambdas) col_labels.push_back(CsvWriter::format(l));
        for (double p : params) row_labels.push_back(CsvWriter::format(p));
        std::vector<SvgHeatmapCell> cells;
        for (const auto& r : rows) {
            std::size_t ci = 0, ri = 0;
            for (std::size_t i = 0; i < lambdas.size(); ++i)
                if (lambdas[i] == r.lambda) ci = i;
            for (std::size_t i = 0; i < params.size(); ++i)
                if (params[i] == r.param) ri = i;
            cells.push_back({ci, ri, r.n_centers});
        }
        write_svg_heatmap(svg, col_labels, row_labels, cells,
                          "center multiplicity (" + family_name + ")");
    }
    return 0;
}

int cmd_rings(const CommonOpts& opts, const std::string& which, int grid) {
    Shape shape = load_shape(opts.shape_source);
    auto quad = SphereQuadrature::make_default(shape.dim(), opts.quad_size, opts.seed);
    json j;
    j["tool"] = std::string("riesz ") + kVersion;
    j["quadrature"] = quad.size();
    j["grid"] = grid;
    if (which == "asphericity") {
        auto [value, center] = asphericity(shape, grid, quad);
        j["asphericity"] = value;
        j["center"] = point_json(center);
    } else if (which == "minimal-ring") {
        MinimalRingReport rep = minimal_ring(shape, grid, quad);
        j["r"] = rep.r;
        j["R"] = rep.R;
        j["phi"] = rep.phi;
        json cs = json::array();
        for (const auto& c : rep.centers) cs.push_back(point_json(c));
        j["centers"] = cs;
    } else {
        BestBall bb = best_ball(shape, grid, quad);
        j["center"] = point_json(bb.center);
        j["radius"] = bb.radius;
        j["distance"] = bb.distance;
    }
    Sink sink(opts.out);
    sink.stream() << j.dump(2) << "\n";
    return 0;
}

void emit_error(const std::string& kind, const std::string& message) {
    json err;
    err["error"] = kind;
    err["message"] = message;
    std::cerr << err.dump() << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz potential geometry engine"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::string> points;
    std::string lambda_list = "2";
    std::string t_list = "0";
    std::string params_list;
    std::string family = "star-cos3";
    std::string svg_path;
    int dim_n = 3;
    int starts = 24;
    int grid = 64;
    bool with_vhat = false, with_gradient = false;
    double lambda_single = 2.0;

    auto add_common = [&](CLI::App* c, bool needs_shape) {
        if (needs_shape)
            c->add_option("--shape", opts.shape_source,
                          "shape JSON file or builtin:<name> (ball, box, two-balls, "
                          "slit-ball, two-lobe-x, star-cos3)")
                ->required();
        c->add_option("--quad", opts.quad_size, "sphere quadrature size (0: default)");
        c->add_option("--seed", opts.seed, "seed for Monte Carlo rules and start placement");
        c->add_option("--out", opts.out, "output file (default: stdout)");
        c->add_flag("--timestamp", opts.timestamp, "include a timestamp metadata line");
    };

    auto* p = app.add_subcommand("potential", "evaluate the potential at points");
    add_common(p, true);
    p->add_option("--lambda", lambda_list, "comma-separated lambda values")->required();
    p->add_option("--point", points, "evaluation point x,y[,z] (repeatable)")->required();
    p->add_flag("--vhat", with_vhat, "also emit the normalized potential");
    p->add_flag("--gradient", with_gradient, "also emit the gradient (where valid)");

    auto* b = app.add_subcommand("ball-oracle", "closed-form vs engine on the unit ball");
    add_common(b, false);
    b->add_option("--n", dim_n, "dimension")->required();
    b->add_option("--lambda", lambda_list, "comma-separated lambda values")->required();
    b->add_option("--t", t_list, "comma-separated |x| values")->required();
    b->add_option("--svg", svg_path, "optional SVG line plot");

    auto* c = app.add_subcommand("center", "locate potential centers");
    add_common(c, true);
    c->add_option("--lambda", lambda_single, "lambda")->required();
    c->add_option("--starts", starts, "number of optimizer starts");

    auto* s = app.add_subcommand("sweep", "center-multiplicity sweep over a shape family");
    add_common(s, false);
    s->add_option("--family", family, "star-cos3 or two-point-parallel");
    s->add_option("--params", params_list, "comma-separated family parameters")->required();
    s->add_option("--lambda", lambda_list, "comma-separated lambda values")->required();
    s->add_option("--starts", starts, "number of optimizer starts");
    s->add_option("--svg", svg_path, "multiplicity heatmap SVG");

    auto* a = app.add_subcommand("asphericity", "Dvoretzky asphericity");
    add_common(a, true);
    a->add_option("--grid", grid, "grid resolution per axis");

    auto* m = app.add_subcommand("minimal-ring", "minimal ring of the shape");
    add_common(m, true);
    m->add_option("--grid", grid, "grid resolution per axis");

    auto* bb = app.add_subcommand("best-ball", "best-approximating ball");
    add_common(bb, true);
    bb->add_option("--grid", grid, "grid resolution per axis");

    CLI11_PARSE(app, argc, argv);

    try {
        if (p->parsed())
            return cmd_potential(opts, points, parse_list(lambda_list, "lambda"), with_vhat,
                                 with_gradient);
        if (b->parsed())
            return cmd_ball_oracle(opts, dim_n, parse_list(lambda_list, "lambda"),
                                   parse_list(t_list, "t"), svg_path);
        if (c->parsed()) return cmd_center(opts, lambda_single, starts);
        if (s->parsed())
            return cmd_sweep(opts, family, parse_list(params_list, "params"),
                             parse_list(lambda_list, "lambda"), starts, svg_path);
        if (a->parsed()) return cmd_rings(opts, "asphericity", grid);
        if (m->parsed()) return cmd_rings(opts, "minimal-ring", grid);
        if (bb->parsed()) return cmd_rings(opts, "best-ball", grid);
    } catch (const validation_error& e) {
        emit_error("validation", e.what());
        return 2;
    } catch (const numerical_error& e) {
        emit_error("numerical", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 3;
    }
    return 0;
}
