// Command-line front end: renders planar field slices, emits shell-source
// grids and surface-layer tables, runs verification suites, and reports
// beam-focusing metrics.  Units: wave speed c = 1, all lengths and times in
// the same abstract unit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pulsebeam/grid_io.hpp"
#include "pulsebeam/shell_sources.hpp"
#include "pulsebeam/verification.hpp"
#include "pulsebeam/wavelet_fields.hpp"

namespace {

using namespace pulsebeam;

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidParameterError(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw InvalidParameterError(std::string(what) + ": empty list");
    return out;
}

Vec3 parse_vec3(const std::string& s, const char* what) {
    const auto v = parse_double_list(s, what);
    if (v.size() != 3) throw InvalidParameterError(std::string(what) + ": expected x,y,z");
    return {v[0], v[1], v[2]};
}

// --grid x1min:x1max:n1,x3min:x3max:n3
void parse_grid(const std::string& s, GridSpec& spec) {
    const auto axis = [](const std::string& part, double& lo, double& hi, int& n) {
        std::stringstream ss(part);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
            throw InvalidParameterError("grid axis: expected min:max:n");
        lo = std::stod(a);
        hi = std::stod(b);
        n = std::stoi(c);
    };
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw InvalidParameterError("grid: expected x1min:x1max:n1,x3min:x3max:n3");
    axis(s.substr(0, comma), spec.x1_min, spec.x1_max, spec.n1);
    axis(s.substr(comma + 1), spec.x3_min, spec.x3_max, spec.n3);
}

BranchCut parse_cut(const std::string& s) {
    if (s == "disk") return BranchCut::standard_disk();
    if (s.rfind("upper:", 0) == 0) return BranchCut::upper_spheroid(std::stod(s.substr(6)));
    if (s.rfind("lower:", 0) == 0) return BranchCut::lower_spheroid(std::stod(s.substr(6)));
    throw InvalidParameterError("cut: expected disk|upper:alpha|lower:alpha");
}

Quantity parse_quantity(const std::string& s) {
    if (s == "abs") return Quantity::Abs;
    if (s == "abs2") return Quantity::Abs2;
    if (s == "re") return Quantity::Re;
    if (s == "im") return Quantity::Im;
    throw InvalidParameterError("quantity: expected abs|abs2|re|im");
}

Scaling parse_scale(const std::string& s) {
    if (s == "linear") return Scaling::Linear;
    if (s == "log") return Scaling::LogMagnitude;
    throw InvalidParameterError("scale: expected linear|log");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "pgm") return OutputFormat::Pgm;
    if (s == "both") return OutputFormat::Both;
    throw InvalidParameterError("format: expected csv|pgm|both");
}

// Shared flags for field evaluation and output.
struct CommonOpts {
    std::string a_str = "0,0,1";
    double b = 1.3;
    std::string r0_str = "0,0,0";
    double t0 = 0.0;
    std::string cut_str = "disk";
    std::string grid_str;
    double x2 = 0.0;
    std::string times_str;
    std::string out = "field";
    std::string format_str = "csv";
    std::string quantity_str = "abs";
    std::string scale_str = "linear";
    std::uint64_t seed = 1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--a", a_str, "source vector a as x,y,z");
        cmd->add_option("--b", b, "imaginary time b (requires |b| > |a|)");
        cmd->add_option("--r0", r0_str, "launch point as x,y,z");
        cmd->add_option("--t0", t0, "launch time");
        cmd->add_option("--cut", cut_str, "branch cut: disk|upper:alpha|lower:alpha");
        cmd->add_option("--grid", grid_str, "x1min:x1max:n1,x3min:x3max:n3");
        cmd->add_option("--x2", x2, "slice plane x2 = const");
        cmd->add_option("--times", times_str, "comma-separated slice times");
        cmd->add_option("--out", out, "output file prefix");
        cmd->add_option("--format", format_str, "csv|pgm|both");
        cmd->add_option("--quantity", quantity_str, "abs|abs2|re|im (PGM payload)");
        cmd->add_option("--scale", scale_str, "linear|log (PGM mapping)");
        cmd->add_option("--seed", seed, "RNG seed for seeded subcommands");
    }

    EmissionCenter center() const {
        EmissionCenter z{parse_vec3(r0_str, "r0"), t0, parse_vec3(a_str, "a"), b};
        z.validate();
        return z;
    }
};

FieldGrid render_slice(const GridSpec& spec, double time,
                       const std::function<Complex(const SpacetimePoint&)>& field) {
    FieldGrid grid;
    grid.spec = spec;
    grid.time = time;
    const std::size_t cells = static_cast<std::size_t>(spec.n1) * spec.n3;
    grid.values.assign(cells, Complex(0.0, 0.0));
    grid.singular.assign(cells, 0);

    auto eval_row = [&](int i1) {
        const double x1 = spec.x1_at(i1);
        for (int i3 = 0; i3 < spec.n3; ++i3) {
            const std::size_t idx = static_cast<std::size_t>(i1) * spec.n3 + i3;
            try {
                grid.values[idx] = field({{x1, spec.x2, spec.x3_at(i3)}, time});
            } catch (const SingularPointError&) {
                grid.singular[idx] = 1;
            }
        }
    };

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i1 = w; i1 < spec.n1; i1 += static_cast<int>(workers)) eval_row(i1);
        });
    for (auto& th : pool) th.join();
    return grid;
}

void write_slices(const std::vector<FieldGrid>& grids, const CommonOpts& opts) {
    const OutputFormat fmt = parse_format(opts.format_str);
    const Quantity quantity = parse_quantity(opts.quantity_str);
    const Scaling scale = parse_scale(opts.scale_str);
    for (std::size_t i = 0; i < grids.size(); ++i) {
        const std::string base = opts.out + "_t" + std::to_string(i);
        if (fmt == OutputFormat::Csv || fmt == OutputFormat::Both)
            write_csv(grids[i], base + ".csv");
        if (fmt == OutputFormat::Pgm || fmt == OutputFormat::Both)
            write_pgm(grids[i], base + ".pgm", quantity, scale);
    }
}

int cmd_render(const CommonOpts& opts, const std::string& field_name, double alpha,
               double p1, double p2) {
    const EmissionCenter z = opts.center();
    GridSpec spec;
    if (opts.grid_str.empty()) throw InvalidParameterError("render requires --grid");
    parse_grid(opts.grid_str, spec);
    spec.x2 = opts.x2;
    if (opts.times_str.empty()) throw InvalidParameterError("render requires --times");
    spec.times = parse_double_list(opts.times_str, "times");
    spec.validate();

    std::function<Complex(const SpacetimePoint&)> field;
    if (field_name == "psi") {
        const BranchCut cut = parse_cut(opts.cut_str);
        field = [z, cut](const SpacetimePoint& x) { return wavelet(x, z, cut); };
    } else if (field_name == "psi_avg") {
        if (!(alpha > 0.0)) throw InvalidParameterError("psi_avg requires --alpha > 0");
        field = [z, alpha](const SpacetimePoint& x) { return psi_avg(x, z, alpha); };
    } else if (field_name == "psi_jump") {
        field = [z](const SpacetimePoint& x) {
            const Complex rho = complex_distance(x.r - z.r0, z.a).value();
            return psi_jump(rho, Complex(x.t - z.t0, -z.b));
        };
    } else if (field_name == "shell_source" || field_name == "interpolated") {
        const TransitionProfile profile(p1, p2);
        if (field_name == "shell_source")
            field = [z, profile](const SpacetimePoint& x) {
                return shell_source_density(x, profile, z);
            };
        else
            field = [z, profile](const SpacetimePoint& x) {
                return interpolated_field(x, profile, z);
            };
    } else {
        throw InvalidParameterError(
            "field: expected psi|psi_avg|psi_jump|shell_source|interpolated");
    }

    std::vector<FieldGrid> grids;
    grids.reserve(spec.times.size());
    for (double t : spec.times) grids.push_back(render_slice(spec, t, field));
    write_slices(grids, opts);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double threshold_override) {
    CheckReport report = run_suite(suite, seed);
    if (threshold_override > 0.0) {
        report.threshold = threshold_override;
        report.pass = report.max_rel_error <= threshold_override;
    }
    std::cout << "# seed=" << report.seed << '\n' << report.line() << '\n';
    return report.pass ? 0 : 3;
}

int cmd_source(const CommonOpts& opts, double p1, double p2, double abrupt_alpha,
               const std::string& surface_str, double t) {
    const EmissionCenter z = opts.center();

    if (!surface_str.empty()) {
        if (!(abrupt_alpha > 0.0))
            throw InvalidParameterError("--on-surface requires --abrupt alpha > 0");
        const auto nn = parse_double_list(surface_str, "on-surface");
        if (nn.size() != 2) throw InvalidParameterError("on-surface: expected n_q,n_phi");
        const int n_q = static_cast<int>(nn[0]), n_phi = static_cast<int>(nn[1]);
        if (n_q < 1 || n_phi < 1) throw InvalidParameterError("on-surface counts must be >= 1");

        std::ofstream out(opts.out + "_surface.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file");
        out << "p,q,phi,x1,x2,x3,re_single,im_single,re_double,im_double\n";
        const double am = norm(z.a);
        char buf[512];
        for (int j = 0; j < n_q; ++j) {
            const double q = -am + (j + 0.5) * 2.0 * am / n_q;
            for (int k = 0; k < n_phi; ++k) {
                const double phi = 2.0 * M_PI * k / n_phi;
                const Vec3 pos = z.r0 + from_oblate({abrupt_alpha, q, phi}, z.a);
                const SurfaceLayerDensity layers =
                    abrupt_layer_coefficients(pos, t, abrupt_alpha, z);
                std::snprintf(buf, sizeof(buf),
                              "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                              abrupt_alpha, q, phi, pos.x1, pos.x2, pos.x3,
                              layers.single_layer.real(), layers.single_layer.imag(),
                              layers.double_layer.real(), layers.double_layer.imag());
                out << buf;
            }
        }
        return 0;
    }

    // Grid mode: shell density on a slice.
    const TransitionProfile profile(p1, p2);
    GridSpec spec;
    if (opts.grid_str.empty()) throw InvalidParameterError("source grid mode requires --grid");
    parse_grid(opts.grid_str, spec);
    spec.x2 = opts.x2;
    spec.times = {t};
    spec.validate();
    const auto field = [z, profile](const SpacetimePoint& x) {
        return shell_source_density(x, profile, z);
    };
    write_slices({render_slice(spec, t, field)}, opts);
    return 0;
}

int cmd_focus(const std::string& a_str, const std::string& b_list_str, double r_far,
              const std::string& out_path) {
    const Vec3 a = parse_vec3(a_str, "a");
    const double am = norm(a);
    const auto bs = parse_double_list(b_list_str, "b-list");
    for (double b : bs)
        if (std::fabs(b) <= am)
            throw InvalidParameterError("focus requires |b| > |a| for every b");

    std::ostringstream rows;
    rows << "b_over_a,angular_fwhm,axial_pulse_width\n";
    char buf[160];
    for (double b : bs) {
        const EmissionCenter z{{}, 0.0, a, b};
        const BeamMetrics m = beam_metrics(z, r_far, r_far);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", b / am, m.angular_fwhm,
                      m.axial_pulse_width);
        rows << buf;
    }
    if (out_path.empty()) {
        std::cout << rows.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file");
        out << rows.str();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pulsed-beam wavelet fields: render, verify, source, focus (units: c = 1)"};
    app.require_subcommand(1);
    app.set_config("--config");

    CommonOpts render_opts, source_opts;
    std::string render_field = "psi";
    double render_alpha = 0.0, render_p1 = 0.0, render_p2 = 0.0;
    auto* render = app.add_subcommand("render", "render field slices as CSV/PGM grids");
    render_opts.add_to(render);
    render->add_option("--field", render_field, "psi|psi_avg|psi_jump|shell_source|interpolated");
    render->add_option("--alpha", render_alpha, "spheroid level for psi_avg");
    render->add_option("--p1", render_p1, "inner transition level");
    render->add_option("--p2", render_p2, "outer transition level");

    std::string verify_suite;
    std::uint64_t verify_seed = 1;
    double verify_threshold = 0.0;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", verify_suite, "suite name")->required();
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--threshold", verify_threshold, "override the pass threshold");

    double source_p1 = 0.0, source_p2 = 0.0, source_abrupt = 0.0, source_t = 0.0;
    std::string source_surface;
    auto* source = app.add_subcommand("source", "emit shell-source grids or layer tables");
    source_opts.add_to(source);
    source->add_option("--p1", source_p1, "inner transition level");
    source->add_option("--p2", source_p2, "outer transition level");
    source->add_option("--abrupt", source_abrupt, "abrupt-limit spheroid level alpha");
    source->add_option("--on-surface", source_surface, "surface table resolution n_q,n_phi");
    source->add_option("--t", source_t, "evaluation time");

    std::string focus_a = "0,0,1", focus_b_list, focus_out;
    double focus_r_far = 100.0;
    auto* focus = app.add_subcommand("focus", "beam focusing metrics per b value");
    focus->add_option("--a", focus_a, "source vector a as x,y,z");
    focus->add_option("--b-list", focus_b_list, "comma-separated b values")->required();
    focus->add_option("--R-far", focus_r_far, "far-zone radius");
    focus->add_option("--out", focus_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (render->parsed())
            return cmd_render(render_opts, render_field, render_alpha, render_p1, render_p2);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_seed, verify_threshold);
        if (source->parsed())
            return cmd_source(source_opts, source_p1, source_p2, source_abrupt,
                              source_surface, source_t);
        if (focus->parsed()) return cmd_focus(focus_a, focus_b_list, focus_r_far, focus_out);
    } catch (const UnknownSuiteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ZeroSourceVectorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
