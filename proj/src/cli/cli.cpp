#include "ptp/cli/cli.hpp"

#include "ptp/graph/generators.hpp"
#include "ptp/graph/io.hpp"
#include "ptp/linalg/decompositions.hpp"
#include "ptp/spectra/compatible.hpp"
#include "ptp/spectra/factorization.hpp"
#include "ptp/spectra/identities.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace ptp::cli {

namespace {

using graph::PartitionedGraph;
using linalg::Complex;
using linalg::DenseMatrix;
using linalg::IntMatrix;
using linalg::Poly;
using nlohmann::json;

/// Bad command-line values detected after parsing (exit 1, JSON error).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Settings {
    std::optional<double> tol_flag;
    std::optional<double> tol_env;
    std::uint32_t seed = 0x5eed;
    std::string out_path;
    std::string dot_path;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
};

double resolve_tol(const Settings& s, std::size_t degree) {
    if (s.tol_flag) return *s.tol_flag;
    if (s.tol_env) return *s.tol_env;
    return linalg::default_poly_tolerance(degree);
}

void emit(const Io& io, const json& j) { io.out << j.dump(2) << "\n"; }

json error_json(const std::string& type, const std::string& message,
                std::optional<std::string> path = std::nullopt) {
    json e;
    e["type"] = type;
    e["message"] = message;
    if (path) e["path"] = *path;
    return json{{"error", e}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw graph::IoError("cannot write " + path);
    f << text;
    if (!f) throw graph::IoError("write failed for " + path);
}

// Writes `text` to --out when given (and reports it on stdout), otherwise to stdout.
void deliver(const Io& io, const Settings& s, const std::string& text, json summary) {
    if (s.out_path.empty()) {
        io.out << text;
        return;
    }
    write_text(s.out_path, text);
    summary["written"] = s.out_path;
    emit(io, summary);
}

std::vector<Complex> sorted(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}

// Parts below 1e-12 of the list's scale are rounding residue and print as 0.
json scalars_json(const std::vector<Complex>& v) {
    double scale = 1.0;
    for (const auto& z : v) scale = std::max(scale, std::abs(z));
    const auto snap = [&](double x) { return std::abs(x) < 1e-12 * scale ? 0.0 : x; };
    json out = json::array();
    for (const auto& z : v) out.push_back(spectra::scalar_to_json({snap(z.real()), snap(z.imag())}));
    return out;
}

// A graph document (has "blocks") or a plain matrix document (has "entries").
DenseMatrix load_matrix_or_graph(const std::string& path, std::optional<double> sigma,
                                 bool& integral) {
    std::ifstream in(path);
    if (!in) throw graph::IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw graph::SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("blocks")) {
        const PartitionedGraph g = graph::graph_from_json(doc);
        const DenseMatrix a = graph::arrow(g, sigma.value_or(1.0));
        integral = a.is_integer();
        return a;
    }
    if (sigma) throw UsageError("--sigma applies only to partitioned graph files");
    if (!doc.is_object() || !doc.contains("entries"))
        throw graph::SchemaError("", "expected a graph document or a matrix document with \"entries\"");
    const json& rows = doc["entries"];
    if (!rows.is_array()) throw graph::SchemaError("/entries", "expected an array of rows");
    const std::size_t n = rows.size();
    DenseMatrix a(n, n);
    integral = true;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string rp = "/entries/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != n)
            throw graph::SchemaError(rp, "expected a row of " + std::to_string(n) + " numbers");
        for (std::size_t j = 0; j < n; ++j) {
            const json& e = rows[i][j];
            if (!e.is_number()) throw graph::SchemaError(rp + "/" + std::to_string(j), "expected a number");
            a(i, j) = e.get<double>();
            integral = integral && e.is_number_integer();
        }
    }
    for (const char* key : {"rows", "cols"})
        if (doc.contains(key) && (!doc[key].is_number_integer() || doc[key].get<std::size_t>() != n))
            throw graph::SchemaError(std::string("/") + key, "does not match the entries");
    return a;
}

std::string summary_poly(const Poly& p) {
    const std::string s = p.to_string('x');
    return s.size() > 120 ? s.substr(0, 117) + "..." : s;
}

// ---- commands -------------------------------------------------------------

int cmd_build(const Io& io, const Settings& s, const std::string& g_path, const std::string& h_path,
              const std::string& format) {
    const PartitionedGraph g = graph::load(g_path);
    const PartitionedGraph h = graph::load(h_path);
    std::vector<std::string> warnings;
    const PartitionedGraph prod = graph::ptp_graph(g, h, &warnings);
    for (const auto& w : warnings) io.err << "warning: " << w << "\n";
    if (!s.dot_path.empty()) graph::export_dot(prod, s.dot_path, "product");
    const std::string text = format == "matrix" ? graph::matrix_to_canonical_json(prod.adjacency())
                                                : graph::to_canonical_json(prod);
    json summary{{"rows", prod.vertex_count()}, {"part_sizes", {prod.m(), prod.n()}},
                 {"format", format}};
    if (!s.dot_path.empty()) summary["dot"] = s.dot_path;
    deliver(io, s, text, summary);
    io.err << "build: product with " << prod.vertex_count() << " vertices (" << prod.m() << " + "
           << prod.n() << "), " << prod.arc_count() << " arcs\n";
    return kOk;
}

int cmd_factor(const Io& io, const Settings& s, const std::string& g_path, const std::string& h_path,
               const std::string& method, bool check) {
    const PartitionedGraph g = graph::load(g_path);
    const PartitionedGraph h = graph::load(h_path);
    std::optional<spectra::Method> m;
    if (method == "svd") m = spectra::Method::svd;
    if (method == "triangular") m = spectra::Method::triangular;
    const spectra::SpectralFactorization f = spectra::factor(g, h, m);
    const Poly assembled = spectra::assemble(f, h);
    json out;
    out["factorization"] = spectra::to_json(f);
    out["degree"] = assembled.degree();
    out["polynomial"] = spectra::poly_to_json(assembled);
    int code = kOk;
    io.err << "factor: " << f.sigmas.size() << " sigma(s) by " << spectra::to_string(f.method)
           << ", residual " << spectra::to_string(f.residual) << "^" << f.residual_exponent << "\n";
    if (check) {
        const double tol = resolve_tol(s, assembled.degree());
        const spectra::Report r = spectra::compare(assembled, spectra::product_char_poly(g, h), tol);
        out["check"] = spectra::to_json(r);
        out["check"]["tolerance"] = tol;
        io.err << "check: " << (r.pass ? "pass" : "FAIL") << " (max |diff| " << r.max_abs_diff
               << ", tol " << tol << ")\n";
        if (!r.pass) code = kCheckFailed;
    }
    emit(io, out);
    return code;
}

int cmd_verify_identity(const Io& io, const Settings& s, const std::string& g_path,
                        const std::string& h_path) {
    const PartitionedGraph g = graph::load(g_path);
    const PartitionedGraph h = graph::load(h_path);
    const std::size_t degree = g.m() * h.m() + g.n() * h.n() +
                               static_cast<std::size_t>(std::abs(static_cast<long>(g.n()) -
                                                                 static_cast<long>(g.m()))) *
                                   (g.n() >= g.m() ? h.m() : h.n());
    const double tol = resolve_tol(s, degree);
    const spectra::GmIdentityReport r = spectra::verify_gm_identity(g, h, tol);
    json out = spectra::to_json(r.report);
    out["exponent"] = r.exponent;
    out["tolerance"] = tol;
    emit(io, out);
    io.err << "verify-identity: exponent " << r.exponent << ", "
           << (r.report.pass ? "pass" : "FAIL") << "\n";
    return r.report.pass ? kOk : kCheckFailed;
}

int cmd_check_compatible(const Io& io, const Settings& s, const std::string& h_path,
                         std::optional<double> sigma) {
    const PartitionedGraph h = graph::load(h_path);
    const bool first = h.a00() * h.a01() == h.a01() * h.a11();
    const bool second = h.a11() * h.a10() == h.a10() * h.a00();
    const bool ok = spectra::check_compatible(h);
    json out;
    out["compatible"] = ok;
    out["relations"] = {{"H00*H01 == H01*H11", first}, {"H11*H10 == H10*H00", second}};
    if (ok && sigma) {
        spectra::CommutingSpectrumOptions opts;
        opts.seed = s.seed;
        if (s.tol_flag) opts.tol = *s.tol_flag;
        const spectra::CommutingSpectrum c = spectra::commuting_spectrum(h, *sigma, opts);
        json sp;
        sp["sigma"] = *sigma;
        std::vector<std::size_t> order(c.values.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const Complex a = c.values[x], b = c.values[y];
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        const auto pick = [&](const std::vector<Complex>& v) {
            std::vector<Complex> r;
            if (v.size() == order.size())
                for (std::size_t i : order) r.push_back(v[i]);
            return r;
        };
        sp["values"] = scalars_json(pick(c.values));
        sp["lambda"] = scalars_json(pick(c.lambda));
        sp["mu"] = scalars_json(pick(c.mu));
        sp["fallback"] = c.fallback;
        out["spectrum"] = std::move(sp);
        if (c.fallback) io.err << "warning: eigenvalue pairing not certified; direct eigenvalues reported\n";
    }
    emit(io, out);
    io.err << "check-compatible: " << (ok ? "compatible" : "not compatible") << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_spectrum(const Io& io, const std::string& path, const std::string& mode,
                 std::optional<double> sigma) {
    bool integral = false;
    const DenseMatrix a = load_matrix_or_graph(path, sigma, integral);
    if (mode == "exact" && !integral)
        throw UsageError("exact mode needs an integer matrix; use --mode floating");
    const bool exact = mode == "exact" || (mode == "auto" && integral);
    const Poly p = linalg::char_poly(a, exact ? linalg::CharPolyMode::exact
                                              : linalg::CharPolyMode::floating);
    json out;
    out["dimension"] = a.rows();
    out["mode"] = exact ? "exact" : "floating";
    if (sigma) out["sigma"] = *sigma;
    out["char_poly"] = spectra::poly_to_json(p);
    out["eigenvalues"] = scalars_json(sorted(linalg::eigenvalues(a)));
    emit(io, out);
    io.err << "spectrum: p(x) = " << summary_poly(p) << "\n";
    return kOk;
}

int emit_generated(const Io& io, const Settings& s, const PartitionedGraph& g, const std::string& family) {
    if (!s.dot_path.empty()) graph::export_dot(g, s.dot_path, family);
    json summary{{"family", family}, {"part_sizes", {g.m(), g.n()}}, {"directed", g.directed()}};
    if (!s.dot_path.empty()) summary["dot"] = s.dot_path;
    deliver(io, s, graph::to_canonical_json(g), summary);
    io.err << "gen " << family << ": " << g.m() << " + " << g.n() << " vertices, " << g.arc_count()
           << " arcs\n";
    return kOk;
}

IntMatrix whole_undirected(const std::string& path) {
    const PartitionedGraph g = graph::load(path);
    if (g.directed()) throw graph::GraphError(path + ": bridge parts must be undirected");
    return g.adjacency();
}

std::optional<double> parse_env_tol(const std::optional<std::string>& env) {
    if (!env || env->empty()) return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(*env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != env->size() || !(v > 0.0) || !std::isfinite(v))
        throw UsageError("PTP_TOL must be a positive number, got '" + *env + "'");
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_tol) {
    const Io io{out, err};
    Settings s;
    CLI::App app{"Partitioned tensor products of graphs and their spectra", "ptp"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol_value = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_value, "Relative comparison tolerance (default 1e-8, 1e-6 above degree 20)");
    app.add_option("--seed", s.seed, "Seed for randomized certification");

    std::string g_path, h_path, path, method = "auto", mode = "auto", format = "matrix";
    bool check = false;
    double sigma_value = 0.0;
    std::function<int()> action;

    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", s.out_path, "Write the result to this file");
        sub->add_option("--dot", s.dot_path, "Also write Graphviz DOT to this file");
    };

    auto* build = app.add_subcommand("build", "Build the partitioned tensor product of G and H");
    build->add_option("G", g_path, "Graph G (JSON)")->required();
    build->add_option("H", h_path, "Graph H (JSON)")->required();
    build->add_option("--format", format, "matrix (default) or graph (partitioned JSON)")
        ->check(CLI::IsMember({"graph", "matrix"}));
    add_out(build);
    build->callback([&] { action = [&] { return cmd_build(io, s, g_path, h_path, format); }; });

    auto* fac = app.add_subcommand("factor", "Factor p(G x H) into p(H^sigma) terms");
    fac->add_option("G", g_path, "Graph G (JSON)")->required();
    fac->add_option("H", h_path, "Graph H (JSON)")->required();
    fac->add_option("--method", method, "auto, svd or triangular")
        ->check(CLI::IsMember({"auto", "svd", "triangular"}));
    fac->add_flag("--check", check, "Compare against the characteristic polynomial of the product");
    fac->callback([&] { action = [&] { return cmd_factor(io, s, g_path, h_path, method, check); }; });

    auto* ver = app.add_subcommand("verify-identity", "Check the reflection identity for G and H");
    ver->add_option("G", g_path, "Graph G (JSON)")->required();
    ver->add_option("H", h_path, "Graph H (JSON)")->required();
    ver->callback([&] { action = [&] { return cmd_verify_identity(io, s, g_path, h_path); }; });

    auto* comp = app.add_subcommand("check-compatible", "Test whether the partition of H is compatible");
    comp->add_option("H", h_path, "Graph H (JSON)")->required();
    auto* comp_sigma = comp->add_option("--sigma", sigma_value, "Also report the paired spectrum of H^sigma");
    comp->callback([&] {
        action = [&] {
            return cmd_check_compatible(io, s, h_path,
                                        comp_sigma->count() ? std::optional(sigma_value) : std::nullopt);
        };
    });

    auto* spec = app.add_subcommand("spectrum", "Characteristic polynomial and eigenvalues");
    spec->add_option("FILE", path, "Graph or matrix (JSON)")->required();
    spec->add_option("--mode", mode, "auto, exact or floating")
        ->check(CLI::IsMember({"auto", "exact", "floating"}));
    auto* spec_sigma = spec->add_option("--sigma", sigma_value, "Use H^sigma for a graph file");
    spec->callback([&] {
        action = [&] {
            return cmd_spectrum(io, path, mode,
                                spec_sigma->count() ? std::optional(sigma_value) : std::nullopt);
        };
    });

    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->require_subcommand(1);
    std::size_t a = 0, b = 0;
    std::vector<std::size_t> part0, xs, ys;
    std::string group = "cyclic", f0, f1;

    auto* gp = gen->add_subcommand("path", "Path on N vertices");
    gp->add_option("N", a)->required();
    auto* gp_split = gp->add_option("--part0", part0, "Vertices of part 0 (default: even indices)")->delimiter(',');
    add_out(gp);
    gp->callback([&] {
        action = [&] {
            return emit_generated(io, s, graph::path(a, gp_split->count() ? std::optional(part0) : std::nullopt), "path");
        };
    });

    auto* gc = gen->add_subcommand("cycle", "Cycle on N >= 3 vertices");
    gc->add_option("N", a)->required();
    auto* gc_split = gc->add_option("--part0", part0, "Vertices of part 0 (default: even indices)")->delimiter(',');
    add_out(gc);
    gc->callback([&] {
        action = [&] {
            return emit_generated(io, s, graph::cycle(a, gc_split->count() ? std::optional(part0) : std::nullopt), "cycle");
        };
    });

    auto* gh = gen->add_subcommand("hypercube", "M-cube split by parity");
    gh->add_option("M", a)->required();
    add_out(gh);
    gh->callback([&] { action = [&] { return emit_generated(io, s, graph::hypercube(a), "hypercube"); }; });

    auto* gk = gen->add_subcommand("complete-bipartite", "K_{m,n}");
    gk->add_option("m", a)->required();
    gk->add_option("n", b)->required();
    add_out(gk);
    gk->callback([&] {
        action = [&] { return emit_generated(io, s, graph::complete_bipartite(a, b), "complete-bipartite"); };
    });

    auto* gb = gen->add_subcommand("bridge", "Two undirected graphs joined by one edge x0 - x1");
    gb->add_option("H00", f0, "Part 0 graph (JSON; whole adjacency)")->required();
    gb->add_option("H11", f1, "Part 1 graph (JSON; whole adjacency)")->required();
    gb->add_option("x0", a)->required();
    gb->add_option("x1", b)->required();
    add_out(gb);
    gb->callback([&] {
        action = [&] {
            return emit_generated(io, s, graph::bridge_join(whole_undirected(f0), whole_undirected(f1), a, b),
                                  "bridge");
        };
    });

    auto* gcirc = gen->add_subcommand("circulant", "Circulant family with parameters j, k");
    gcirc->add_option("j", a)->required();
    gcirc->add_option("k", b)->required();
    add_out(gcirc);
    gcirc->callback([&] {
        action = [&] { return emit_generated(io, s, graph::circulant_family(a, b), "circulant"); };
    });

    auto* gcay = gen->add_subcommand("cayley", "Cayley construction over a cyclic or dihedral group");
    gcay->add_option("--group", group, "cyclic (order n) or dihedral (order 2n)")
        ->check(CLI::IsMember({"cyclic", "dihedral"}));
    gcay->add_option("--n", a, "Group parameter n")->required();
    gcay->add_option("--x", xs, "Connection set X (element indices)")->delimiter(',');
    gcay->add_option("--y", ys, "Normal subgroup Y (element indices)")->delimiter(',')->required();
    add_out(gcay);
    gcay->callback([&] {
        action = [&] {
            graph::GroupPresentation p;
            p.table = group == "cyclic" ? graph::cyclic_group_table(a) : graph::dihedral_group_table(a);
            p.order = p.table.size();
            p.connection_set = xs;
            p.normal_subgroup = ys;
            return emit_generated(io, s, graph::cayley(p), "cayley");
        };
    });

    std::vector<const char*> argv{"ptp"};
    for (const auto& x : args) argv.push_back(x.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        s.tol_env = parse_env_tol(env_tol);
        if (tol_opt->count()) {
            if (!(tol_value > 0.0) || !std::isfinite(tol_value))
                throw UsageError("--tol must be a positive number");
            s.tol_flag = tol_value;
        }
        if (!action) throw UsageError("no command given");
        return action();
    } catch (const graph::SchemaError& e) {
        emit(io, error_json("schema", e.what(), e.path()));
    } catch (const graph::IoError& e) {
        emit(io, error_json("io", e.what()));
    } catch (const UsageError& e) {
        emit(io, error_json("usage", e.what()));
    } catch (const graph::GraphError& e) {
        emit(io, error_json("graph", e.what()));
    } catch (const spectra::SpectraError& e) {
        emit(io, error_json("input", e.what()));
    } catch (const linalg::NumericalError& e) {
        emit(io, error_json("numerical", e.what()));
    } catch (const std::invalid_argument& e) {
        emit(io, error_json("input", e.what()));
    }
    err << "error: see JSON on stdout\n";
    return kInputError;
}

}  // namespace ptp::cli
