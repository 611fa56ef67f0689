#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "koebe/adm_lower.hpp"
#include "koebe/buckets.hpp"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/json_io.hpp"
#include "koebe/measure.hpp"
#include "koebe/packing.hpp"
#include "koebe/reach.hpp"
#include "koebe/suites.hpp"

using namespace koebe;

namespace {

enum Exit { ok = 0, input = 1, convergence = 2, resource = 3, assertion = 4 };

std::string num(double x) { return format_double(x); }

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") std::cout << text;
    else write_text_file(path, text);
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

PlanarGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

int pick_outer_face(const PlanarGraph& g, const std::string& outer) {
    const FaceSet faces = trace_faces(g);
    if (!outer.empty()) {
        std::vector<Vertex> ids;
        std::stringstream ss(outer);
        for (std::string tok; std::getline(ss, tok, ',');) ids.push_back(std::stoi(tok));
        const int f = find_face(faces, ids);
        if (f < 0) throw InputError("no face with vertices " + outer);
        return f;
    }
    int best = 0;
    for (int f = 1; f < faces.size(); ++f)
        if (faces.faces[static_cast<std::size_t>(f)].size() > faces.faces[static_cast<std::size_t>(best)].size()) best = f;
    return best;
}

struct PackArgs {
    std::string graph, out, outer;
    double tol = 1e-10;
    int max_iter = 100000;
};

int cmd_pack(const PackArgs& a) {
    const PlanarGraph g = load_graph(a.graph);
    SolverConfig cfg;
    cfg.tolerance = a.tol;
    cfg.max_iterations = a.max_iter;
    PackingSolution sol;
    const CoinModel m = pack(g, pick_outer_face(g, a.outer), cfg, &sol);
    emit(a.out, dump(model_to_json(m)));
    std::fprintf(stderr, "discs %d\nmax_angle_defect %s\nmax_tangency_defect %s\niterations %d\n", m.size(),
                 num(sol.max_angle_defect).c_str(), num(sol.max_tangency_defect).c_str(), sol.iterations);
    return ok;
}

int cmd_order(const std::string& model, const std::string& out) {
    emit(out, ordering_to_json(koebe_ordering(model_from_json(read_json_file(model)))).dump() + "\n");
    return ok;
}

struct MetricArgs {
    std::string graph, ordering, koebe, kind = "wcol", out;
    int d = 1;
    bool exact = false, strict = false;
    long long budget = 10'000'000;
};

int cmd_metrics(const MetricArgs& a) {
    const PlanarGraph g = load_graph(a.graph);
    VertexOrdering ord;
    if (!a.ordering.empty() == !a.koebe.empty()) throw InputError("give exactly one of --ordering and --koebe");
    if (!a.ordering.empty()) {
        ord = ordering_from_json(read_json_file(a.ordering), g.num_vertices());
    } else {
        const CoinModel m = model_from_json(read_json_file(a.koebe));
        if (m.size() != g.num_vertices())
            throw InputError("model has " + std::to_string(m.size()) + " discs, graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
        ord = koebe_ordering(m);
    }
    if (a.d < 0) throw InputError("--d must be nonnegative");
    const MetricKind kind = parse_metric_kind(a.kind);
    AdmOptions opts;
    opts.mode = a.exact ? AdmMode::exact : AdmMode::bounds;
    opts.strict_length = a.strict;
    opts.node_budget = a.budget;
    const MetricReport r = metric_of_ordering(g, ord, a.d, kind, opts);
    std::ostringstream csv;
    const bool bounds = kind == MetricKind::adm && !a.exact;
    csv << (bounds ? "vertex_id,value,lower\n" : "vertex_id,value\n");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        csv << v << ',' << r.per_vertex[static_cast<std::size_t>(v)];
        if (bounds) csv << ',' << r.per_vertex_lower[static_cast<std::size_t>(v)];
        csv << '\n';
    }
    csv << "max," << r.value << (bounds ? ",\n" : "\n");
    emit(a.out, csv.str());
    return ok;
}

struct GenArgs {
    std::string family, out = "instance";
    int n = 50, d = 14, k = 2;
    std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
    std::optional<PlanarGraph> g;
    std::optional<CoinModel> m;
    std::optional<WitnessFamily> w;
    const std::string& f = a.family;
    if (f == "tetrahedron" || f == "wheel" || f == "icosahedron" || f == "random") {
        EmbeddedTriangulation t = f == "tetrahedron" ? tetrahedron()
                                  : f == "wheel"     ? wheel(a.n)
                                  : f == "icosahedron" ? icosahedron()
                                                       : random_triangulation(a.n, a.seed);
        m = pack(t.graph, t.outer_face);
        g = std::move(t.graph);
    } else if (f == "grid") {
        GridCoinInstance inst = gen_grid_coin(a.d);
        g = std::move(inst.graph);
        m = std::move(inst.model);
    } else if (f == "multigrid") {
        MultigridInstance inst = gen_multigrid_coin(a.d);
        g = std::move(inst.graph);
        m = std::move(inst.model);
    } else if (f == "square-grid") {
        g = gen_square_grid(a.d);
        if (a.d >= 2) m = pack_planar(*g);
    } else if (f == "adm-lower") {
        AdmLowerInstance inst = gen_adm_lower(a.k);
        const auto fam = build_witness_families(inst);
        w = fam.rbegin()->second;
        g = std::move(inst.graph);
    } else {
        throw InputError("unknown family \"" + f + "\"");
    }
    write_text_file(a.out + ".graph.json", dump(graph_to_json(*g)));
    std::printf("%s.graph.json n=%d m=%d\n", a.out.c_str(), g->num_vertices(), g->num_edges());
    if (m) {
        write_text_file(a.out + ".model.json", dump(model_to_json(*m)));
        std::printf("%s.model.json\n", a.out.c_str());
    }
    if (w) {
        write_text_file(a.out + ".witness.json", dump(witness_to_json(*w)));
        std::printf("%s.witness.json Q_%s paths=%zu\n", a.out.c_str(), w->s.c_str(), w->paths.size());
    }
    return ok;
}

std::string serialize_rho(const RhoSequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.rho.size(); ++i) out += (i ? ";" : "") + num(s.rho[i]);
    return out;
}

int cmd_rho_chain(const std::vector<int>& ls, std::uint64_t seed, const std::string& out) {
    std::ostringstream csv;
    csv << "l,min,floor,argmin\n";
    for (int l : ls) {
        const RhoChainMinimum r = minimize_rho_chain(l, seed);
        csv << l << ',' << num(r.value) << ',' << num(rho_chain_floor(l)) << ',' << serialize_rho(r.argmin) << '\n';
    }
    emit(out, csv.str());
    return ok;
}

int cmd_mu_ring(double a, double b, double tol) {
    std::printf("quadrature,closed_form\n%s,%s\n", num(mu_ring_quadrature(a, b, tol)).c_str(), num(mu_ring(a, b)).c_str());
    return ok;
}

int cmd_mu_disc(double rho, double a, double tol) {
    const QuadratureResult q = mu_disc_quadrature(Disc{{a, 0.0}, rho}, tol);
    std::printf("mu,error,disc_bound\n%s,%s,%s\n", num(q.value).c_str(), num(q.error).c_str(),
                num(disc_measure_bound(rho, a)).c_str());
    return ok;
}

struct BucketArgs {
    std::string graph, model, out = "buckets";
    int d = 28;
    Vertex root = 0;
};

int cmd_buckets(const BucketArgs& a) {
    const PlanarGraph g = load_graph(a.graph);
    const CoinModel raw = model_from_json(read_json_file(a.model));
    if (raw.size() != g.num_vertices()) throw InputError("model and graph sizes differ");
    if (a.root < 0 || a.root >= g.num_vertices()) throw InputError("root out of range");
    const CoinModel m = normalize(raw, a.root);
    const VertexOrdering ord = koebe_ordering(m);
    BucketAnalysis ba(g, m, ord, a.d, a.root);

    std::ostringstream hist;
    hist << "bucket,count\n";
    const WReachBucketHistogram h = ba.histogram();
    for (auto [i, c] : h.counts) hist << i << ',' << c << '\n';
    write_text_file(a.out + ".buckets.csv", hist.str());

    const GreedyIndexTrace tr = ba.greedy_traces();
    std::ostringstream trace;
    trace << "t,i_t\n";
    for (std::size_t t = 0; t < tr.major.size(); ++t) trace << t << ',' << tr.major[t] << '\n';
    write_text_file(a.out + ".trace.csv", trace.str());

    std::ostringstream acc;
    acc << "i,j,accessible\n";
    for (int i : tr.occupied)
        for (int j : tr.occupied)
            if (j > i && i >= 0) acc << i << ',' << j << ',' << (ba.accessible(i, j) ? 1 : 0) << '\n';
    write_text_file(a.out + ".access.csv", acc.str());

    const JumpReport jr = ba.verify_bucket_jumps();
    std::printf("wreach %d buckets %zu p %d distance_checks %s jump_triples %zu jump_violations %zu\n", h.total(),
                tr.occupied.size(), tr.p(), h.checks_pass() ? "pass" : "fail", jr.triples.size(), jr.violations.size());
    return h.checks_pass() && jr.passed() ? ok : assertion;
}

struct WitnessArgs {
    int k = 2;
    std::string ordering, check, out;
    std::uint64_t seed = 0;
    bool random = false;
};

int cmd_witness(const WitnessArgs& a) {
    const AdmLowerInstance inst = gen_adm_lower(a.k);
    const int n = inst.graph.num_vertices();
    if (!a.check.empty()) {
        const WitnessFamily f = witness_from_json(read_json_file(a.check));
        const WitnessReport rep = validate_witness(f, inst, inst.radius());
        for (const auto& v : rep.violations) std::printf("violation: %s\n", v.c_str());
        std::printf("%s\n", rep.ok() ? "valid" : "invalid");
        return rep.ok() ? ok : assertion;
    }
    VertexOrdering ord = VertexOrdering::identity(n);
    if (!a.ordering.empty()) {
        ord = ordering_from_json(read_json_file(a.ordering), n);
    } else if (a.random) {
        std::mt19937_64 rng(a.seed);
        ord = VertexOrdering::random(n, rng);
    }
    const AdmissibilityCertificate c = trim_witness(build_witness_families(inst), inst, ord);
    WitnessFamily f{WitnessFamily::Kind::trimmed, "", "", c.paths};
    emit(a.out, dump(witness_to_json(f)));
    std::fprintf(stderr, "k %d d %d root %d paths %d\n", a.k, c.d, c.v, c.value);
    return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
    SuiteOptions opts;
    opts.seed = seed;
    const RunManifest m = run_suite(suite, opts);
    emit(out, dump(m.to_json()));
    for (const auto& x : m.assertions)
        std::fprintf(stderr, "%s %s: %s\n", x.passed ? "PASS" : "FAIL", x.name.c_str(), x.detail.c_str());
    for (const auto& [name, rows] : m.tables) {
        std::fprintf(stderr, "# %s\n", name.c_str());
        for (const auto& row : rows) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i];
            std::fprintf(stderr, "%s\n", line.c_str());
        }
    }
    return m.passed() ? ok : assertion;
}

int cmd_render(const std::string& model, const std::string& out, bool labels, bool koebe) {
    const CoinModel m = model_from_json(read_json_file(model));
    SvgOptions opts;
    opts.labels = labels;
    if (koebe) opts.ordering = koebe_ordering(m);
    emit(out, render_svg(m, opts));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coin graph orderings and reachability toolkit"};
    app.require_subcommand(1);
    int code = ok;

    PackArgs pa;
    auto* pack_cmd = app.add_subcommand("pack", "circle packing of an embedded triangulation");
    pack_cmd->add_option("graph", pa.graph, "graph JSON with rotation")->required();
    pack_cmd->add_option("--outer", pa.outer, "outer face as comma separated ids (default: longest face)");
    pack_cmd->add_option("--tol", pa.tol, "angle-sum tolerance");
    pack_cmd->add_option("--max-iter", pa.max_iter, "sweep limit");
    pack_cmd->add_option("--out", pa.out, "coin-model JSON (default stdout)");
    pack_cmd->callback([&] { code = cmd_pack(pa); });

    std::string order_model, order_out;
    auto* order_cmd = app.add_subcommand("order", "Koebe ordering of a coin model");
    order_cmd->add_option("model", order_model)->required();
    order_cmd->add_option("--out", order_out);
    order_cmd->callback([&] { code = cmd_order(order_model, order_out); });

    MetricArgs ma;
    auto* met = app.add_subcommand("metrics", "per-vertex wcol / scol / adm");
    met->add_option("graph", ma.graph)->required();
    met->add_option("--ordering", ma.ordering, "ordering JSON");
    met->add_option("--koebe", ma.koebe, "coin-model JSON; use its Koebe ordering");
    met->add_option("--d", ma.d)->required();
    met->add_option("--kind", ma.kind, "wcol, scol or adm");
    met->add_flag("--exact", ma.exact, "exact admissibility search instead of flow bounds");
    met->add_flag("--strict-length", ma.strict, "admissibility paths of length exactly d");
    met->add_option("--budget", ma.budget, "node budget of the exact search");
    met->add_option("--out", ma.out);
    met->callback([&] { code = cmd_metrics(ma); });

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->add_option("family", ga.family,
                    "tetrahedron, wheel, icosahedron, random, grid, multigrid, square-grid, adm-lower")
        ->required();
    gen->add_option("--n", ga.n, "vertices (random) or rim size (wheel)");
    gen->add_option("--d", ga.d, "distance parameter (grid, multigrid, square-grid side)");
    gen->add_option("--k", ga.k, "depth of the admissibility construction");
    gen->add_option("--seed", ga.seed);
    gen->add_option("--out", ga.out, "output prefix");
    gen->callback([&] { code = cmd_gen(ga); });

    auto* measure = app.add_subcommand("measure", "mu measure and the rho-sequence minimum");
    measure->require_subcommand(1);
    std::vector<int> ls{8, 32, 128, 512, 1024};
    std::uint64_t lseed = 0;
    std::string lout;
    auto* chain = measure->add_subcommand("rho-chain", "minimum of the rho-sequence sum");
    chain->add_option("--l", ls, "sequence lengths");
    chain->add_option("--seed", lseed);
    chain->add_option("--out", lout);
    chain->callback([&] { code = cmd_rho_chain(ls, lseed, lout); });
    double ra = 1.0, rb = 2.0, rtol = 1e-12;
    auto* ring = measure->add_subcommand("mu-ring", "mu of the ring a <= |x| <= b");
    ring->add_option("--a", ra)->required();
    ring->add_option("--b", rb)->required();
    ring->add_option("--tol", rtol);
    ring->callback([&] { code = cmd_mu_ring(ra, rb, rtol); });
    double drho = 0.5, da = 1.0, dtol = 1e-9;
    auto* disc = measure->add_subcommand("mu-disc", "mu of a disc of radius rho centred at distance a");
    disc->add_option("--rho", drho)->required();
    disc->add_option("--a", da)->required();
    disc->add_option("--tol", dtol);
    disc->callback([&] { code = cmd_mu_disc(drho, da, dtol); });

    BucketArgs ba;
    auto* buckets = app.add_subcommand("buckets", "radius buckets, index traces and accessibility");
    buckets->add_option("graph", ba.graph)->required();
    buckets->add_option("model", ba.model)->required();
    buckets->add_option("--root", ba.root);
    buckets->add_option("--d", ba.d);
    buckets->add_option("--out", ba.out, "output prefix for the CSV reports");
    buckets->callback([&] { code = cmd_buckets(ba); });

    WitnessArgs wa;
    auto* wit = app.add_subcommand("witness", "trimmed admissibility witness on the admissibility construction");
    wit->add_option("--k", wa.k);
    wit->add_option("--ordering", wa.ordering, "ordering JSON (default identity)");
    wit->add_flag("--random", wa.random, "use a random ordering drawn from --seed");
    wit->add_option("--seed", wa.seed);
    wit->add_option("--check", wa.check, "validate a witness JSON instead of building one");
    wit->add_option("--out", wa.out);
    wit->callback([&] { code = cmd_witness(wa); });

    std::string suite, vout;
    std::uint64_t vseed = 0;
    auto* verify = app.add_subcommand("verify", "run an acceptance suite and write its manifest");
    verify->add_option("suite", suite)->required();
    verify->add_option("--seed", vseed);
    verify->add_option("--out", vout, "manifest JSON (default stdout)");
    verify->callback([&] { code = cmd_verify(suite, vseed, vout); });

    std::string rmodel, rout = "-";
    bool rlabels = false, rkoebe = false;
    auto* render = app.add_subcommand("render", "SVG of a coin model");
    render->add_option("model", rmodel)->required();
    render->add_option("--out", rout);
    render->add_flag("--labels", rlabels);
    render->add_flag("--koebe", rkoebe, "shade discs by Koebe rank");
    render->callback([&] { code = cmd_render(rmodel, rout, rlabels, rkoebe); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : input;
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return input;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "no convergence: %s\n", e.what());
        return convergence;
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return resource;
    } catch (const VerificationError& e) {
        std::fprintf(stderr, "assertion failed: %s\n", e.what());
        return assertion;
    }
    return code;
}
