#include "koebe/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "koebe/adm_lower.hpp"
#include "koebe/buckets.hpp"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/measure.hpp"
#include "koebe/packing.hpp"
#include "koebe/reach.hpp"

namespace koebe {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string str(double x) { return format_double(x); }
std::string str(long long x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }

void check(RunManifest& m, std::string name, bool ok, std::string detail) {
    m.assertions.push_back({std::move(name), ok, std::move(detail)});
}

void hash_input(RunManifest& m, const std::string& label, const PlanarGraph& g) {
    m.input_hashes[label] = fnv1a_hex(graph_to_json(g).dump());
}

struct Packed {
    PlanarGraph graph;
    CoinModel model;
    VertexOrdering ord;
};

Packed packed_random(int n, std::uint64_t seed) {
    EmbeddedTriangulation t = random_triangulation(n, seed);
    CoinModel m = pack(t.graph, t.outer_face);
    VertexOrdering ord = koebe_ordering(m);
    return {std::move(t.graph), std::move(m), std::move(ord)};
}

void scol_exact_bound(RunManifest& m) {
    const std::vector<int> ds{1, 2, 4, 8, 16, 32};
    const int instances = 20;
    m.parameters = {{"d", ds}, {"instances", instances}, {"n", "25..500 step 25"}};
    std::map<int, int> worst;
    Table table{{"n", "seed", "d", "scol", "bound"}};
    for (int i = 0; i < instances; ++i) {
        const int n = 25 * (i + 1);
        const std::uint64_t seed = m.seed + static_cast<std::uint64_t>(i);
        const Packed p = packed_random(n, seed);
        hash_input(m, "random-" + std::to_string(n) + "-" + std::to_string(seed), p.graph);
        for (int d : ds) {
            const int v = metric_of_ordering(p.graph, p.ord, d, MetricKind::scol).value;
            worst[d] = std::max(worst[d], v);
            table.push_back({str(n), str(static_cast<long long>(seed)), str(d), str(v), str((2 * d + 1) * (2 * d + 1))});
        }
    }
    for (int d : ds) {
        const int bound = (2 * d + 1) * (2 * d + 1);
        check(m, "scol_" + std::to_string(d) + " <= " + std::to_string(bound), worst[d] <= bound,
              "max over instances " + std::to_string(worst[d]));
    }
    m.tables["scol"] = std::move(table);
}

void grid_scol_cert(RunManifest& m) {
    const std::vector<int> ds{14, 26, 38};
    m.parameters = {{"d", ds}};
    for (int d : ds) {
        const GridCoinInstance inst = gen_grid_coin(d);
        hash_input(m, "grid-" + std::to_string(d), inst.graph);
        const int bound = ((d - 2) / 6) * ((d - 2) / 6);
        std::string detail;
        bool ok = false;
        try {
            const Certificate c = grid_scol_certificate(inst);
            ok = static_cast<int>(c.witnesses.size()) >= bound;
            detail = std::to_string(c.witnesses.size()) + " strongly reachable large discs, n=" +
                     std::to_string(inst.graph.num_vertices());
        } catch (const VerificationError& e) {
            detail = e.what();
        }
        check(m, "grid d=" + std::to_string(d) + " scol >= " + std::to_string(bound), ok, detail);
    }
}

void multigrid_wcol_cert(RunManifest& m) {
    const int d = 28;
    m.parameters = {{"d", d}};
    const MultigridInstance inst = gen_multigrid_coin(d);
    hash_input(m, "multigrid-28", inst.graph);
    check(m, "multigrid has 532 vertices", inst.graph.num_vertices() == 532,
          std::to_string(inst.graph.num_vertices()));
    std::string detail;
    bool ok = false;
    try {
        const Certificate c = multigrid_wcol_certificate(inst);
        ok = c.witnesses.size() >= 56;
        detail = std::to_string(c.witnesses.size()) + " weakly reachable large discs";
    } catch (const VerificationError& e) {
        detail = e.what();
    }
    check(m, "wcol_28 >= 56", ok, detail);
}

void adm_lower_witness(RunManifest& m) {
    const int orderings = 100;
    m.parameters = {{"k", {2, 3}}, {"random_orderings", orderings}};
    for (int k : {2, 3}) {
        const AdmLowerInstance inst = gen_adm_lower(k);
        hash_input(m, "adm-lower-" + std::to_string(k), inst.graph);
        const int need = (1 << k) - 1;
        const int n = inst.graph.num_vertices();
        std::map<std::string, WitnessFamily> fam;
        try {
            fam = build_witness_families(inst);
        } catch (const VerificationError& e) {
            check(m, "k=" + std::to_string(k) + " witness families", false, e.what());
            continue;
        }
        std::mt19937_64 rng(m.seed + static_cast<std::uint64_t>(k));
        int good = 0, worst = need * 2;
        std::string first_failure;
        for (int t = 0; t <= orderings; ++t) {
            const VertexOrdering ord = t == 0 ? VertexOrdering::identity(n) : VertexOrdering::random(n, rng);
            try {
                const AdmissibilityCertificate c = trim_witness(fam, inst, ord);
                WitnessFamily trimmed{WitnessFamily::Kind::trimmed, "", "", c.paths};
                const WitnessReport rep = validate_witness(trimmed, inst, inst.radius());
                worst = std::min(worst, c.value);
                if (rep.ok() && c.value >= need) ++good;
                else if (first_failure.empty())
                    first_failure = rep.ok() ? "value " + std::to_string(c.value) : rep.violations.front();
            } catch (const VerificationError& e) {
                if (first_failure.empty()) first_failure = e.what();
            }
        }
        check(m, "k=" + std::to_string(k) + " trimmed family >= " + std::to_string(need) + " on all orderings",
              good == orderings + 1,
              std::to_string(good) + "/" + std::to_string(orderings + 1) + " orderings, min value " +
                  std::to_string(worst) + (first_failure.empty() ? "" : ", " + first_failure));
        if (k == 2) {
            const VertexOrdering ord = VertexOrdering::identity(n);
            Vertex top = -1;
            for (const auto& [u, v] : inst.apex)
                if (top < 0 || ord.rank(v) > ord.rank(top)) top = v;
            AdmOptions opts;
            opts.mode = AdmMode::exact;
            std::string detail;
            bool ok = false;
            try {
                const AdmissibilityCertificate c = adm_vertex(inst.graph, ord, inst.radius(), top, opts);
                ok = c.value >= need && !check_adm_certificate(inst.graph, ord, c);
                detail = "exact adm_32 = " + std::to_string(c.value);
            } catch (const ResourceError& e) {
                detail = e.what();
            }
            check(m, "k=2 exact adm_32(v_top) >= 3", ok, detail);
        }
    }
}

int ceil_half(int d) { return (d + 1) / 2; }

void grid_scol_lower(RunManifest& m) {
    m.parameters = {{"d", {3, 10}}, {"exhaustive_d", 3}, {"random_orderings", 1000}};
    {
        const int d = 3;
        const PlanarGraph g = gen_square_grid(d);
        hash_input(m, "grid-3x3", g);
        std::vector<Vertex> ids(9);
        std::iota(ids.begin(), ids.end(), 0);
        long long total = 0, good = 0;
        int worst = 1 << 30;
        do {
            const GridLowerCertificate c = grid_scol_lower_certificate(g, d, VertexOrdering::from_ids(ids));
            ++total;
            worst = std::min(worst, c.count);
            if (c.count >= ceil_half(d)) ++good;
        } while (std::next_permutation(ids.begin(), ids.end()));
        check(m, "3x3 grid: scol_7 certificate >= 2 on all 9! orderings", good == total && total == 362880,
              str(good) + "/" + str(total) + ", min " + std::to_string(worst));
    }
    {
        const int d = 10, runs = 1000;
        const PlanarGraph g = gen_square_grid(d);
        hash_input(m, "grid-10x10", g);
        std::mt19937_64 rng(m.seed);
        int good = 0, worst = 1 << 30;
        for (int t = 0; t < runs; ++t) {
            const GridLowerCertificate c = grid_scol_lower_certificate(g, d, VertexOrdering::random(d * d, rng));
            worst = std::min(worst, c.count);
            if (c.count >= ceil_half(d)) ++good;
        }
        check(m, "10x10 grid: scol_28 certificate >= 5 on 1000 random orderings", good == runs,
              std::to_string(good) + "/" + std::to_string(runs) + ", min " + std::to_string(worst));
    }
}

void adm_trend(RunManifest& m) {
    const std::vector<int> ds{4, 8, 16, 32, 64};
    const int instances = 20;
    m.parameters = {{"d", ds}, {"instances", instances}, {"n", "100..2000 step 100"}, {"mode", "bounds"}};
    std::map<int, double> ratio;
    std::map<int, int> worst;
    for (int i = 0; i < instances; ++i) {
        const int n = 100 * (i + 1);
        const std::uint64_t seed = m.seed + 1000 + static_cast<std::uint64_t>(i);
        const Packed p = packed_random(n, seed);
        hash_input(m, "random-" + std::to_string(n) + "-" + std::to_string(seed), p.graph);
        AdmOptions opts;
        opts.mode = AdmMode::bounds;
        for (int d : ds) {
            const int v = metric_of_ordering(p.graph, p.ord, d, MetricKind::adm, opts).value;
            worst[d] = std::max(worst[d], v);
            ratio[d] = std::max(ratio[d], v * std::log(static_cast<double>(d)) / d);
        }
    }
    Table table{{"d", "max_adm_upper", "max_adm_ln_d_over_d"}};
    double overall = 0.0;
    for (int d : ds) {
        table.push_back({str(d), str(worst[d]), str(ratio[d])});
        overall = std::max(overall, ratio[d]);
    }
    m.tables["adm_trend"] = std::move(table);
    check(m, "max ratio at d=64 <= 2 x max ratio at d=4", ratio[64] <= 2.0 * ratio[4],
          str(ratio[64]) + " vs " + str(ratio[4]) + ", constant " + str(overall));
}

void rho_chain_floor_suite(RunManifest& m) {
    const std::vector<int> ls{8, 32, 128, 512, 1024};
    m.parameters = {{"l", ls}};
    Table table{{"l", "min", "floor"}};
    for (int l : ls) {
        const RhoChainMinimum r = minimize_rho_chain(l, m.seed);
        const double floor = rho_chain_floor(l);
        table.push_back({str(l), str(r.value), str(floor)});
        check(m, "l=" + std::to_string(l) + " minimum >= floor", r.value >= floor,
              str(r.value) + " >= " + str(floor));
    }
    m.tables["rho_chain"] = std::move(table);
}

void mu_calculus(RunManifest& m) {
    m.parameters = {{"rings", 50}, {"discs", 100}, {"ring_tol", 1e-9}};
    std::mt19937_64 rng(m.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double a = std::exp(-3.0 + 6.0 * unit(rng));
        const double b = a * (1.0 + 20.0 * unit(rng));
        worst = std::max(worst, std::abs(mu_ring_quadrature(a, b) - mu_ring(a, b)));
    }
    check(m, "mu_ring quadrature matches 2 pi ln(b/a) within 1e-9", worst <= 1e-9, "max error " + str(worst));
    int violations = 0;
    double slack = 1e300;
    for (int i = 0; i < 100; ++i) {
        const double a = std::exp(-3.0 + 6.0 * unit(rng));
        const double rho = a * (0.001 + 0.998 * unit(rng));
        const double phi = 2.0 * std::acos(-1.0) * unit(rng);
        const Disc disc{{a * std::cos(phi), a * std::sin(phi)}, rho};
        const double mu = mu_disc(disc);
        const double bound = disc_measure_bound(rho, a);
        if (mu < bound) ++violations;
        slack = std::min(slack, mu / bound);
    }
    check(m, "mu(D) >= (pi/4) rho^2/a^2 on 100 random discs", violations == 0,
          std::to_string(violations) + " violations, min ratio " + str(slack));
}

void bucket_machinery(RunManifest& m) {
    const int d = 28;
    m.parameters = {{"d", d}, {"root", "first interface"}};
    const MultigridInstance inst = gen_multigrid_coin(d);
    hash_input(m, "multigrid-28", inst.graph);
    const Vertex u = inst.gadgets.front().interface;
    const CoinModel model = normalize(inst.model, u);
    const VertexOrdering ord = koebe_ordering(model);
    BucketAnalysis ba(inst.graph, model, ord, d, u);
    check(m, "root lies in B_0", ba.partition().of(u) == 0, "bucket " + std::to_string(ba.partition().of(u)));
    try {
        const GreedyIndexTrace tr = ba.greedy_traces();
        const int p = tr.p();
        check(m, "p <= d", p <= d, "p = " + std::to_string(p));
        int bad_t = -1;
        for (int t = 0; t < static_cast<int>(tr.minor.size()); ++t)
            if (static_cast<int>(tr.minor[static_cast<std::size_t>(t)].size()) - 1 > d - t) bad_t = t;
        check(m, "p_t <= d - t for all t", bad_t < 0, bad_t < 0 ? "ok" : "fails at t=" + std::to_string(bad_t));
        check(m, "nonempty buckets <= (d+1)^2",
              static_cast<int>(tr.occupied.size()) <= (d + 1) * (d + 1),
              std::to_string(tr.occupied.size()) + " buckets");
    } catch (const VerificationError& e) {
        check(m, "greedy index traces", false, e.what());
    }
    try {
        const JumpReport jr = ba.verify_bucket_jumps();
        check(m, "jump rule holds on all accessible triples", jr.passed(),
              std::to_string(jr.triples.size()) + " triples, " + std::to_string(jr.violations.size()) + " violations");
    } catch (const VerificationError& e) {
        check(m, "jump rule holds on all accessible triples", false, e.what());
    }
    const WReachBucketHistogram h = ba.histogram();
    int bad = 0;
    for (const DistanceCheck& c : h.checks)
        if (!c.lower_ok || !c.upper_ok) ++bad;
    check(m, "1 + r <= a <= 2 d r on WReach", h.checks_pass(),
          std::to_string(h.checks.size()) + " pairs, " + std::to_string(bad) + " violations");
    Table table{{"bucket", "count"}};
    for (auto [i, c] : h.counts) table.push_back({str(i), str(c)});
    m.tables["wreach_buckets"] = std::move(table);
}

void packing_solver(RunManifest& m) {
    m.parameters = {{"instances", {"K4", "W6", "icosahedron"}}};
    {
        const EmbeddedTriangulation t = tetrahedron();
        hash_input(m, "K4", t.graph);
        const CoinModel c = pack(t.graph, t.outer_face);
        const double k = 3.0 + 2.0 * std::sqrt(3.0);
        const double err = std::abs(c[3].radius - 1.0 / k);
        check(m, "K4 interior radius within 1e-6 of Descartes value", err <= 1e-6, "error " + str(err));
    }
    {
        const EmbeddedTriangulation t = wheel(6);
        hash_input(m, "W6", t.graph);
        const CoinModel c = pack(t.graph, t.outer_face);
        const double err = std::abs(c[0].radius - 1.0);
        check(m, "W6 hub radius within 1e-10 of 1", err <= 1e-10, "error " + str(err));
    }
    {
        const EmbeddedTriangulation t = icosahedron();
        hash_input(m, "icosahedron", t.graph);
        PackingSolution sol;
        pack(t.graph, t.outer_face, {}, &sol);
        check(m, "icosahedron tangency residual <= 1e-8", sol.max_tangency_defect <= 1e-8,
              "residual " + str(sol.max_tangency_defect));
    }
}

const std::map<std::string, std::function<void(RunManifest&)>>& registry() {
    static const std::map<std::string, std::function<void(RunManifest&)>> r{
        {"scol-exact-bound", scol_exact_bound},   {"grid-scol-cert", grid_scol_cert},
        {"multigrid-wcol-cert", multigrid_wcol_cert}, {"adm-lower-witness", adm_lower_witness},
        {"grid-scol-lower", grid_scol_lower},     {"adm-trend", adm_trend},
        {"rho-chain-floor", rho_chain_floor_suite},   {"mu-calculus", mu_calculus},
        {"bucket-machinery", bucket_machinery},   {"packing-solver", packing_solver},
    };
    return r;
}

}  // namespace

bool RunManifest::passed() const {
    return !assertions.empty() &&
           std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

json RunManifest::to_json() const {
    json a = json::array();
    for (const Assertion& x : assertions) a.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    return {{"tool_version", tool_version}, {"suite", suite},          {"seed", seed},
            {"parameters", parameters},     {"input_hashes", input_hashes}, {"wall_clock_seconds", wall_clock_seconds},
            {"assertions", a},              {"tables", tables},        {"passed", passed()}};
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{
        "scol-exact-bound", "grid-scol-cert", "multigrid-wcol-cert", "adm-lower-witness", "grid-scol-lower",
        "adm-trend",        "rho-chain-floor",  "mu-calculus",         "bucket-machinery",  "packing-solver",
    };
    return ids;
}

RunManifest run_suite(const std::string& id, const SuiteOptions& opts) {
    auto it = registry().find(id);
    if (it == registry().end()) throw InputError("unknown suite \"" + id + "\"");
    RunManifest m;
    m.suite = id;
    m.seed = opts.seed;
    const auto start = std::chrono::steady_clock::now();
    it->second(m);
    m.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return m;
}

}  // namespace koebe
