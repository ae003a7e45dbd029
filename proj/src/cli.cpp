#include "sgl/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sgl/approximator.hpp"
#include "sgl/compression.hpp"
#include "sgl/constants.hpp"
#include "sgl/cut_embed.hpp"
#include "sgl/graph_io.hpp"
#include "sgl/parallel.hpp"
#include "sgl/poincare.hpp"
#include "sgl/properties.hpp"
#include "sgl/report_json.hpp"
#include "sgl/spectral.hpp"

namespace sgl {

using nlohmann::json;

json Config::to_json() const {
    return {{"enum_cap", enum_cap},         {"brute_cap", brute_cap},
            {"lp_cap", lp_cap},             {"cheeger_cap", cheeger_cap},
            {"dense_cap", dense_cap},       {"strict_eps_max", strict_eps_max},
            {"threads", worker_count()}};
}

json ExperimentRecord::to_json() const {
    json j;
    j["size"] = size;
    j["trial"] = trial;
    j["n"] = n;
    j["m"] = m;
    j["d"] = d;
    j["delta"] = delta;
    j["p"] = p;
    j["seed_g"] = seed_g;
    j["seed_h"] = seed_h;
    j["seed_search"] = seed_search;
    j["host_resamples"] = host_resamples;
    j["mode"] = mode;
    j["notes"] = notes;
    j["lower"] = json_num(lower);
    j["exact"] = exact;
    j["upper"] = upper ? json_num(*upper) : json(nullptr);
    j["upper_l1_distortion"] = upper_l1_distortion ? json_num(*upper_l1_distortion) : json(nullptr);
    j["upper_classical"] = upper_classical ? json_num(*upper_classical) : json(nullptr);
    j["lambda2_g"] = lambda2_g ? json_num(*lambda2_g) : json(nullptr);
    j["property_d_verdict"] = property_d_verdict;
    j["property_r_verdict"] = property_r_verdict;
    j["check_alpha"] = check_alpha;
    j["check_eps"] = check_eps;
    j["wall_seconds"] = wall_seconds;
    return j;
}

std::vector<ExperimentRecord> gamma_trend_scan(int d, int delta, const std::vector<int>& sizes,
                                             int trials, std::uint64_t seed, int restarts,
                                             const Config& config) {
    if (trials < 1) throw parameter_error("gamma_trend_scan: need trials >= 1");
    std::vector<ExperimentRecord> records;
    int index = 0;
    for (int size : sizes) {
        for (int trial = 0; trial < trials; ++trial, ++index) {
            const auto t0 = std::chrono::steady_clock::now();
            ExperimentRecord rec;
            rec.size = size;
            rec.trial = trial;
            rec.n = size;
            rec.m = size;
            rec.d = d;
            rec.delta = delta;
            rec.p = 1.0;

            // per-trial derived seed: seed xor record index
            SplitMix64 rng(seed ^ static_cast<std::uint64_t>(index));
            rec.seed_g = rng.next();
            rec.seed_h = rng.next();
            rec.seed_search = rng.next();

            const Graph g = sample_regular_graph(size, d, rec.seed_g);
            // the shortest-path metric must be finite: redraw disconnected hosts
            Graph h = sample_regular_graph(size, delta, rec.seed_h);
            while (!metric_summary(h).connected) {
                ++rec.host_resamples;
                rec.seed_h = rng.next();
                h = sample_regular_graph(size, delta, rec.seed_h);
            }
            if (rec.host_resamples > 0)
                rec.notes.push_back("host redrawn until connected (distribution conditioned)");
            const MetricMatrix dist_h = all_pairs_distances(h);

            const double log_maps = size * std::log(static_cast<double>(size));
            if (log_maps <= std::log(static_cast<double>(config.brute_cap))) {
                rec.mode = "brute";
                const GammaEstimate est = gamma_bruteforce(g, dist_h, rec.p, config.brute_cap);
                rec.lower = est.lower;
                rec.exact = true;
            } else {
                rec.mode = "search";
                rec.notes.push_back("map space exceeds brute cap; downgraded to local search");
                const GammaEstimate est = gamma_local_search(g, dist_h, rec.p, restarts, rec.seed_search);
                rec.lower = est.lower;
                rec.exact = false;
            }

            if (size <= config.lp_cap) {
                try {
                    const GammaEstimate cert = gamma_upper_certificate(g, h, 1e-9, 1e-4, config.lp_cap);
                    rec.upper = cert.upper;
                    rec.upper_l1_distortion = cert.l1_distortion;
                    rec.upper_classical = cert.classical;
                    rec.lambda2_g = cert.lambda_2;
                } catch (const degenerate_error&) {
                    rec.notes.push_back("certificate degenerate (lambda2 = d)");
                }
            } else {
                rec.notes.push_back("host exceeds cut-LP cap; certificate absent");
            }

            // informational property verdicts at exploratory parameters
            rec.check_alpha = 0.25;
            rec.check_eps = 0.1;
            const PropertyReport dr =
                check_property_D(g, rec.check_alpha, CheckMode::sampled(rec.seed_g ^ 1, 200));
            rec.property_d_verdict = dr.verdict == Verdict::fail
                                         ? "fail"
                                         : (dr.coverage == "exact" ? "pass" : "pass-sampled");
            const PropertyReport rr =
                check_property_R(h, rec.check_eps, 8, CheckMode::sampled(rec.seed_h ^ 1, 60), config.lp_cap);
            rec.property_r_verdict = rr.verdict == Verdict::fail
                                         ? "fail"
                                         : (rr.coverage == "exact" ? "pass" : "pass-sampled");

            rec.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

namespace {

struct Output {
    json body;
    int exit_code = 0;
};

Graph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

MetricMatrix load_metric_arg(const std::string& metric_path, const std::string& graph_path) {
    if (!metric_path.empty()) return metric_from_json(load_json_file(metric_path));
    if (!graph_path.empty()) return all_pairs_distances(load_graph(graph_path));
    throw parameter_error("need --metric or a graph to derive the metric from");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

CheckMode make_mode(const std::string& mode, std::uint64_t seed, int samples,
                    const std::vector<std::string>& subsets) {
    if (mode == "exact") return CheckMode::exact();
    if (mode == "sampled") return CheckMode::sampled(seed, samples);
    if (mode == "given") {
        std::vector<std::vector<int>> sets;
        for (const auto& s : subsets) sets.push_back(parse_int_list(s));
        if (sets.empty()) throw parameter_error("mode given requires at least one --subset");
        return CheckMode::given(std::move(sets));
    }
    throw parameter_error("unknown mode: " + mode);
}

std::string scan_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    os << "size,trial,mode,exact,lower,upper,lambda2_g,d_verdict,r_verdict,wall_seconds\n";
    for (const auto& r : records) {
        os << r.size << ',' << r.trial << ',' << r.mode << ',' << (r.exact ? 1 : 0) << ',' << r.lower
           << ',';
        if (r.upper)
            os << *r.upper;
        os << ',';
        if (r.lambda2_g)
            os << *r.lambda2_g;
        os << ',' << r.property_d_verdict << ',' << r.property_r_verdict << ',' << r.wall_seconds
           << '\n';
    }
    return os.str();
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spectral-gap workbench for regular graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global options (--out, caps) may follow the subcommand
    Config config;
    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to a file instead of stdout");
    app.add_option("--enum-cap", config.enum_cap, "enumeration vertex cap");
    app.add_option("--brute-cap", config.brute_cap, "brute-force map evaluation cap");
    app.add_option("--lp-cap", config.lp_cap, "cut-LP point cap");
    app.add_option("--cheeger-cap", config.cheeger_cap, "subset-scan vertex cap");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "sample a uniform random regular graph");
    int gen_n = 0, gen_d = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("-n", gen_n)->required();
    gen->add_option("-d", gen_d)->required();
    gen->add_option("--seed", gen_seed)->required();

    // ---- enum ----
    auto* enum_cmd = app.add_subcommand("enum", "enumerate all labeled regular graphs");
    int enum_n = 0, enum_d = 0;
    enum_cmd->add_option("-n", enum_n)->required();
    enum_cmd->add_option("-d", enum_d)->required();

    // ---- metric ----
    auto* metric_cmd = app.add_subcommand("metric", "all-pairs shortest-path metric");
    std::string metric_graph;
    metric_cmd->add_option("--graph", metric_graph)->required();

    // ---- spectrum ----
    auto* spec_cmd = app.add_subcommand("spectrum", "adjacency eigenvalues");
    std::string spec_graph;
    double spec_tol = 1e-10;
    spec_cmd->add_option("--graph", spec_graph)->required();
    spec_cmd->add_option("--tol", spec_tol);

    // ---- cheeger ----
    auto* cheeger_cmd = app.add_subcommand("cheeger", "exact Cheeger constant and spectral sandwich");
    std::string cheeger_graph;
    cheeger_cmd->add_option("--graph", cheeger_graph)->required();

    // ---- gamma ----
    auto* gamma_cmd = app.add_subcommand("gamma", "Poincare constant estimators");
    gamma_cmd->require_subcommand(1);
    std::string gamma_graph, gamma_host, gamma_metric;
    double gamma_p = 1.0;
    int gamma_restarts = 50;
    std::uint64_t gamma_seed = 0;
    double gamma_eps = 1e-4;
    auto* gamma_brute = gamma_cmd->add_subcommand("brute", "exact by map enumeration");
    auto* gamma_search = gamma_cmd->add_subcommand("search", "coordinate-ascent lower bound");
    auto* gamma_certify = gamma_cmd->add_subcommand("certify", "L1-distortion upper certificate");
    for (auto* sub : {gamma_brute, gamma_search, gamma_certify}) {
        sub->add_option("--graph", gamma_graph)->required();
    }
    gamma_brute->add_option("--host", gamma_host);
    gamma_brute->add_option("--metric", gamma_metric);
    gamma_brute->add_option("-p", gamma_p);
    gamma_search->add_option("--host", gamma_host);
    gamma_search->add_option("--metric", gamma_metric);
    gamma_search->add_option("-p", gamma_p);
    gamma_search->add_option("--restarts", gamma_restarts);
    gamma_search->add_option("--seed", gamma_seed)->required();
    gamma_certify->add_option("--host", gamma_host)->required();
    gamma_certify->add_option("--eps", gamma_eps);

    // ---- distort ----
    auto* distort_cmd = app.add_subcommand("distort", "bi-Lipschitz distortion tools");
    distort_cmd->require_subcommand(1);
    std::string distort_graph, distort_host, distort_metric;
    double distort_gamma_upper = 0.0;
    auto* distort_lp = distort_cmd->add_subcommand("lp", "exact L1 distortion via the cut-cone LP");
    distort_lp->add_option("--metric", distort_metric);
    distort_lp->add_option("--graph", distort_graph);
    auto* distort_brute = distort_cmd->add_subcommand("brute", "exact distortion into a host graph");
    distort_brute->add_option("--graph", distort_graph)->required();
    distort_brute->add_option("--host", distort_host)->required();
    auto* distort_lb = distort_cmd->add_subcommand("lower-bound", "distortion lower bound from gamma");
    distort_lb->add_option("--graph", distort_graph)->required();
    distort_lb->add_option("--gamma-upper", distort_gamma_upper)->required();

    // ---- check-d / check-r / edge-density ----
    std::string check_graph, check_mode = "exact";
    double check_alpha = 1.0, check_eps = 1e-4;
    std::uint64_t check_seed = 0;
    int check_samples = 10000, check_cap = 12;
    std::vector<std::string> check_subsets;
    auto* check_d = app.add_subcommand("check-d", "vertex-expansion property of the domain graph");
    check_d->add_option("--graph", check_graph)->required();
    check_d->add_option("--alpha", check_alpha)->required();
    check_d->add_option("--mode", check_mode);
    check_d->add_option("--seed", check_seed);
    check_d->add_option("--samples", check_samples);
    auto* check_r = app.add_subcommand("check-r", "L1-neighborhood property of the host graph");
    check_r->add_option("--graph", check_graph)->required();
    check_r->add_option("--eps", check_eps)->required();
    check_r->add_option("--cap", check_cap);
    check_r->add_option("--mode", check_mode);
    check_r->add_option("--seed", check_seed);
    check_r->add_option("--samples", check_samples);
    auto* edge_density = app.add_subcommand("edge-density", "induced-subgraph edge-density condition");
    edge_density->add_option("--graph", check_graph)->required();
    edge_density->add_option("--eps", check_eps)->required();
    edge_density->add_option("--cap", check_cap);
    edge_density->add_option("--mode", check_mode);
    edge_density->add_option("--seed", check_seed);
    edge_density->add_option("--samples", check_samples);
    edge_density->add_option("--subset", check_subsets, "comma-separated vertex list (repeatable)");

    // ---- decompose / compress / trace ----
    std::string map_path, trace_graph, trace_host;
    double comp_eps = 1e-4, trace_alpha = 1.0;
    std::uint64_t comp_seed = 0;
    auto* decompose_cmd = app.add_subcommand("decompose", "fiber-size decomposition of a map");
    decompose_cmd->add_option("--map", map_path)->required();
    decompose_cmd->add_option("--eps", comp_eps)->required();
    auto* compress_cmd = app.add_subcommand("compress", "dyadic split and random compression");
    compress_cmd->add_option("--map", map_path)->required();
    compress_cmd->add_option("--eps", comp_eps)->required();
    compress_cmd->add_option("--seed", comp_seed)->required();
    auto* trace_cmd = app.add_subcommand("trace", "full compression ledger with diagnostics");
    trace_cmd->add_option("--graph", trace_graph)->required();
    trace_cmd->add_option("--host", trace_host)->required();
    trace_cmd->add_option("--map", map_path)->required();
    trace_cmd->add_option("--eps", comp_eps)->required();
    trace_cmd->add_option("--alpha", trace_alpha)->required();
    trace_cmd->add_option("--seed", comp_seed)->required();

    // ---- approx ----
    auto* approx_cmd = app.add_subcommand("approx", "universal-approximator tools");
    approx_cmd->require_subcommand(1);
    std::string approx_graph, approx_multigraph, approx_metric, approx_host, approx_pairing = "default";
    std::string approx_points;
    double approx_p = 1.0, approx_d_bound = 0.0, approx_s = 0.0;
    int approx_trials = 200;
    std::uint64_t approx_seed = 0;
    int approx_k0 = 1;
    auto* approx_build = approx_cmd->add_subcommand("build", "block quotient of a cubic graph");
    approx_build->add_option("--graph", approx_graph)->required();
    approx_build->add_option("--pairing", approx_pairing, "default|random");
    approx_build->add_option("--seed", approx_seed);
    approx_build->add_option("--k0", approx_k0,
                             "below this block count emit the complete multigraph instead");
    auto* approx_spread = approx_cmd->add_subcommand("spread", "two-sided ratio spread over tuples");
    approx_spread->add_option("--multigraph", approx_multigraph)->required();
    approx_spread->add_option("--metric", approx_metric);
    approx_spread->add_option("--host", approx_host);
    approx_spread->add_option("-p", approx_p);
    approx_spread->add_option("--trials", approx_trials);
    approx_spread->add_option("--seed", approx_seed)->required();
    approx_spread->add_option("--D", approx_d_bound);
    auto* approx_check = approx_cmd->add_subcommand("check", "two-sided containment for one tuple");
    approx_check->add_option("--multigraph", approx_multigraph)->required();
    approx_check->add_option("--metric", approx_metric);
    approx_check->add_option("--host", approx_host);
    approx_check->add_option("-p", approx_p);
    approx_check->add_option("--D", approx_d_bound)->required();
    approx_check->add_option("--s", approx_s)->required();
    approx_check->add_option("--points", approx_points)->required();

    // ---- constants ----
    auto* constants_cmd = app.add_subcommand("constants", "named constants in log space");
    int const_d = 3;
    double const_eps = 1e-4, const_p = 1.0, const_alpha = 0.0;
    std::int64_t const_m = 0;
    constants_cmd->add_option("-d", const_d)->required();
    constants_cmd->add_option("--eps", const_eps)->required();
    constants_cmd->add_option("--alpha", const_alpha);
    constants_cmd->add_option("-p", const_p);
    constants_cmd->add_option("-m", const_m);

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand("scan", "gamma-versus-size trend scan");
    int scan_d = 3, scan_delta = 3, scan_trials = 1, scan_restarts = 50;
    std::string scan_sizes, scan_csv_path;
    std::uint64_t scan_seed = 0;
    scan_cmd->add_option("--d", scan_d)->required();
    scan_cmd->add_option("--delta", scan_delta)->required();
    scan_cmd->add_option("--sizes", scan_sizes)->required();
    scan_cmd->add_option("--trials", scan_trials);
    scan_cmd->add_option("--restarts", scan_restarts);
    scan_cmd->add_option("--seed", scan_seed)->required();
    scan_cmd->add_option("--csv", scan_csv_path, "also write a CSV table");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 vector order
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << std::endl;
            return 0;
        }
        err << "usage error: " << e.what() << std::endl;
        return 64;
    }

    Output result;
    try {
        if (*gen) {
            result.body["graph"] = graph_to_json(sample_regular_graph(gen_n, gen_d, gen_seed));
            result.body["seed"] = gen_seed;
        } else if (*enum_cmd) {
            const std::vector<Graph> graphs = enumerate_regular_graphs(enum_n, enum_d, config.enum_cap);
            json list = json::array();
            for (const Graph& g : graphs) list.push_back(graph_to_json(g));
            result.body["count"] = graphs.size();
            result.body["graphs"] = list;
        } else if (*metric_cmd) {
            const Graph g = load_graph(metric_graph);
            result.body["metric"] = metric_to_json(all_pairs_distances(g));
            result.body["summary"] = to_json(metric_summary(g));
        } else if (*spec_cmd) {
            const Spectrum s = adjacency_spectrum(load_graph(spec_graph), spec_tol, config.dense_cap);
            result.body["eigenvalues"] = s.eigenvalues;
        } else if (*cheeger_cmd) {
            const Graph g = load_graph(cheeger_graph);
            result.body["h"] = json_num(cheeger_exact(g, config.cheeger_cap));
            if (g.is_regular() && metric_summary(g).connected) {
                const CheegerSandwich cs = cheeger_sandwich_check(g);
                result.body["sandwich"] = to_json(cs);
                if (!cs.pass) result.exit_code = 2;
            }
        } else if (*gamma_brute || *gamma_search) {
            const Graph g = load_graph(gamma_graph);
            const MetricMatrix m = load_metric_arg(gamma_metric, gamma_host);
            GammaEstimate est = *gamma_brute
                                    ? gamma_bruteforce(g, m, gamma_p, config.brute_cap)
                                    : gamma_local_search(g, m, gamma_p, gamma_restarts, gamma_seed);
            result.body["gamma"] = json_num(*gamma_brute ? est.upper : est.lower);
            result.body["estimate"] = to_json(est);
        } else if (*gamma_certify) {
            const GammaEstimate est = gamma_upper_certificate(load_graph(gamma_graph),
                                                              load_graph(gamma_host), 1e-9, gamma_eps,
                                                              config.lp_cap);
            result.body["gamma_upper"] = json_num(est.upper);
            result.body["estimate"] = to_json(est);
        } else if (*distort_lp) {
            const MetricMatrix m = load_metric_arg(distort_metric, distort_graph);
            const DistortionResult res = min_l1_distortion(m, config.lp_cap);
            result.body["distortion"] = json_num(res.distortion);
            result.body["embedding"] = to_json(res.embedding);
        } else if (*distort_brute) {
            result.body["distortion"] =
                json_num(min_distortion_bruteforce(load_graph(distort_graph), load_graph(distort_host)));
        } else if (*distort_lb) {
            result.body["lower_bound"] =
                json_num(distortion_lower_bound(load_graph(distort_graph), distort_gamma_upper));
        } else if (*check_d) {
            const PropertyReport rep = check_property_D(
                load_graph(check_graph), check_alpha, make_mode(check_mode, check_seed, check_samples, {}));
            result.body["report"] = to_json(rep);
            if (!rep.passed()) result.exit_code = 2;
        } else if (*check_r) {
            const PropertyReport rep =
                check_property_R(load_graph(check_graph), check_eps, check_cap,
                                 make_mode(check_mode, check_seed, check_samples, {}), config.lp_cap);
            result.body["report"] = to_json(rep);
            if (!rep.passed()) result.exit_code = 2;
        } else if (*edge_density) {
            const PropertyReport rep =
                edge_density_check(load_graph(check_graph), check_eps, check_cap,
                                   make_mode(check_mode, check_seed, check_samples, check_subsets));
            result.body["report"] = to_json(rep);
            if (!rep.passed()) result.exit_code = 2;
        } else if (*decompose_cmd) {
            const VertexMap f = vertex_map_from_json(load_json_file(map_path));
            result.body["decomposition"] = to_json(decompose(f, f.m, comp_eps));
            result.body["dyadic"] = to_json(dyadic(f, f.m, comp_eps));
        } else if (*compress_cmd) {
            const VertexMap f = vertex_map_from_json(load_json_file(map_path));
            const DyadicReport dy = dyadic(f, f.m, comp_eps);
            const Compression comp = compress(f, dy, comp_seed);
            result.body["dyadic"] = to_json(dy);
            result.body["map"] = vertex_map_to_json(comp.map);
            result.body["pivot"] = comp.pivot ? json(*comp.pivot) : json(nullptr);
            result.body["image_bound"] = to_json(image_bound_check(f, dy, f.m, comp_eps));
        } else if (*trace_cmd) {
            const CompressionTrace tr =
                compression_trace(load_graph(trace_graph), load_graph(trace_host),
                                  vertex_map_from_json(load_json_file(map_path)), comp_eps, trace_alpha,
                                  comp_seed);
            result.body["trace"] = to_json(tr);
            for (const auto& rec : tr.inequalities)
                if (rec.asserted && !rec.holds) result.exit_code = 2;
        } else if (*approx_build) {
            const Graph g2k = load_graph(approx_graph);
            if (g2k.vertex_count() / 2 < approx_k0) {
                result.body["multigraph"] = multigraph_to_json(complete_multigraph(g2k.vertex_count() / 2));
                result.body["construction"] = "complete";
            } else {
                std::optional<Pairing> pairing;
                if (approx_pairing == "random") {
                    if (approx_build->count("--seed") == 0)
                        throw parameter_error("--pairing random requires --seed");
                    pairing = random_pairing(g2k.vertex_count(), approx_seed);
                } else if (approx_pairing != "default") {
                    throw parameter_error("--pairing must be default or random");
                }
                const QuotientResult qr = build_universal_approximator(g2k, pairing);
                result.body["multigraph"] = multigraph_to_json(qr.quotient);
                result.body["construction"] = "quotient";
                json pj = json::array();
                for (auto [a, b] : qr.pairing) pj.push_back(json::array({a, b}));
                result.body["pairing"] = pj;
            }
        } else if (*approx_spread) {
            const Multigraph u = multigraph_from_json(load_json_file(approx_multigraph));
            const MetricMatrix m = load_metric_arg(approx_metric, approx_host);
            std::optional<double> db;
            if (approx_spread->count("--D") > 0) db = approx_d_bound;
            const ApproximatorReport rep = approximator_spread(u, m, approx_p, approx_trials,
                                                               approx_seed, db);
            result.body["report"] = to_json(rep);
            if (rep.pass && !*rep.pass) result.exit_code = 2;
        } else if (*approx_check) {
            const Multigraph u = multigraph_from_json(load_json_file(approx_multigraph));
            const MetricMatrix m = load_metric_arg(approx_metric, approx_host);
            const TwoSidedCheck chk =
                two_sided_check(u, m, approx_p, approx_d_bound, approx_s, parse_int_list(approx_points));
            result.body["check"] = to_json(chk);
            if (!chk.pass) result.exit_code = 2;
        } else if (*constants_cmd) {
            std::optional<double> alpha;
            if (constants_cmd->count("--alpha") > 0) alpha = const_alpha;
            std::optional<std::int64_t> m;
            if (constants_cmd->count("-m") > 0) m = const_m;
            result.body["constants"] = to_json(constants_table(const_d, const_eps, alpha, const_p, m));
        } else if (*scan_cmd) {
            const std::vector<int> sizes = parse_int_list(scan_sizes);
            const std::vector<ExperimentRecord> records =
                gamma_trend_scan(scan_d, scan_delta, sizes, scan_trials, scan_seed, scan_restarts, config);
            json list = json::array();
            double max_lower = 0.0;
            bool sandwich_ok = true;
            for (const auto& r : records) {
                list.push_back(r.to_json());
                max_lower = std::max(max_lower, r.lower);
                if (r.upper && r.lower > *r.upper + 1e-6) sandwich_ok = false;
            }
            result.body["records"] = list;
            result.body["summary"] = {{"max_lower", json_num(max_lower)},
                                      {"lower_within_certificate", sandwich_ok}};
            if (!scan_csv_path.empty()) {
                std::ofstream csv(scan_csv_path);
                if (!csv) throw io_error("cannot write csv: " + scan_csv_path);
                csv << scan_csv(records);
            }
        }
    } catch (const lp_infeasible_error& e) {
        err << "error: " << e.what() << std::endl;
        return 1;
    } catch (const lp_unbounded_error& e) {
        err << "error: " << e.what() << std::endl;
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << std::endl;
        return 1;
    }

    result.body["config"] = config.to_json();
    if (!out_path.empty())
        save_json_file(out_path, result.body);
    else
        out << result.body.dump(2) << std::endl;
    return result.exit_code;
}

} // namespace sgl
