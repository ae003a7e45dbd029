#include "sgl/report_json.hpp"

#include "sgl/graph_io.hpp"

namespace sgl {

using nlohmann::json;

json json_num(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "pass-sampled";
    }
}

} // namespace

json to_json(const PropertyReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    if (r.witness) {
        j["witness"] = {{"subset", r.witness->subset},
                        {"ell", json_num(r.witness->ell)},
                        {"detail", r.witness->detail}};
    } else {
        j["witness"] = nullptr;
    }
    j["coverage"] = r.coverage;
    j["subsets_checked"] = r.subsets_checked;
    json margins;
    for (const auto& [k, v] : r.margins) margins[k] = json_num(v);
    j["margins"] = margins;
    j["flags"] = r.flags;
    return j;
}

json to_json(const ConstantsTable& t) {
    json j;
    j["log_base"] = "e";
    j["d"] = t.d;
    j["eps"] = t.eps;
    j["p"] = t.p;
    j["strict_regime"] = t.strict_regime;
    j["ln_gamma_dp"] = json_num(t.ln_gamma_dp);
    j["gamma_dp_linear"] = json_num(t.gamma_dp_linear);
    j["gamma1"] = json_num(t.gamma1);
    j["ln_gamma2"] = json_num(t.ln_gamma2);
    j["ln_alpha_d"] = json_num(t.ln_alpha_d);
    j["ln_alpha"] = json_num(t.ln_alpha);
    j["alpha_linear"] = json_num(t.alpha);
    j["ell_star"] = t.ell_star;
    j["ln_alpha_tilde"] = json_num(t.ln_alpha_tilde);
    j["ln_eta"] = json_num(t.ln_eta);
    if (t.ln_image_regime_threshold) j["ln_image_regime_threshold"] = json_num(*t.ln_image_regime_threshold);
    if (t.image_regime_met) j["image_regime_met"] = *t.image_regime_met;
    return j;
}

json to_json(const DecompositionReport& r) {
    json j;
    j["m0"] = r.m0;
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    json fibers;
    for (const auto& [img, size] : r.fiber_size_of_image) fibers[std::to_string(img)] = size;
    j["fiber_size_of_image"] = fibers;
    j["threshold_m0"] = json_num(r.threshold_m0);
    j["threshold_m2"] = json_num(r.threshold_m2);
    j["strict_regime"] = r.strict_regime;
    return j;
}

json to_json(const DyadicReport& r) {
    json j;
    j["m0_empty"] = r.m0_empty;
    json classes;
    for (const auto& [rk, verts] : r.classes) classes[std::to_string(rk)] = verts;
    j["classes"] = classes;
    j["r_star"] = r.r_star;
    j["window_low"] = json_num(r.window_low);
    j["image_threshold"] = json_num(r.image_threshold);
    json image_sizes;
    for (const auto& [rk, s] : r.class_image_sizes) image_sizes[std::to_string(rk)] = s;
    j["class_image_sizes"] = image_sizes;
    j["m0_prime"] = r.m0_prime;
    j["m0_double_prime"] = r.m0_double_prime;
    return j;
}

json to_json(const CompressionTrace& t) {
    json j;
    j["n"] = t.n;
    j["m"] = t.m;
    j["eps"] = t.eps;
    j["alpha"] = t.alpha;
    j["seed"] = t.seed;
    j["decomposition"] = to_json(t.decomposition);
    j["dyadic"] = to_json(t.dyadic_report);
    j["f"] = vertex_map_to_json(t.f);
    j["f_hat"] = vertex_map_to_json(t.f_hat);
    j["f_compressed"] = vertex_map_to_json(t.f_compressed);
    j["pivot"] = t.pivot ? json(*t.pivot) : json(nullptr);
    j["edge_sum_f"] = json_num(t.edge_sum_f);
    j["edge_sum_hat"] = json_num(t.edge_sum_hat);
    j["edge_sum_compressed"] = json_num(t.edge_sum_compressed);
    j["pair_sum_f"] = json_num(t.pair_sum_f);
    j["pair_sum_hat"] = json_num(t.pair_sum_hat);
    j["pair_sum_compressed"] = json_num(t.pair_sum_compressed);
    j["expected_pair_sum_compressed"] = json_num(t.expected_pair_sum_compressed);
    j["expected_edge_sum_compressed"] = json_num(t.expected_edge_sum_compressed);
    j["pair_sum_hat_on_m0_prime"] = json_num(t.pair_sum_hat_on_m0_prime);
    j["ln_eta"] = json_num(t.ln_eta_value);
    j["image_regime_met"] = t.image_regime_met;
    json ineqs = json::array();
    for (const auto& r : t.inequalities) {
        ineqs.push_back({{"name", r.name},
                         {"lhs", json_num(r.lhs)},
                         {"rhs", json_num(r.rhs)},
                         {"hypothesis_met", r.hypothesis_met},
                         {"asserted", r.asserted},
                         {"holds", r.holds}});
    }
    j["inequalities"] = ineqs;
    j["layer_sizes"] = t.layer_sizes;
    j["layer_edge_counts"] = t.layer_edge_counts;
    j["atypical_edge_counts"] = t.atypical_edge_counts;
    j["typical_layer_sizes"] = t.typical_layer_sizes;
    j["k0"] = t.k0 ? json(*t.k0) : json(nullptr);
    return j;
}

json to_json(const ApproximatorReport& r) {
    json j;
    j["k"] = r.k;
    j["edge_count"] = r.edge_count;
    j["ratio_min"] = json_num(r.ratio_min);
    j["ratio_max"] = json_num(r.ratio_max);
    j["spread"] = json_num(r.spread);
    j["s_lower"] = json_num(r.s_lower);
    j["s_upper"] = r.s_upper ? json_num(*r.s_upper) : json(nullptr);
    j["d_bound"] = r.d_bound ? json_num(*r.d_bound) : json(nullptr);
    j["pass"] = r.pass ? json(*r.pass) : json(nullptr);
    j["degenerate_tuples"] = r.degenerate_tuples;
    j["tuples_checked"] = r.tuples_checked;
    j["coverage"] = r.coverage;
    return j;
}

json to_json(const GammaEstimate& e) {
    json j;
    j["lower"] = json_num(e.lower);
    j["upper"] = json_num(e.upper);
    j["exact"] = e.exact;
    j["provenance"] = e.provenance;
    j["witness"] = e.lower_witness ? vertex_map_to_json(*e.lower_witness) : json(nullptr);
    if (e.provenance == "l1-distortion certificate") {
        j["l1_distortion"] = json_num(e.l1_distortion);
        j["classical_gamma"] = json_num(e.classical);
        j["lambda2"] = json_num(e.lambda_2);
        j["spectral_expander"] = e.spectral_expander;
        j["restricted_image_bound"] = json_num(e.restricted_image_bound);
        j["restricted_image_eps"] = e.restricted_image_eps;
    }
    return j;
}

json to_json(const CheegerSandwich& c) {
    return {{"lower", json_num(c.lower)},
            {"h", json_num(c.h)},
            {"upper", json_num(c.upper)},
            {"pass", c.pass}};
}

json to_json(const MetricSummary& s) {
    return {{"connected", s.connected},
            {"diameter", json_num(s.diameter)},
            {"average_distance", json_num(s.average_distance)}};
}

json to_json(const ExpansionReport& r) {
    return {{"cut_edges", json_num(r.cut_edges)},
            {"cut_bound", json_num(r.cut_bound)},
            {"boundary_vertices", json_num(r.boundary_vertices)},
            {"boundary_bound", json_num(r.boundary_bound)},
            {"lambda2", json_num(r.lambda_2)},
            {"holds", r.holds}};
}

json to_json(const StrengthenedExpansionReport& r) {
    return {{"ball_size", json_num(r.ball_size)},
            {"ln_threshold", json_num(r.ln_threshold)},
            {"ln_alpha_tilde", json_num(r.ln_alpha_tilde)},
            {"holds", r.holds}};
}

json to_json(const CutEmbedding& e) {
    json cuts = json::array();
    for (std::size_t c = 0; c < e.cut_masks.size(); ++c) {
        std::vector<int> members;
        for (int i = 0; i < e.k; ++i)
            if ((e.cut_masks[c] >> i) & 1u) members.push_back(i);
        cuts.push_back({{"cut", members}, {"weight", json_num(e.weights[c])}});
    }
    return {{"k", e.k}, {"distortion", json_num(e.distortion)}, {"cuts", cuts}};
}

json to_json(const IdentityCheck& c) {
    return {{"lhs", json_num(c.lhs)}, {"rhs", json_num(c.rhs)}, {"pass", c.pass}};
}

json to_json(const ImageBoundCheck& c) {
    return {{"max_image_size", c.max_image_size},
            {"bound", json_num(c.bound)},
            {"pass", c.pass},
            {"image_regime_met", c.image_regime_met}};
}

json to_json(const QuotientIdentity& q) {
    return {{"lhs", json_num(q.lhs)}, {"rhs", json_num(q.rhs)}, {"pass", q.pass}};
}

json to_json(const TwoSidedCheck& c) {
    return {{"pass", c.pass},
            {"a", json_num(c.a)},
            {"b", json_num(c.b)},
            {"left_holds", c.left_holds},
            {"right_holds", c.right_holds}};
}

json to_json(const ExtrapolationBound& b) {
    return {{"value", json_num(b.value)},
            {"log_value", json_num(b.log_value)},
            {"exp_branch", b.exp_branch}};
}

} // namespace sgl
