#include "crepant/report.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <limits>
#include <sstream>

#include "crepant/cohomology.hpp"
#include "crepant/crepancy.hpp"
#include "crepant/group_rep.hpp"
#include "crepant/sod.hpp"
#include "crepant/tilting.hpp"

namespace crepant::cli {

namespace {

Json to_json(const Int& v) {
    // report values are small in practice; fall back to a string if not
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

Json to_json(const HilbertSeries& s) {
    Json arr = Json::array();
    for (int k = 0; k <= s.truncation; ++k) arr.push_back(to_json(s[k]));
    return arr;
}

Json check(const std::string& name, const std::string& status, Json data,
           const std::string& witness = {}) {
    Json c;
    c["name"] = name;
    c["status"] = status;
    if (!witness.empty()) c["witness"] = witness;
    c["data"] = std::move(data);
    return c;
}

int worker_cap() {
    if (const char* env = std::getenv("CREPANT_KIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Run independent check builders, optionally in parallel, and collect the
// results in their original order.
std::vector<Json> run_checks(std::vector<std::function<Json()>> builders) {
    const int cap = worker_cap();
    std::vector<Json> out(builders.size());
    if (cap <= 1) {
        for (size_t i = 0; i < builders.size(); ++i) out[i] = builders[i]();
        return out;
    }
    for (size_t start = 0; start < builders.size(); start += static_cast<size_t>(cap)) {
        std::vector<std::future<Json>> batch;
        const size_t end = std::min(builders.size(), start + static_cast<size_t>(cap));
        for (size_t i = start; i < end; ++i)
            batch.push_back(std::async(std::launch::async, builders[i]));
        for (size_t i = start; i < end; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

Json gorenstein_check(int n, int d) {
    const auto cert = is_gorenstein(CyclicAction::scalar(d, n));
    Json data;
    data["branch"] = cert.branch == GorensteinCertificate::Branch::ScalarCase
                         ? "scalar"
                         : "determinant-character";
    data["weight_sum_mod_d"] = cert.weight_sum_mod_d;
    data["pseudo_reflection"] = cert.has_pseudo_reflection;
    data["d_divides_n"] = n % d == 0;
    data["note"] = cert.note;
    return check("gorenstein", cert.gorenstein ? "pass" : "fail", std::move(data),
                 cert.gorenstein ? "" : "d does not divide n");
}

Json canonical_check(int n, int d) {
    const auto report = canonical_report(n, d);
    Json data;
    data["omega_total_space_twist"] = report.omega_total_space_twist;
    data["trivial"] = report.omega_total_space_twist == 0;
    data["crepant_blowup"] = report.crepant_blowup;
    data["equivariantly_trivial_canonical"] = report.equivariantly_trivial_canonical;
    const bool consistent = (report.omega_total_space_twist == 0) == (d == n);
    return check("canonical_bundle", consistent ? "pass" : "fail", std::move(data));
}

Json discrepancy_check(int n, int d) {
    const auto result = discrepancy(n, d);
    Json data;
    data["numerator"] = result.numerator;
    data["denominator"] = result.denominator;
    data["gorenstein_hypothesis"] = result.gorenstein_hypothesis;
    data["trace"] = result.trace;
    bool ok = result.gorenstein_hypothesis && result.integral() &&
              result.numerator == n / d - 1;
    return check("discrepancy", ok ? "pass" : "fail", std::move(data),
                 result.gorenstein_hypothesis ? "" : "fractional discrepancy, d does not divide n");
}

Json skipped(const std::string& name) {
    Json data;
    data["reason"] = "d does not divide n; check requires the Gorenstein hypothesis";
    return check(name, "skip", std::move(data));
}

Json descent_check(int n, int d) {
    if (n % d != 0) return skipped("descent");
    auto data_list = descent_line_bundles(n, d);
    Json items = Json::array();
    std::vector<bool> seen(static_cast<size_t>(d), false);
    bool ok = static_cast<int>(data_list.size()) == d;
    for (const auto& dd : data_list) {
        Json item;
        item["character"] = dd.character.index;
        item["image_twist"] = dd.image_twist;
        items.push_back(std::move(item));
        if (dd.image_twist != -dd.character.index) ok = false;
        if (dd.image_twist <= 0 && -dd.image_twist < d) seen[static_cast<size_t>(-dd.image_twist)] = true;
    }
    for (bool s : seen) ok = ok && s;
    Json data;
    data["line_bundles"] = std::move(items);
    return check("descent", ok ? "pass" : "fail", std::move(data));
}

Json tilting_json(int n, int d, int M) {
    if (n % d != 0) return skipped("tilting");
    const auto report = tilting_check(n, d, M);
    Json data;
    data["ext_vanishing"] = report.ext_vanishing;
    data["hilbert_match"] = report.hilbert_match;
    data["k0_generation"] = report.k0_generation;
    data["summands"] = report.summands;
    data["k0_rank"] = report.k0_rank;
    data["truncation"] = report.truncation;
    data["grading"] = report.grading_note;
    std::string witness = report.ext_witness.empty() ? report.hilbert_witness : report.ext_witness;
    return check("tilting", report.pass() ? "pass" : "fail", std::move(data), witness);
}

Json sod_json(int n, int d) {
    if (n % d != 0) return skipped("sod");
    const auto report = kuznetsov_sod_check(n, d);
    Json blocks = Json::array();
    for (const auto& b : report.blocks) {
        Json jb;
        jb["level"] = b.level;
        jb["resolved_twists"] = b.twists;  // O_E(kE) = O_E(-k d) already folded in
        blocks.push_back(std::move(jb));
    }
    Json data;
    data["blocks"] = std::move(blocks);
    data["semi_orthogonal"] = report.semi_orthogonal;
    data["t0_orthogonal"] = report.t0_orthogonal;
    data["increasing_member_order_ok"] = report.increasing_member_order_ok;
    data["decreasing_member_order_ok"] = report.decreasing_member_order_ok;
    data["k0_identity"] = report.k0_identity;
    data["k0_block_contribution"] = report.k0_block_contribution;
    data["k0_residual"] = report.k0_residual;
    if (report.t0_is_whole_derived_category) data["t0"] = "T_0 = D^b(Xtilde)";
    std::string witness = report.semi_orthogonality_witness.empty() ? report.t0_witness
                                                                    : report.semi_orthogonality_witness;
    return check("sod", report.pass() ? "pass" : "fail", std::move(data), witness);
}

Json vanishing_sweep(int n, int d) {
    Json items = Json::array();
    bool ok = true;
    for (int j = -(d - 1); j <= d - 1; ++j) {
        const auto v = pushforward_vanishing(n, d, j);
        Json item;
        item["twist"] = j;
        item["vanishes"] = v.vanishes;
        if (!v.vanishes) {
            item["witness_i"] = v.witness_i;
            item["witness_m"] = v.witness_m;
            ok = false;
        }
        items.push_back(std::move(item));
    }
    Json data;
    data["range"] = "|j| <= d-1";
    data["twists"] = std::move(items);
    return check("pushforward_vanishing", ok ? "pass" : "fail", std::move(data));
}

}  // namespace

Json analyze(int n, int d, int max_degree) {
    if (n < 1 || d < 1 || max_degree < 0)
        throw std::invalid_argument("analyze: need n >= 1, d >= 1, max_degree >= 0");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::function<Json()>> builders = {
        [=] { return gorenstein_check(n, d); },
        [=] { return n >= 2 ? canonical_check(n, d) : skipped("canonical_bundle"); },
        [=] { return n >= 2 ? discrepancy_check(n, d) : skipped("discrepancy"); },
        [=] { return descent_check(n, d); },
        [=] { return n >= 2 ? tilting_json(n, d, max_degree) : skipped("tilting"); },
        [=] { return n >= 2 ? sod_json(n, d) : skipped("sod"); },
        [=] { return vanishing_sweep(n, d); },
    };
    std::vector<Json> checks = run_checks(std::move(builders));

    std::string verdict = "pass";
    if (n % d != 0) {
        verdict = "hypothesis-violated";
    } else {
        for (const auto& c : checks)
            if (c.at("status") == "fail") verdict = "fail";
    }

    Json report;
    report["schema"] = kReportSchema;
    report["version"] = kToolVersion;
    Json input;
    input["n"] = n;
    input["d"] = d;
    input["weights"] = CyclicAction::scalar(d, n).weights;
    input["max_degree"] = max_degree;
    report["input"] = std::move(input);
    report["checks"] = checks;
    report["verdict"] = verdict;
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return report;
}

Json molien_report(int d, const std::vector<int>& weights, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("molien: max_degree must be >= 0");
    const auto start = std::chrono::steady_clock::now();
    const CyclicAction action(d, weights);

    Json series = Json::array();
    bool agreement = true;
    for (int j = 0; j < d; ++j) {
        const Character chi(d, j);
        const HilbertSeries direct = covariant_hilbert(action, chi, max_degree);
        const HilbertSeries molien = molien_series(action, chi, max_degree);
        Json item;
        item["character"] = j;
        item["coefficients"] = to_json(direct);
        item["molien_agrees"] = direct == molien;
        if (!(direct == molien)) agreement = false;
        series.push_back(std::move(item));
    }

    const auto cert = is_gorenstein(action);
    Json gorenstein;
    gorenstein["gorenstein"] = cert.gorenstein;
    gorenstein["branch"] = cert.branch == GorensteinCertificate::Branch::ScalarCase
                               ? "scalar"
                               : "determinant-character";
    gorenstein["weight_sum_mod_d"] = cert.weight_sum_mod_d;
    gorenstein["pseudo_reflection"] = cert.has_pseudo_reflection;
    gorenstein["note"] = cert.note;

    Json checks = Json::array();
    Json data;
    data["series"] = std::move(series);
    checks.push_back(check("molien_agreement", agreement ? "pass" : "fail", std::move(data)));
    checks.push_back(check("gorenstein", cert.gorenstein ? "pass" : "fail", std::move(gorenstein)));

    Json report;
    report["schema"] = kReportSchema;
    report["version"] = kToolVersion;
    Json input;
    input["d"] = d;
    input["weights"] = action.weights;
    input["max_degree"] = max_degree;
    report["input"] = std::move(input);
    report["checks"] = std::move(checks);
    report["verdict"] = agreement ? "pass" : "fail";
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return report;
}

int exit_code_for(const Json& report) {
    return report.at("verdict") == "pass" ? 0 : 1;
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    out << "crepant-kit " << report.at("version").get<std::string>() << "\n";
    const auto& input = report.at("input");
    out << "input:";
    for (const auto& [key, value] : input.items()) out << " " << key << "=" << value.dump();
    out << "\n\n";
    for (const auto& c : report.at("checks")) {
        std::string name = c.at("name").get<std::string>();
        std::string status = c.at("status").get<std::string>();
        for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
        out << "  " << name;
        for (size_t i = name.size(); i < 26; ++i) out << ' ';
        out << status;
        if (c.contains("witness")) out << "   " << c.at("witness").get<std::string>();
        out << "\n";
    }
    out << "\nverdict: " << report.at("verdict").get<std::string>() << "\n";
    return out.str();
}

}  // namespace crepant::cli
