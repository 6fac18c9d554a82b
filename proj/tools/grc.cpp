// Copyright 2026 The grc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grc/acceptance/acceptance.hpp"
#include "grc/adversarial/adversarial.hpp"
#include "grc/bounds.hpp"
#include "grc/codes/gpm.hpp"
#include "grc/codes/pm.hpp"
#include "grc/degreeopt/degreeopt.hpp"
#include "grc/error.hpp"
#include "grc/examples/examples.hpp"
#include "grc/graph/graph.hpp"
#include "grc/graphrepair/graphrepair.hpp"
#include "grc/stacking/stacking.hpp"
#include "grc/version.hpp"

namespace {

using grc::Rational;
using nlohmann::json;

constexpr int kValidationError = 1;
constexpr int kReproductionFailure = 2;

struct Options {
    std::string graph;
    std::string code;
    std::string scheme;
    std::string example;
    std::string out;
    std::string format = "csv";
    std::string beta_list;
    std::string l;
    int n = 0;
    int k = 0;
    int d = 0;
    int f = 0;
    int t_adversary = -1;
    int tensor = 0;
    int trials = 0;
    std::int64_t M = 0;
    std::uint64_t seed = 1;
    bool baseline = false;
    bool json_report = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    json data = json::object();
    json config = json::object();
    bool reproduced = true;
};

std::string str(const Rational& r) { return grc::to_string(r); }
std::string str(bool b) { return b ? "true" : "false"; }

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw grc::ParameterError("bad --beta-list entry '" + item + "'");
        }
    }
    return out;
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw grc::ParameterError("bad rational '" + s + "'");
    }
}

// B of length d: an explicit list or a single value repeated.
std::vector<std::int64_t> beta_vector(const Options& o, int d) {
    if (o.beta_list.empty()) throw grc::ParameterError("--beta-list is required");
    auto b = parse_list(o.beta_list);
    if (b.size() == 1) b.assign(static_cast<std::size_t>(d), b[0]);
    if (b.size() != static_cast<std::size_t>(d)) throw grc::ParameterError("--beta-list needs d entries");
    return b;
}

std::string hash_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw grc::ParameterError("cannot write '" + path + "'");
    os << text;
}

void emit(const Options& o, const std::string& command, Table& t) {
    t.config["command"] = command;
    t.config["seed"] = o.seed;
    json meta{{"version", grc::kVersion},
              {"seed", o.seed},
              {"config_hash", hash_hex(t.config.dump())},
              {"command", command},
              {"config", t.config}};
    if (!t.data.empty()) meta["data"] = t.data;
    if (o.format == "json") {
        json doc = meta;
        doc["rows"] = json::array();
        for (const auto& row : t.rows) {
            json r = json::object();
            for (std::size_t i = 0; i < t.header.size(); ++i) r[t.header[i]] = row[i];
            doc["rows"].push_back(r);
        }
        const std::string text = doc.dump(2) + "\n";
        if (o.out.empty()) std::cout << text;
        else write_text(o.out, text);
        return;
    }
    std::string text;
    for (std::size_t i = 0; i < t.header.size(); ++i) text += (i ? "," : "") + csv_escape(t.header[i]);
    text += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + csv_escape(row[i]);
        text += "\n";
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_text(o.out, text);
        write_text(o.out + ".meta.json", meta.dump(2) + "\n");
    }
}

grc::graph::StorageGraph load_graph(const Options& o, std::optional<grc::examples::Example>& ex) {
    if (!o.example.empty()) {
        ex = grc::examples::get(o.example);
        return ex->graph;
    }
    if (o.graph.empty()) throw grc::ParameterError("either --example or --graph is required");
    return grc::graph::parse_graph(o.graph);
}

std::string graph_label(const Options& o) { return o.example.empty() ? o.graph : o.example; }

std::string example_summary(const grc::examples::Example& ex) {
    std::ostringstream os;
    os << ex.name << ": " << grc::examples::to_string(ex.code) << " code with n=" << ex.graph.n() << " k=" << ex.k
       << " d=" << ex.d;
    if (ex.code == grc::examples::CodeKind::gpm) os << " t=" << ex.t;
    os << ", failed node " << ex.f << ", " << ex.graph.edge_count() << " edges";
    return os.str();
}

// ---- bounds ----

Table cmd_bounds(const Options& o) {
    grc::CodeParams p;
    std::optional<grc::examples::Example> ex;
    if (!o.example.empty()) {
        ex = grc::examples::get(o.example);
        p.n = ex->graph.n();
        p.k = ex->k;
        p.d = ex->d;
        p.B = ex->beta_list;
    } else {
        p.n = o.n;
        p.k = o.k;
        p.d = o.d;
        if (p.d < 1) throw grc::ParameterError("--d must be positive");
        p.B = beta_vector(o, p.d);
    }
    if (o.n > 0) p.n = o.n;
    if (p.k < 1) throw grc::ParameterError("--k must be at least 1");
    if (p.d < p.k) throw grc::ParameterError("--d must be at least k");
    p.l = o.l.empty() ? grc::delta_r(p.B, p.d - p.k + 1) : parse_list(o.l).at(0);
    p.M = o.M > 0 ? o.M : p.k * p.l;
    p.validate();
    const int t = std::max(0, o.t_adversary);
    const auto cut = grc::cutset_bound(p);
    const auto pts = grc::msr_mbr_points(p.n, p.k, p.d, p.B);
    Table tab;
    tab.header = {"quantity", "value"};
    auto row = [&](const std::string& q, const std::string& v) { tab.rows.push_back({q, v}); };
    row("n", std::to_string(p.n));
    row("k", std::to_string(p.k));
    row("d", std::to_string(p.d));
    row("l", std::to_string(p.l));
    row("M", std::to_string(p.M));
    row("t", std::to_string(t));
    row("delta_d-k+1", std::to_string(grc::delta_r(p.B, p.d - p.k + 1)));
    row("omega_t", std::to_string(grc::omega_r(p.B, t)));
    row("cutset", std::to_string(cut.bound));
    row("cutset_satisfied", str(cut.satisfied));
    row("l_msr", std::to_string(pts.l_msr));
    row("l_mbr", std::to_string(pts.l_mbr));
    row("ip_lower_bound", std::to_string(grc::ip_lower_bound(p)));
    row("ip_lower_bound_functional", std::to_string(grc::ip_lower_bound_functional(p)));
    row("adversarial_cut_bound", std::to_string(grc::adversarial_cut_bound(p, t)));
    tab.config = {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"l", p.l}, {"M", p.M}, {"B", p.B}, {"t", t}};
    if (ex) tab.config["example"] = ex->name;
    return tab;
}

// ---- simulate ----

struct CodeChoice {
    std::optional<grc::codes::LinearCode> linear;
    std::optional<grc::stacking::StackedCode> stacked;
    json description;
};

CodeChoice build_code(const std::string& kind, int n, int k, int d, int tensor, const std::vector<std::int64_t>& B) {
    CodeChoice c;
    if (kind == "pm") {
        if (d != 0 && d != 2 * (k - 1)) throw grc::ParameterError("product-matrix codes need d = 2(k-1)");
        c.linear = grc::codes::PmCode::with_default_points(n, k).linear();
        c.description = {{"kind", "pm"}, {"n", n}, {"k", k}, {"d", 2 * (k - 1)}};
    } else if (kind == "gpm") {
        if (tensor < 2) throw grc::ParameterError("generalized product-matrix codes need --tensor >= 2");
        const auto code = grc::codes::GpmCode::with_default_points(n, k, tensor);
        if (d != 0 && d != code.d()) throw grc::ParameterError("--d does not match the generalized code");
        c.linear = code.linear();
        c.description = {{"kind", "gpm"}, {"n", n}, {"k", k}, {"d", code.d()}, {"t", tensor}};
    } else if (kind == "stacked") {
        auto spec = grc::stacking::build_stack(n, k, d, B);
        c.description = {{"kind", "stacked"}, {"stack", spec.to_json()}};
        c.stacked.emplace(std::move(spec));
    } else {
        throw grc::ParameterError("--code must be pm, gpm or stacked");
    }
    return c;
}

Table cmd_simulate(const Options& o) {
    std::optional<grc::examples::Example> ex;
    const auto g = load_graph(o, ex);
    int k = ex ? ex->k : o.k;
    int d = ex ? ex->d : o.d;
    const int f = ex ? ex->f : o.f;
    if (k < 1) throw grc::ParameterError("--k must be at least 1");
    std::string kind = ex ? grc::examples::to_string(ex->code) : o.code;
    if (kind.empty()) throw grc::ParameterError("--code is required without --example");
    std::vector<std::int64_t> B;
    const int tensor = ex ? ex->t : o.tensor;
    if (kind == "pm" && d == 0) d = 2 * (k - 1);
    if (kind == "stacked") B = ex ? ex->beta_list : beta_vector(o, d);
    auto code = build_code(kind, g.n(), k, d, tensor, B);
    if (kind == "gpm") d = code.description["d"];
    if (d < k || d > g.n() - 1) throw grc::ParameterError("--d must satisfy k <= d <= n-1");
    const auto helpers = ex ? ex->helpers : grc::graph::nearest_helpers(g, f, d);

    std::vector<grc::graphrepair::Scheme> schemes;
    if (!o.scheme.empty()) {
        schemes.push_back(grc::graphrepair::parse_scheme(o.scheme));
    } else {
        const bool uniform = B.empty() || std::all_of(B.begin(), B.end(), [&](auto b) { return b == B[0]; });
        schemes.push_back(uniform ? grc::graphrepair::Scheme::ip_u : grc::graphrepair::Scheme::ip_nu);
    }
    if (o.baseline && !ex) throw grc::ParameterError("--baseline needs --example");
    if (o.baseline && ex->t < 1) throw grc::ParameterError("--baseline applies to examples with an adversary budget");
    if (o.baseline && kind != "stacked") throw grc::ParameterError("--baseline applies to stacked examples");
    if (o.baseline) schemes = {grc::graphrepair::Scheme::af_u, grc::graphrepair::Scheme::ip_u};

    const int trials = o.trials > 0 ? o.trials : 1;
    Table tab;
    tab.header = {"graph", "f", "D-size", "scheme", "total", "verified"};
    const auto field = code.linear ? code.linear->field() : code.stacked->field();
    const int M = code.linear ? code.linear->M() : code.stacked->M();
    for (auto scheme : schemes) {
        std::mt19937_64 rng(o.seed);
        bool verified = true;
        Rational total(0);
        json report;
        for (int trial = 0; trial < trials; ++trial) {
            grc::codes::Vec file(static_cast<std::size_t>(M));
            for (auto& x : file) x = static_cast<grc::gf::Symbol>(rng() % field->order());
            const auto res = code.linear
                                 ? grc::graphrepair::simulate_repair(g, *code.linear, code.linear->encode(file), f,
                                                                     helpers, scheme)
                                 : grc::graphrepair::simulate_repair(g, *code.stacked, code.stacked->encode(file), f,
                                                                     helpers, scheme);
            verified = verified && res.verified();
            if (trial == 0) {
                total = res.measured.total;
                report = res.measured.to_json();
            }
        }
        if (ex && !o.baseline && scheme == grc::graphrepair::Scheme::af_u && ex->expected_af)
            tab.reproduced = tab.reproduced && total == *ex->expected_af;
        if (ex && scheme == grc::graphrepair::Scheme::ip_u && ex->expected_ip)
            tab.reproduced = tab.reproduced && total == *ex->expected_ip;
        tab.reproduced = tab.reproduced && verified;
        const std::string name = grc::graphrepair::to_string(scheme);
        if (!(o.baseline && scheme == grc::graphrepair::Scheme::af_u))
            tab.rows.push_back({graph_label(o), std::to_string(f), std::to_string(helpers.size()), name, str(total),
                                str(verified)});
        tab.data["reports"][name] = report;
    }
    if (o.baseline) {
        const std::int64_t beta = B.at(0);
        const int base_d = d - 2 * ex->t;
        const auto base =
            grc::adversarial::af_with_extra_helpers_baseline(g, f, k, base_d, ex->t, beta);
        tab.rows.insert(tab.rows.begin(), {graph_label(o), std::to_string(f), std::to_string(base_d + 2 * ex->t),
                                           "af-u-baseline", str(base.total), "n/a"});
        if (ex->expected_af) tab.reproduced = tab.reproduced && base.total == *ex->expected_af;
        tab.data["reports"]["af-u-baseline"] = base.to_json();
    }
    tab.data["code"] = code.description;
    if (ex) tab.data["example"] = example_summary(*ex);
    tab.config = {{"graph", graph_label(o)}, {"code", code.description}, {"f", f}, {"helpers", helpers},
                  {"trials", trials},        {"baseline", o.baseline}};
    json s = json::array();
    for (auto scheme : schemes) s.push_back(grc::graphrepair::to_string(scheme));
    tab.config["schemes"] = s;
    return tab;
}

// ---- optimize ----

std::map<std::string, std::string> parse_family(const std::string& spec) {
    std::map<std::string, std::string> out;
    const auto colon = spec.find(':');
    std::stringstream ss(colon == std::string::npos ? std::string() : spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw grc::ParameterError("bad graph parameter '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

Table cmd_optimize(const Options& o) {
    Table tab;
    if (o.trials > 0) {
        if (o.graph.rfind("er:", 0) != 0) throw grc::ParameterError("--trials needs an er:n=..,p=.. graph");
        const auto kv = parse_family(o.graph);
        if (!kv.count("n") || !kv.count("p")) throw grc::ParameterError("er graphs need n and p");
        int n = 0;
        double p = 0;
        try {
            n = std::stoi(kv.at("n"));
            p = std::stod(kv.at("p"));
        } catch (const std::exception&) {
            throw grc::ParameterError("bad er parameters");
        }
        const int k = o.k > 0 ? o.k : n / 2;
        const auto row = grc::degreeopt::mc_trials(n, p, k, o.trials, o.seed);
        tab.header = {"n", "p", "k", "trials", "hits", "frequency", "resampled"};
        std::ostringstream ps, fs;
        ps << row.p;
        fs << row.frequency();
        tab.rows.push_back({std::to_string(row.n), ps.str(), std::to_string(row.k), std::to_string(row.trials),
                            std::to_string(row.hits), fs.str(), std::to_string(row.resampled)});
        tab.config = {{"graph", o.graph}, {"n", n}, {"p", p}, {"k", k}, {"trials", o.trials}};
        return tab;
    }
    std::optional<grc::examples::Example> ex;
    const auto g = load_graph(o, ex);
    const int k = o.k > 0 ? o.k : (ex ? ex->k : 0);
    if (k < 1) throw grc::ParameterError("--k must be at least 1");
    const Rational l = o.l.empty() ? Rational(1) : parse_rational(o.l);
    tab.header = {"graph", "f", "k", "l", "d*", "lambda", "scheme"};
    json per_f = json::array();
    for (int f = 0; f < g.n(); ++f) {
        const auto r = grc::degreeopt::optimal_degree_af(g, f, k, l);
        tab.rows.push_back({graph_label(o), std::to_string(f), std::to_string(k), str(l), std::to_string(r.d),
                            str(r.lambda), "af-u"});
        json by_d = json::array();
        for (const auto& x : r.lambda_by_d) by_d.push_back(str(x));
        per_f.push_back({{"f", f}, {"helpers", r.helpers}, {"lambda_by_d", by_d}});
    }
    tab.data["per_node"] = per_f;
    tab.config = {{"graph", graph_label(o)}, {"k", k}, {"l", str(l)}};
    return tab;
}

// ---- adversarial-demo ----

Table cmd_adversarial(const Options& o) {
    Options opt = o;
    if (opt.example.empty() && opt.graph.empty()) opt.example = "fig5";
    std::optional<grc::examples::Example> ex;
    const auto g = load_graph(opt, ex);
    const int k = ex ? ex->k : opt.k;
    const int d = ex ? ex->d : opt.d;
    const int f = ex ? ex->f : opt.f;
    const int t = opt.t_adversary >= 0 ? opt.t_adversary : (ex ? ex->t : 1);
    if (k < 1 || d < k) throw grc::ParameterError("need 1 <= k <= d");
    const auto B = ex && opt.beta_list.empty() ? ex->beta_list : beta_vector(opt, d);
    const auto spec = grc::stacking::build_stack(g.n(), k, d, B);
    const auto code = grc::examples::make_concat(spec, t);
    if (!code.is_systematic(f)) throw grc::ParameterError("the failed node must be one of nodes 0..k-1");
    const auto helpers = ex ? ex->helpers : grc::graph::nearest_helpers(g, f, d);
    const int trials = opt.trials > 0 ? opt.trials : 1;
    const auto& base = *code.inner().field();

    Table tab;
    tab.header = {"trial", "seed", "corrupted", "error_rank", "error_bound", "decoded", "success", "total"};
    json logs = json::array();
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t s = grc::degreeopt::splitmix64(opt.seed + static_cast<std::uint64_t>(trial));
        std::mt19937_64 rng(s);
        grc::codes::Vec file(static_cast<std::size_t>(code.file_size()));
        for (auto& x : file) x = static_cast<grc::gf::Symbol>(rng() % base.order());
        const auto cw = code.encode(file);
        const auto adv =
            grc::adversarial::AdversaryModel::random(helpers, t, code.m(), code.inner().l(), base, rng);
        const auto res = grc::adversarial::adversarial_repair(code, cw, g, f, helpers, adv);
        std::string corrupted;
        for (std::size_t i = 0; i < adv.corrupted.size(); ++i)
            corrupted += (i ? " " : "") + std::to_string(adv.corrupted[i]);
        tab.rows.push_back({std::to_string(trial), std::to_string(s), corrupted, std::to_string(res.error_rank),
                            std::to_string(res.error_bound), str(res.decoded), str(res.success),
                            str(res.report.total)});
        logs.push_back({{"trial", trial},
                        {"seed", s},
                        {"T", adv.corrupted},
                        {"error_rank", res.error_rank},
                        {"error_bound", res.error_bound},
                        {"decoded", res.decoded},
                        {"success", res.success},
                        {"total", str(res.report.total)}});
        tab.reproduced = tab.reproduced && res.success;
    }
    const std::int64_t beta_max = *std::max_element(B.begin(), B.end());
    if (d - 2 * t >= k) {
        const auto baseline = grc::adversarial::af_with_extra_helpers_baseline(g, f, k, d - 2 * t, t, beta_max);
        tab.data["baseline_af_total"] = str(baseline.total);
    }
    tab.data["trials"] = logs;
    tab.data["stack"] = spec.to_json();
    tab.data["outer"] = {{"N", code.outer().N()}, {"K", code.outer().K()}, {"m", code.m()}, {"radius", code.outer().radius()}};
    tab.data["rate"] = code.rate();
    if (ex) tab.data["example"] = example_summary(*ex);
    tab.config = {{"graph", graph_label(opt)}, {"k", k}, {"d", d}, {"B", B}, {"f", f}, {"t", t}, {"trials", trials}};
    return tab;
}

// ---- selftest ----

int cmd_selftest(const Options& o) {
    const auto results = grc::acceptance::run_all(o.seed);
    bool ok = true;
    json report = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        report.push_back(r.to_json());
        if (!o.json_report)
            std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                        r.detail.c_str());
    }
    const json doc{{"version", grc::kVersion}, {"seed", o.seed}, {"pass", ok}, {"criteria", report}};
    if (o.json_report) std::cout << doc.dump(2) << "\n";
    if (!o.out.empty()) write_text(o.out, doc.dump(2) + "\n");
    return ok ? 0 : kReproductionFailure;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--graph", o.graph, "graph JSON file, inline JSON or family shorthand");
    sub->add_option("--example", o.example, "named example")->check(CLI::IsMember(grc::examples::names()));
    sub->add_option("--k", o.k, "reconstruction degree");
    sub->add_option("--d", o.d, "repair degree");
    sub->add_option("--beta-list", o.beta_list, "comma-separated downloads, or one value for all helpers");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "output path; CSV output also writes <out>.meta.json");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regenerating codes on graphs: bounds, repair simulation and degree optimization"};
    app.set_version_flag("--version", std::string(grc::kVersion));
    app.require_subcommand(1);
    Options o;

    auto* bounds = app.add_subcommand("bounds", "cutset, IP and adversarial bounds");
    add_common(bounds, o);
    bounds->add_option("--n", o.n, "number of nodes");
    bounds->add_option("--l", o.l, "node size (default: the MSR value)");
    bounds->add_option("--M", o.M, "file size (default: k l)");
    bounds->add_option("--t-adversary", o.t_adversary, "number of adversarial helpers");

    auto* simulate = app.add_subcommand("simulate", "symbol-level repair on a graph");
    add_common(simulate, o);
    simulate->add_option("--code", o.code, "code family")->check(CLI::IsMember({"pm", "gpm", "stacked"}));
    simulate->add_option("--tensor", o.tensor, "tensor order of a generalized product-matrix code");
    simulate->add_option("--scheme", o.scheme, "repair scheme")
        ->check(CLI::IsMember({"af-u", "ip-u", "af-nu", "ip-nu"}));
    simulate->add_option("--f", o.f, "failed node");
    simulate->add_option("--trials", o.trials, "number of random files");
    simulate->add_flag("--baseline", o.baseline, "add the AF baseline with d+2t helpers");

    auto* optimize = app.add_subcommand("optimize", "optimal AF repair degree per node");
    add_common(optimize, o);
    optimize->add_option("--l", o.l, "node size, integer or a/b");
    optimize->add_option("--trials", o.trials, "Monte-Carlo trials over er:n=..,p=.. graphs");

    auto* adversarial = app.add_subcommand("adversarial-demo", "repair with corrupted helpers");
    add_common(adversarial, o);
    adversarial->add_option("--f", o.f, "failed node");
    adversarial->add_option("--t-adversary", o.t_adversary, "number of corrupted helpers");
    adversarial->add_option("--trials", o.trials, "number of trials");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--seed", o.seed, "random seed");
    selftest->add_option("--out", o.out, "write the JSON report here");
    selftest->add_flag("--json", o.json_report, "print a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kValidationError;
    }

    try {
        if (selftest->parsed()) return cmd_selftest(o);
        Table tab;
        std::string command;
        if (bounds->parsed()) {
            command = "bounds";
            tab = cmd_bounds(o);
        } else if (simulate->parsed()) {
            command = "simulate";
            tab = cmd_simulate(o);
        } else if (optimize->parsed()) {
            command = "optimize";
            tab = cmd_optimize(o);
        } else {
            command = "adversarial-demo";
            tab = cmd_adversarial(o);
        }
        emit(o, command, tab);
        if (!tab.reproduced) {
            std::cerr << "error: results differ from the expected values\n";
            return kReproductionFailure;
        }
        return 0;
    } catch (const grc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    }
}
