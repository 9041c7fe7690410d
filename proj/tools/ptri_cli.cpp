/*
   Copyright 2026 The ptri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   ptri - batch front end for the construction and its checks.

   Subcommands: field-info, planar-test, fa-verify, construct, verify,
   bounds, alt-monomial. Output is JSON (default) or CSV, to stdout or
   --out. Exit status: 0 all checks pass, 1 a check failed, 2 bad usage or
   parameters.
*/

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <ptri/ptri.hpp>
#include <ptri/report.hpp>

namespace {

using namespace ptri;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint64_t q = 3;
    std::vector<std::uint64_t> q_list;
    std::optional<std::uint64_t> a;
    std::string format = "json";
    std::string out;
    unsigned workers = 0;
    bool direct_c4 = false;
    bool bruteforce_triangles = false;
    // planar-test
    unsigned e = 1;
    std::optional<std::uint64_t> exponent;
    std::vector<std::uint64_t> coeffs;
    // alt-monomial
    unsigned alpha = 1;
};

class Output {
   public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw Error(ErrorCode::BadParams, "cannot open " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

   private:
    std::unique_ptr<std::ofstream> file_;
};

void emit_json(const RunConfig& cfg, const std::string& kind, const Json& payload) {
    Output out(cfg.out);
    out.stream() << document(kind, payload).dump(2) << '\n';
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw Error(ErrorCode::BadParams, "format '" + cfg.format + "' not supported by this command");
}

FieldElem parameter(const FieldPtr& f, std::uint64_t encoding) { return f->decode(encoding); }

GraphSpec spec_for(const RunConfig& cfg) {
    FieldPtr f = make_tower(cfg.q);
    if (f->q() < 3) throw Error(ErrorCode::BadParams, "q must be >= 3");
    const FieldElem a = cfg.a ? parameter(f, *cfg.a) : select_parameter(f);
    return make_graph_spec(f, a);
}

int cmd_field_info(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const FieldPtr f = make_tower(cfg.q);
    if (cfg.format == "csv") {
        Output out(cfg.out);
        out.stream() << "p,n,order,q_sub,modulus\n" << f->p() << ',' << f->n() << ',' << f->order() << ',' << f->q()
                     << ',';
        for (std::size_t i = 0; i < f->modulus().size(); ++i) out.stream() << (i ? " " : "") << f->modulus()[i];
        out.stream() << '\n';
    } else {
        emit_json(cfg, "field-info", to_json(*f));
    }
    return kExitOk;
}

int cmd_planar_test(const RunConfig& cfg) {
    require_format(cfg, {"json"});
    const auto pm = prime_power(cfg.q);
    if (!pm) throw Error(ErrorCode::BadParams, "q must be a prime power");
    const FieldPtr f = make_field(pm->first, pm->second * cfg.e);
    Poly poly(f);
    if (cfg.exponent && !cfg.coeffs.empty()) throw Error(ErrorCode::BadParams, "give --exponent or --coeffs, not both");
    if (cfg.exponent) {
        poly = Poly::monomial(f, f->one(), *cfg.exponent);
    } else if (!cfg.coeffs.empty()) {
        std::vector<FieldElem> cs;
        for (std::uint64_t c : cfg.coeffs) cs.push_back(f->decode(c));
        poly = Poly(f, std::move(cs));
    } else {
        throw Error(ErrorCode::BadParams, "planar-test needs --exponent or --coeffs");
    }
    const PlanarReport r = is_planar(poly, cfg.workers);
    Json payload;
    payload["field"] = to_json(*f);
    const Json body = to_json(r);
    for (const auto& [k, v] : body.items()) payload[k] = v;
    emit_json(cfg, "planar-test", payload);
    return kExitOk;
}

int cmd_fa_verify(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const FieldPtr f = make_tower(cfg.q);
    std::vector<SplittingReport> reports;
    if (cfg.a) {
        reports.push_back(verify_fa_splitting(f, parameter(f, *cfg.a)));
    } else {
        reports = verify_fa_splitting_all(f, cfg.workers);
    }
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (cfg.format == "csv") {
        Output out(cfg.out);
        out.stream() << "a,case,distinct_roots,max_multiplicity,splits_in_units,pass\n";
        for (const auto& r : reports) {
            unsigned maxm = 0;
            for (const auto& rm : r.roots) maxm = std::max(maxm, rm.multiplicity);
            out.stream() << f->encode(r.a) << ',' << to_string(r.kase) << ',' << r.roots.size() << ',' << maxm << ','
                         << (r.splits_in_units ? "true" : "false") << ',' << (r.pass ? "true" : "false") << '\n';
        }
    } else {
        Json records = Json::array();
        for (const auto& r : reports) records.push_back(to_json(r));
        Json payload;
        payload["q"] = cfg.q;
        payload["field"] = to_json(*f);
        payload["records"] = std::move(records);
        payload["all_pass"] = all_pass;
        emit_json(cfg, "fa-verify", payload);
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_construct(const RunConfig& cfg) {
    require_format(cfg, {"json", "edgelist"});
    const GraphSpec s = spec_for(cfg);
    if (cfg.format == "edgelist") {
        Output out(cfg.out);
        write_edge_list(s, out.stream());
    } else {
        emit_json(cfg, "construct", to_json(s));
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const GraphSpec s = spec_for(cfg);
    const VerifyReport r = run_verification(s, {cfg.direct_c4, cfg.bruteforce_triangles, cfg.workers});
    if (cfg.format == "csv") {
        Output out(cfg.out);
        out.stream() << verify_csv_header() << '\n' << to_csv_row(r) << '\n';
    } else {
        emit_json(cfg, "verify", to_json(r));
    }
    return r.pass ? kExitOk : kExitCheckFailed;
}

int cmd_bounds(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    if (cfg.q_list.empty()) throw Error(ErrorCode::BadParams, "bounds needs at least one --q");
    std::vector<BoundsRow> rows;
    for (std::uint64_t q : cfg.q_list) rows.push_back(bounds_report(q));
    if (cfg.format == "csv") {
        Output out(cfg.out);
        out.stream() << bounds_csv_header() << '\n';
        for (const auto& r : rows) out.stream() << to_csv_row(r) << '\n';
    } else {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(to_json(r));
        emit_json(cfg, "bounds", Json{{"rows", std::move(list)}});
    }
    return kExitOk;
}

int cmd_alt_monomial(const RunConfig& cfg) {
    require_format(cfg, {"json", "csv"});
    const AltMonomialResult r = experiment_alt_monomial(cfg.q, cfg.alpha, cfg.workers);
    if (cfg.format == "csv") {
        Output out(cfg.out);
        out.stream() << "q,alpha,exponent,a,pair_solutions,triangles,standard_triangles\n"
                     << r.q << ',' << r.alpha << ',' << r.exponent << ',' << r.a << ',' << r.pair_solutions << ','
                     << r.triangles << ',' << r.standard_triangles << '\n';
    } else {
        emit_json(cfg, "alt-monomial", to_json(r));
    }
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_a) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "edgelist"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = available parallelism)");
    if (with_a) sub->add_option("--a", cfg.a, "Parameter a as its integer encoding");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar-monomial 3-partite graphs: construction, C4 checks and triangle counts"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* field_info = app.add_subcommand("field-info", "Describe F_{q^3} over F_q");
    field_info->add_option("--q", cfg.q, "Subfield order (odd prime power)")->required();
    add_common(field_info, cfg, false);

    auto* planar = app.add_subcommand("planar-test", "Test a polynomial over F_{q^e} for planarity");
    planar->add_option("--q", cfg.q, "Base field order (odd prime power)")->required();
    planar->add_option("--e", cfg.e, "Extension degree over F_q")->check(CLI::PositiveNumber);
    planar->add_option("--exponent", cfg.exponent, "Test the monomial X^d");
    planar->add_option("--coeffs", cfg.coeffs, "Coefficient encodings, constant term first")->delimiter(',');
    add_common(planar, cfg, false);

    auto* fa = app.add_subcommand("fa-verify", "Check the splitting of f_a for one or every a");
    fa->add_option("--q", cfg.q, "Subfield order (odd prime power)")->required();
    add_common(fa, cfg, true);

    auto* construct = app.add_subcommand("construct", "Describe G_q(a) or export its edge list");
    construct->add_option("--q", cfg.q, "Subfield order (odd prime power >= 3)")->required();
    add_common(construct, cfg, true);

    auto* verify = app.add_subcommand("verify", "C4 checks and triangle count for G_q(a)");
    verify->add_option("--q", cfg.q, "Subfield order (odd prime power >= 3)")->required();
    verify->add_flag("--direct-c4", cfg.direct_c4, "Also run the explicit pair-table C4 check (q = 3 only)");
    verify->add_flag("--bruteforce-triangles", cfg.bruteforce_triangles,
                     "Also enumerate triangles explicitly (q = 3 only)");
    add_common(verify, cfg, true);

    auto* bounds = app.add_subcommand("bounds", "Table of lower bounds and reference curves");
    bounds->add_option("--q", cfg.q_list, "Subfield orders, repeated or comma separated")->delimiter(',');
    add_common(bounds, cfg, false);

    auto* alt = app.add_subcommand("alt-monomial", "Triangle count with X^{(3^alpha+1)/2} in place of X^{q+1}");
    alt->add_option("--q", cfg.q, "Subfield order (power of 3)")->required();
    alt->add_option("--alpha", cfg.alpha, "alpha >= 1")->required();
    add_common(alt, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*field_info) return cmd_field_info(cfg);
        if (*planar) return cmd_planar_test(cfg);
        if (*fa) return cmd_fa_verify(cfg);
        if (*construct) return cmd_construct(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*bounds) return cmd_bounds(cfg);
        if (*alt) return cmd_alt_monomial(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
