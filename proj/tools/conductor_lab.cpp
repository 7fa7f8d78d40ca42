// Command-line front end: every engine operation, with human or JSON output.
// Exit codes: 0 success, 1 usage error, 2 engine error.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conlab/catalog.hpp"
#include "conlab/defect.hpp"
#include "conlab/dualizing.hpp"
#include "conlab/error.hpp"
#include "conlab/formulas.hpp"
#include "conlab/germ.hpp"
#include "conlab/nodal.hpp"
#include "conlab/semigroup.hpp"

using nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "human";
    std::optional<int> truncation;
};

std::optional<int> env_truncation() {
    const char* env = std::getenv("CONDUCTOR_LAB_TRUNCATION");
    if (!env || !*env)
        return std::nullopt;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw conlab::Error(conlab::ErrorKind::BadInput,
                            std::string("CONDUCTOR_LAB_TRUNCATION is not an integer: ") + env);
    }
}

void emit(const Options& opt, const ordered_json& j) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Human: flat "key: value" lines, arrays inline.
    for (const auto& [key, value] : j.items()) {
        std::cout << key << ": ";
        if (value.is_string())
            std::cout << value.get<std::string>();
        else
            std::cout << value.dump();
        std::cout << "\n";
    }
}

std::vector<long> parse_generator_token(const std::string& token) {
    std::vector<long> gens;
    std::istringstream is(token);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            gens.push_back(std::stol(part));
        } catch (const std::exception&) {
            throw conlab::Error(conlab::ErrorKind::BadInput,
                                "bad generator '" + part + "' in '" + token + "'");
        }
    }
    return gens;
}

// A germ argument is a preset name or a comma-separated generator list.
conlab::CurveGerm germ_from_token(const std::string& token, std::optional<int> trunc) {
    const auto& presets = conlab::CurveGerm::preset_names();
    for (const auto& p : presets)
        if (token == p)
            return conlab::CurveGerm::preset(token, trunc);
    if (token.find(',') != std::string::npos ||
        (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0])))) {
        const auto s = conlab::NumericalSemigroup::from_generators(parse_generator_token(token));
        return conlab::CurveGerm::from_semigroup(s, trunc);
    }
    throw conlab::Error(conlab::ErrorKind::UnknownPreset,
                        "unknown germ '" + token + "' (presets: node, cusp, tacnode, "
                        "triple_point, smooth; or a generator list like 3,4,5)");
}

conlab::CurveGerm germ_from_args(const std::string& positional, const std::vector<long>& semigroup,
                                 std::optional<int> trunc) {
    if (!semigroup.empty())
        return conlab::CurveGerm::from_semigroup(
            conlab::NumericalSemigroup::from_generators(semigroup), trunc);
    if (positional.empty())
        throw conlab::Error(conlab::ErrorKind::BadInput,
                            "missing germ argument (preset name or --semigroup)");
    return germ_from_token(positional, trunc);
}

ordered_json semigroup_json(const conlab::NumericalSemigroup& s) {
    ordered_json j;
    j["generators"] = s.generators();
    j["gaps"] = s.gaps();
    j["frobenius"] = s.frobenius();
    j["conductor"] = s.conductor();
    j["delta"] = s.delta();
    j["pseudo_frobenius"] = s.pseudo_frobenius();
    j["type"] = s.type();
    j["symmetric"] = s.symmetric();
    return j;
}

ordered_json germ_json(const conlab::CurveGerm& g) {
    ordered_json j;
    j["germ"] = g.name();
    j["branches"] = g.branches();
    j["truncation"] = g.truncation();
    j["delta"] = g.delta();
    j["conductor_exponents"] = g.conductor_exponents();
    j["conductor_colength"] = g.conductor_colength();
    j["gorenstein"] = g.gorenstein();
    return j;
}

ordered_json report_json(const conlab::LocalDefectReport& r) {
    ordered_json j;
    j["germ"] = r.germ_name;
    j["delta"] = r.delta;
    j["conductor_colength"] = r.conductor_colength;
    j["gorenstein"] = r.gorenstein;
    j["cm_type"] = r.cm_type;
    j["type_defect"] = r.type_defect;
    j["conductor_gap_defect"] = r.conductor_gap_defect;
    if (r.paper_claim)
        j["paper_claim"] = *r.paper_claim;
    else
        j["paper_claim"] = nullptr;
    if (r.agrees_with_paper)
        j["agrees"] = *r.agrees_with_paper;
    else
        j["agrees"] = nullptr;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"conductor-lab: exact invariants of curve singularities"};
    app.require_subcommand(1);

    Options opt;
    opt.truncation = env_truncation();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    int trunc_flag = 0;
    auto* trunc_opt =
        app.add_option("--truncation", trunc_flag, "Series truncation override (window size)");

    // semigroup <gens...>
    auto* sg = app.add_subcommand("semigroup", "Numerical semigroup invariants");
    std::vector<long> sg_gens;
    sg->add_option("generators", sg_gens, "Generators, e.g. 4 6 9")->required();

    // germ <preset|gens> [--semigroup ...]
    auto* germ_cmd = app.add_subcommand("germ", "Curve germ invariants");
    std::string germ_token;
    std::vector<long> germ_sg;
    germ_cmd->add_option("germ", germ_token, "Preset name or generator list like 3,4,5");
    germ_cmd->add_option("--semigroup", germ_sg, "Semigroup generators");

    // dualizing <germ>
    auto* dual_cmd = app.add_subcommand("dualizing", "Dualizing-module data of a germ");
    std::string dual_token;
    std::vector<long> dual_sg;
    dual_cmd->add_option("germ", dual_token, "Preset name or generator list");
    dual_cmd->add_option("--semigroup", dual_sg, "Semigroup generators");

    // descent <germ> --eta <polar>
    auto* desc_cmd = app.add_subcommand("descent", "Descent tests for a polar part");
    std::string desc_token, desc_eta;
    std::vector<long> desc_sg;
    desc_cmd->add_option("germ", desc_token, "Preset name or generator list");
    desc_cmd->add_option("--semigroup", desc_sg, "Semigroup generators");
    desc_cmd->add_option("--eta", desc_eta, "Polar part, e.g. \"-1:1\" for dt/t")->required();

    // defect <germ...>
    auto* def_cmd = app.add_subcommand("defect", "Local defect reports and global aggregate");
    std::vector<std::string> def_tokens;
    def_cmd->add_option("germs", def_tokens, "Presets or generator lists");

    // nodal <file>
    auto* nodal_cmd = app.add_subcommand("nodal", "Nodal-curve differentials");
    std::string nodal_file;
    nodal_cmd->add_option("file", nodal_file, "Curve description JSON file")->required();

    // formulas rr|ribbon|quotient
    auto* form_cmd = app.add_subcommand("formulas", "Closed-form dimension formulas");
    form_cmd->require_subcommand(1);
    auto* rr_cmd = form_cmd->add_subcommand("rr", "Riemann-Roch dimensions");
    long rr_genus = 0;
    std::optional<long> rr_degree;
    std::string rr_kind = "general";
    rr_cmd->add_option("--genus", rr_genus, "Genus")->required();
    long rr_degree_flag = 0;
    auto* rr_deg_opt = rr_cmd->add_option("--degree", rr_degree_flag, "Bundle degree");
    rr_cmd->add_option("--kind", rr_kind, "Bundle kind")
        ->check(CLI::IsMember({"general", "structure", "canonical", "bicanonical", "anticanonical"}));
    auto* ribbon_cmd = form_cmd->add_subcommand("ribbon", "Ribbon moduli dimensions");
    long ribbon_genus = 0, ribbon_degi = 0;
    bool ribbon_split = false;
    ribbon_cmd->add_option("--genus", ribbon_genus, "Genus of the underlying curve")->required();
    long ribbon_degi_flag = 0;
    auto* ribbon_degi_opt =
        ribbon_cmd->add_option("--deg-i", ribbon_degi_flag, "Degree of the nilpotent ideal sheaf");
    ribbon_cmd->add_flag("--split", ribbon_split, "Split ribbon");
    auto* quot_cmd = form_cmd->add_subcommand("quotient", "Cyclic-quotient Gorenstein test");
    std::vector<long> quot_params;
    quot_cmd->add_option("params", quot_params, "r a b")->expected(3);

    // catalog report
    auto* cat_cmd = app.add_subcommand("catalog", "Worked-example registry");
    auto* cat_report = cat_cmd->add_subcommand("report", "Computed-vs-claimed comparison");

    // Parent-level --format/--truncation remain usable after a subcommand name.
    for (CLI::App* sub : {sg, germ_cmd, dual_cmd, desc_cmd, def_cmd, nodal_cmd, form_cmd, rr_cmd,
                          ribbon_cmd, quot_cmd, cat_cmd, cat_report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e); // prints help text or a one-line diagnostic
        return rc == 0 ? 0 : 1;
    }
    if (*trunc_opt)
        opt.truncation = trunc_flag;

    if (*sg) {
        emit(opt, semigroup_json(conlab::NumericalSemigroup::from_generators(sg_gens)));
        return 0;
    }
    if (*germ_cmd) {
        emit(opt, germ_json(germ_from_args(germ_token, germ_sg, opt.truncation)));
        return 0;
    }
    if (*dual_cmd) {
        const auto g = germ_from_args(dual_token, dual_sg, opt.truncation);
        const auto basis = conlab::omega_polar_basis(g);
        const auto min_gens = conlab::omega_min_generators(g);
        ordered_json j;
        j["germ"] = g.name();
        ordered_json pb = ordered_json::array();
        for (const auto& p : basis)
            pb.push_back(p.str());
        j["polar_basis"] = pb;
        ordered_json mg = ordered_json::array();
        for (const auto& d : min_gens.generators)
            mg.push_back(d.str());
        j["min_generators"] = mg;
        j["cm_type"] = min_gens.cm_type;
        if (!min_gens.semigroup_exponents.empty())
            j["semigroup_generator_exponents"] = min_gens.semigroup_exponents;
        emit(opt, j);
        return 0;
    }
    if (*desc_cmd) {
        const auto g = germ_from_args(desc_token, desc_sg, opt.truncation);
        const auto eta = conlab::PolarPart::parse(desc_eta, g.branches());
        ordered_json j;
        j["germ"] = g.name();
        j["eta"] = eta.str();
        j["conductor_level"] = conlab::conductor_level_test(g, eta) ? "pass" : "fail";
        j["descent"] = conlab::descent_test(g, eta) ? "pass" : "fail";
        emit(opt, j);
        return 0;
    }
    if (*def_cmd) {
        std::vector<conlab::LocalDefectReport> locals;
        for (const auto& token : def_tokens)
            locals.push_back(conlab::local_defect(germ_from_token(token, opt.truncation)));
        const auto global = conlab::global_defect(std::move(locals));
        ordered_json j;
        ordered_json ls = ordered_json::array();
        for (const auto& l : global.locals)
            ls.push_back(report_json(l));
        j["locals"] = ls;
        j["total_defect"] = global.total_defect;
        j["codim_delta"] = global.codim_delta;
        ordered_json strata = ordered_json::array();
        for (long k = 1; k <= std::max<long>(global.total_defect, 1); ++k) {
            strata.push_back(
                ordered_json{{"k", k}, {"member_of_Delta_k", global.in_stratum(k)}});
        }
        j["strata"] = strata;
        emit(opt, j);
        return 0;
    }
    if (*nodal_cmd) {
        std::ifstream in(nodal_file);
        if (!in)
            throw conlab::Error(conlab::ErrorKind::BadInput,
                                "cannot open curve file '" + nodal_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        const auto curve = conlab::NodalCurve::from_json(buf.str());
        const auto graph = conlab::dual_graph(curve);
        std::vector<conlab::NodeSelection> all;
        for (int i = 0; i < static_cast<int>(curve.nodes().size()); ++i)
            all.push_back({i, 0});
        ordered_json j;
        j["h0_omega"] = conlab::nodal_h0_omega(curve);
        j["dual_graph"] = ordered_json{{"vertices", graph.vertices},
                                       {"edges", graph.edges},
                                       {"connected", graph.connected},
                                       {"connected_components", graph.connected_components},
                                       {"cycle_rank", graph.cycle_rank}};
        j["residue_rank_full_selection"] = conlab::residue_rank(curve, all);
        emit(opt, j);
        return 0;
    }
    if (*form_cmd) {
        if (*rr_cmd) {
            if (*rr_deg_opt)
                rr_degree = rr_degree_flag;
            conlab::RRQuery q;
            q.genus = rr_genus;
            q.degree = rr_degree;
            const auto kind = conlab::bundle_kind_from_string(rr_kind);
            q.kind = *kind;
            const auto dims = conlab::rr_dims(q);
            ordered_json j;
            j["genus"] = q.genus;
            j["kind"] = rr_kind;
            j["degree"] = dims.degree;
            j["h0"] = dims.h0 ? ordered_json(*dims.h0) : ordered_json("undetermined");
            j["h1"] = dims.h1 ? ordered_json(*dims.h1) : ordered_json("undetermined");
            emit(opt, j);
            return 0;
        }
        if (*ribbon_cmd) {
            ribbon_degi = *ribbon_degi_opt ? ribbon_degi_flag : 2 - 2 * ribbon_genus;
            const auto dim = conlab::ribbon_ext_dim(ribbon_genus, ribbon_degi);
            ordered_json j;
            j["genus"] = ribbon_genus;
            j["deg_i"] = ribbon_degi;
            j["ext_dim"] = dim ? ordered_json(*dim) : ordered_json("undetermined");
            j["local_defect"] = conlab::ribbon_local_defect(ribbon_split);
            emit(opt, j);
            return 0;
        }
        if (*quot_cmd) {
            const auto q =
                conlab::cyclic_quotient_gorenstein(quot_params[0], quot_params[1], quot_params[2]);
            ordered_json j;
            j["r"] = q.r;
            j["a"] = q.a;
            j["b"] = q.b;
            j["gorenstein"] = q.gorenstein;
            j["claimed_defect"] = q.claimed_defect;
            j["gcd_r_a"] = q.gcd_ra;
            j["gcd_r_b"] = q.gcd_rb;
            emit(opt, j);
            return 0;
        }
    }
    if (*cat_cmd) {
        if (*cat_report) {
            const auto format = opt.format == "json" ? conlab::ReportFormat::json
                                                     : conlab::ReportFormat::table;
            std::cout << conlab::catalog_report(format, opt.truncation);
            return 0;
        }
        throw conlab::Error(conlab::ErrorKind::BadInput, "catalog needs a subcommand: report");
    }
    throw conlab::Error(conlab::ErrorKind::BadInput, "no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const conlab::Error& e) {
        const bool usage = e.kind() == conlab::ErrorKind::UnknownPreset ||
                           e.kind() == conlab::ErrorKind::BadInput;
        std::cerr << (usage ? "usage error" : "engine error") << " [" << e.code()
                  << "]: " << e.what() << "\n";
        return usage ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "engine error [internal]: " << e.what() << "\n";
        return 2;
    }
}
