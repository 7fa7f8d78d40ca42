#include "conlab/catalog.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "conlab/defect.hpp"
#include "conlab/dualizing.hpp"
#include "conlab/error.hpp"
#include "conlab/formulas.hpp"
#include "conlab/germ.hpp"
#include "conlab/nodal.hpp"
#include "conlab/semigroup.hpp"

namespace conlab {

namespace {

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_int(long v) { return std::to_string(v); }

std::string fmt_set(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::string fmt_tuple(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

NodalCurve build_nodal(const std::string& builder) {
    using C = NodalCurve::Component;
    if (builder == "banana") {
        return NodalCurve({C{"A", {Rational(0), Rational(1)}}, C{"B", {Rational(0), Rational(1)}}},
                          {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}});
    }
    if (builder.rfind("self_nodes_", 0) == 0) {
        const int k = std::stoi(builder.substr(11));
        C comp{"A", {}};
        std::vector<NodalCurve::Node> nodes;
        for (int i = 0; i < k; ++i) {
            comp.points.push_back(Rational(2 * i));
            comp.points.push_back(Rational(2 * i + 1));
            nodes.push_back({{0, 2 * i}, {0, 2 * i + 1}});
        }
        return NodalCurve({comp}, std::move(nodes));
    }
    throw Error(ErrorKind::BadInput, "unknown nodal builder '" + builder + "'");
}

// Computes one invariant of one entry; the germ is built at most once.
class EntryComputer {
public:
    EntryComputer(const CatalogEntry& entry, std::optional<int> trunc)
        : entry_(entry), trunc_(trunc) {}

    std::string compute(const std::string& invariant) {
        if (invariant == "gaps")
            return fmt_set(semigroup().gaps());
        if (invariant == "conductor")
            return fmt_int(semigroup().conductor());
        if (invariant == "conductor_exponents")
            return fmt_tuple(germ().conductor_exponents());
        if (invariant == "delta")
            return fmt_int(germ().delta());
        if (invariant == "gorenstein")
            return fmt_bool(germ().gorenstein());
        if (invariant == "type_defect")
            return fmt_int(local().type_defect);
        if (invariant == "cm_type")
            return fmt_int(local().cm_type);
        if (invariant == "omega_generator_exponents") {
            std::vector<long> exps;
            for (const auto& gen : omega_min_generators(germ()).generators)
                for (const auto& [e, c] : gen.branches.front())
                    if (!c.is_zero())
                        exps.push_back(e);
            return fmt_set(std::move(exps));
        }
        if (invariant == "descent_dt_over_t")
            return fmt_bool(descent_test(germ(), dt_over_t()));
        if (invariant == "conductor_level_dt_over_t")
            return fmt_bool(conductor_level_test(germ(), dt_over_t()));
        if (invariant == "h0_omega")
            return fmt_int(nodal_h0_omega(build_nodal(entry_.nodal_builder)));
        if (invariant == "residue_rank") {
            const NodalCurve x = build_nodal(entry_.nodal_builder);
            std::vector<NodeSelection> sel;
            for (int i = 0; i < static_cast<int>(x.nodes().size()); ++i)
                sel.push_back({i, 0});
            return fmt_int(residue_rank(x, sel));
        }
        if (invariant == "epsilon")
            return fmt_int(ribbon_local_defect());
        if (invariant == "ribbon_moduli_dim") {
            const auto dim = ribbon_ext_dim(entry_.ribbon_genus, 2 - 2 * entry_.ribbon_genus);
            return dim ? fmt_int(*dim) : std::string("undetermined");
        }
        if (invariant == "quotient_gorenstein")
            return fmt_bool(
                cyclic_quotient_gorenstein(entry_.quotient_r, entry_.quotient_a, entry_.quotient_b)
                    .gorenstein);
        if (invariant == "quotient_defect")
            return fmt_int(
                cyclic_quotient_gorenstein(entry_.quotient_r, entry_.quotient_a, entry_.quotient_b)
                    .claimed_defect);
        throw Error(ErrorKind::BadInput, "unknown invariant '" + invariant + "'");
    }

private:
    const NumericalSemigroup& semigroup() {
        if (!semigroup_)
            semigroup_ = NumericalSemigroup::from_generators(entry_.semigroup_generators);
        return *semigroup_;
    }

    const CurveGerm& germ() {
        if (!germ_) {
            if (entry_.kind == CatalogEntry::Kind::preset)
                germ_ = CurveGerm::preset(entry_.preset, trunc_);
            else
                germ_ = CurveGerm::from_semigroup(semigroup(), trunc_);
        }
        return *germ_;
    }

    const LocalDefectReport& local() {
        if (!local_)
            local_ = local_defect(germ());
        return *local_;
    }

    PolarPart dt_over_t() const { return PolarPart::parse("-1:1", 1); }

    const CatalogEntry& entry_;
    std::optional<int> trunc_;
    std::optional<NumericalSemigroup> semigroup_;
    std::optional<CurveGerm> germ_;
    std::optional<LocalDefectReport> local_;
};

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;
    auto add = [&out](CatalogEntry e) { out.push_back(std::move(e)); };

    {
        CatalogEntry e{"smooth", CatalogEntry::Kind::preset};
        e.preset = "smooth";
        e.claims = {{"type_defect", "0", "Intro, \"All smooth curves lie\""}};
        add(std::move(e));
    }
    {
        CatalogEntry e{"node", CatalogEntry::Kind::preset};
        e.preset = "node";
        e.claims = {
            {"type_defect", "0", "S4.4 Case 1, \"Nodes never contribute\""},
            {"type_defect", "0", "App. B table, \"Node & smooth (2 points) & 0\""},
            {"conductor_exponents", "(1,1)", "S4.3, \"conductor ideal equals the maximal ideal\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"cusp", CatalogEntry::Kind::preset};
        e.preset = "cusp";
        e.claims = {
            {"type_defect", "0", "S4.4 Case 2, \"delta_deg(x) = 0\""},
            {"conductor_exponents", "(2)", "S4.4 Case 2, \"The conductor is (t^2)\""},
            {"delta", "1", "App. B, \"delta invariant of a cusp is delta = 1\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"tacnode", CatalogEntry::Kind::preset};
        e.preset = "tacnode";
        e.claims = {
            {"type_defect", "0", "S4.4 Case 3, \"delta_deg(x) = 0\""},
            {"type_defect", "2", "App. B table, \"Tacnode & smooth (2 points) & 2\""},
            {"conductor_exponents", "(4,4)", "S4.4 Case 3, \"The conductor is (t^4)+(s^4)\""},
            {"delta", "2", "App. B, \"the tacnode has delta = 2\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"triple_point", CatalogEntry::Kind::preset};
        e.preset = "triple_point";
        e.claims = {
            {"type_defect", "2", "S4.6 Ex. 3, \"epsilon(x) = 2\""},
            {"cm_type", "2", "S4.6 Ex. 3, \"requires two generators\""},
            {"conductor_exponents", "(1,1,1)", "S4.6 Ex. 3, \"c_x = (x,y,z)\""},
            {"gorenstein", "false", "S4.6 Ex. 3, \"hence it is not invertible\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"<3,4,5>", CatalogEntry::Kind::semigroup};
        e.semigroup_generators = {3, 4, 5};
        e.claims = {
            {"gorenstein", "false", "App. A, \"hence not Gorenstein\""},
            {"type_defect", "1", "App. A, \"delta_deg(x) = 1\""},
            {"conductor_exponents", "(3)", "App. A, \"c_x = (t^3)\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"dualizing<3,4,5>", CatalogEntry::Kind::dualizing_semigroup};
        e.semigroup_generators = {3, 4, 5};
        e.claims = {
            {"omega_generator_exponents", "{-2,-1}", "S7, \"omega_A = <t^-2 dt, t^-1 dt>_A\""},
            {"descent_dt_over_t", "false", "S7, \"does not descend\""},
            {"conductor_level_dt_over_t", "true", "S7, \"passes the conductor-level test\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"<4,5,6>", CatalogEntry::Kind::semigroup};
        e.semigroup_generators = {4, 5, 6};
        e.claims = {
            {"gorenstein", "false", "S4.6 Ex. 1, \"(X,x) is non-Gorenstein\""},
            {"type_defect", "1", "S4.6 Ex. 1, \"epsilon(x) = 1\""},
            {"conductor_exponents", "(8)", "S4.6 Ex. 1, \"c_x = (t^8)\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"<4,6,9>", CatalogEntry::Kind::semigroup};
        e.semigroup_generators = {4, 6, 9};
        e.claims = {
            {"gaps", "{1,2,3,5,7,11}", "S7.1, \"gaps are {1,2,3,5,7,11}\""},
            {"conductor", "12", "S7.1, \"in our example c=12\""},
            {"gorenstein", "false", "S7.1, \"A is non-Gorenstein\""},
            {"type_defect", "2", "S7.1, \"delta_deg(x)=2\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"<5,7,9>", CatalogEntry::Kind::semigroup};
        e.semigroup_generators = {5, 7, 9};
        e.claims = {
            {"gaps", "{1,2,3,4,6,8,11,13}", "S7.2, \"gaps are {1,2,3,4,6,8,11,13}\""},
            {"conductor", "14", "S7.2, \"c=14\""},
            {"gorenstein", "false", "S7.2, \"Non-Gorenstein Monomial Curves\""},
            {"type_defect", "3", "S7.2, \"delta_deg(x)=3\""},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"ribbon", CatalogEntry::Kind::ribbon};
        e.ribbon_genus = 2;
        e.claims = {
            {"epsilon", "1", "S4.6 Ex. 2, \"epsilon(x)=1\""},
            {"epsilon", "1", "App. B table, \"Ribbon & smooth curve & 1\""},
            {"ribbon_moduli_dim", "3", "App. B, \"= 3g - 3\" at g=2"},
        };
        add(std::move(e));
    }
    {
        CatalogEntry e{"cyclic_quotient(3,1,2)", CatalogEntry::Kind::quotient};
        e.quotient_r = 3;
        e.quotient_a = 1;
        e.quotient_b = 2;
        e.claims = {
            {"quotient_gorenstein", "false", "S6.1, \"1+a+b != 0 (mod r)\""},
            {"quotient_defect", "2", "S6.1, \"defect(x) = r - 1\""},
        };
        add(std::move(e));
    }
    // The S6 bookkeeping rows carry the claimed rank delta - 1 and
    // h0 = g - delta + 1 at g = 0 against the rational-nodal oracle.
    {
        CatalogEntry e{"banana", CatalogEntry::Kind::nodal};
        e.nodal_builder = "banana";
        e.claims = {
            {"h0_omega", "-1", "S6, \"= g - (delta - 1)\" at (g,delta)=(0,2)"},
            {"residue_rank", "1", "S6, \"dim_k Im(Res) = delta - 1\" at delta=2"},
        };
        add(std::move(e));
    }
    for (int k = 1; k <= 3; ++k) {
        CatalogEntry e{"irreducible_" + std::to_string(k) + "_nodes", CatalogEntry::Kind::nodal};
        e.nodal_builder = "self_nodes_" + std::to_string(k);
        e.claims = {
            {"h0_omega", std::to_string(0 - k + 1),
             "S6, \"= g - (delta - 1)\" at (g,delta)=(0," + std::to_string(k) + ")"},
            {"residue_rank", std::to_string(k - 1),
             "S6, \"dim_k Im(Res) = delta - 1\" at delta=" + std::to_string(k)},
        };
        add(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::vector<ReportRow> catalog_report_rows(std::optional<int> truncation) {
    std::vector<ReportRow> rows;
    for (const auto& entry : catalog_entries()) {
        EntryComputer comp(entry, truncation);
        for (const auto& claim : entry.claims) {
            ReportRow row;
            row.entry = entry.name;
            row.invariant = claim.invariant;
            try {
                row.computed = comp.compute(claim.invariant);
            } catch (const Error& e) {
                throw Error(e.kind(), "entry '" + entry.name + "': " + e.what());
            }
            row.claimed = claim.claimed;
            row.citation = claim.citation;
            row.agrees = row.computed == row.claimed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string catalog_report(ReportFormat format, std::optional<int> truncation) {
    const auto rows = catalog_report_rows(truncation);
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            j.push_back({{"entry", r.entry},
                         {"invariant", r.invariant},
                         {"computed", r.computed},
                         {"claimed", r.claimed},
                         {"citation", r.citation},
                         {"agrees", r.agrees}});
        }
        return j.dump(2) + "\n";
    }
    std::size_t w_entry = 5, w_inv = 9, w_comp = 8, w_claim = 7;
    for (const auto& r : rows) {
        w_entry = std::max(w_entry, r.entry.size());
        w_inv = std::max(w_inv, r.invariant.size());
        w_comp = std::max(w_comp, r.computed.size());
        w_claim = std::max(w_claim, r.claimed.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w_entry + 2)) << "entry"
       << std::setw(static_cast<int>(w_inv + 2)) << "invariant"
       << std::setw(static_cast<int>(w_comp + 2)) << "computed"
       << std::setw(static_cast<int>(w_claim + 2)) << "claimed" << std::setw(10) << "agrees"
       << "citation" << "\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(w_entry + 2)) << r.entry
           << std::setw(static_cast<int>(w_inv + 2)) << r.invariant
           << std::setw(static_cast<int>(w_comp + 2)) << r.computed
           << std::setw(static_cast<int>(w_claim + 2)) << r.claimed << std::setw(10)
           << (r.agrees ? "agree" : "DISAGREE") << r.citation << "\n";
    }
    return os.str();
}

} // namespace conlab
