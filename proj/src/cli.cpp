#include "symint/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace symint {

namespace {

[[noreturn]] void bad_descriptor(const std::string& what) { throw EngineError(ErrorKind::InvalidDescriptor, what); }
[[noreturn]] void bad_profile(const std::string& what) { throw EngineError(ErrorKind::InvalidProfile, what); }

bool is_int_array(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number_integer(); });
}

bool is_int_matrix(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return is_int_array(x); });
}

bool is_rational(const json& j) {
    if (j.is_number_integer()) return true;
    if (!j.is_string()) return false;
    try {
        parse_rational(j.get<std::string>());
        return true;
    } catch (const EngineError&) {
        return false;
    }
}

Rational rational_of(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad_profile("rational expected, got " + j.dump());
}

json witness_json(const Witness& w) {
    json j;
    j["w"] = w.w;
    j["J"] = w.J;
    j["chi"] = w.chi;
    j["value"] = vec_json(w.value);
    j["simple_root"] = w.simple;
    j["coefficient"] = rational_json(w.coefficient);
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["kind"] = verdict_name(v.kind);
    j["witnesses"] = json::array();
    for (const auto& w : v.witnesses) j["witnesses"].push_back(witness_json(w));
    j["warnings"] = v.warnings;
    return j;
}

json coeffs_json(const std::vector<Rational>& c) {
    json j = json::array();
    for (const auto& x : c) j.push_back(rational_json(x));
    return j;
}

json pair_json(const PairInput& in) {
    json j;
    j["name"] = in.name;
    j["descriptor"] = in.source;
    return j;
}

std::string vec_text(const RatVec& v) { return to_string(v); }

std::string coeff_text(const std::vector<Rational>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ", ";
        s += to_string(c[i]);
    }
    return s + "]";
}

std::string J_text(const std::vector<std::size_t>& J) {
    std::string s = "{";
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(J[i]);
    }
    return s + "}";
}

json read_json_file(const std::string& path, ErrorKind kind) {
    std::ifstream f(path);
    if (!f) throw EngineError(kind, "cannot open '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw EngineError(kind, "'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

json rational_json(const Rational& x) { return to_string(x); }

json vec_json(const RatVec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(rational_json(x));
    return j;
}

void check_descriptor_schema(const json& j) {
    if (!j.is_object()) bad_descriptor("descriptor must be an object");
    bool fam = j.contains("family"), raw = j.contains("raw");
    if (fam == raw) bad_descriptor("descriptor needs exactly one of 'family' or 'raw'");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "family" && it.key() != "params" && it.key() != "raw")
            bad_descriptor("unknown top-level key '" + it.key() + "'");
    if (fam) {
        if (!j["family"].is_string()) bad_descriptor("'family' must be a string");
        if (j.contains("params")) {
            if (!j["params"].is_object()) bad_descriptor("'params' must be an object");
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
                if (it.key() == "type") {
                    if (!it->is_string()) bad_descriptor("'type' must be a string");
                } else if (!it->is_number_integer() && !it->is_boolean()) {
                    bad_descriptor("parameter '" + it.key() + "' must be an integer");
                }
            }
        }
        return;
    }
    if (j.contains("params")) bad_descriptor("'params' only goes with 'family'");
    const json& r = j["raw"];
    if (!r.is_object()) bad_descriptor("'raw' must be an object");
    for (const char* key : {"rank", "roots", "simple", "mult", "theta", "fixed_traces"})
        if (!r.contains(key)) bad_descriptor(std::string("raw descriptor is missing '") + key + "'");
    for (auto it = r.begin(); it != r.end(); ++it) {
        static const std::vector<std::string> allowed = {"rank", "roots", "simple", "mult", "theta", "fixed_traces"};
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            bad_descriptor("unknown raw key '" + it.key() + "'");
    }
    if (!r["rank"].is_number_integer() || r["rank"].get<long long>() < 0) bad_descriptor("'rank' must be a nonnegative integer");
    if (!is_int_matrix(r["roots"])) bad_descriptor("'roots' must be a list of integer vectors");
    if (!is_int_array(r["simple"])) bad_descriptor("'simple' must be a list of root indices");
    if (!is_int_array(r["mult"])) bad_descriptor("'mult' must be a list of integers");
    if (!is_int_matrix(r["theta"])) bad_descriptor("'theta' must be an integer matrix");
    const json& ft = r["fixed_traces"];
    if (ft.is_object()) {
        for (auto it = ft.begin(); it != ft.end(); ++it) {
            const auto& k = it.key();
            if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; }))
                bad_descriptor("fixed_traces keys must be root indices");
            if (!it->is_number_integer()) bad_descriptor("fixed_traces values must be integers");
        }
    } else if (ft.is_array()) {
        for (const auto& e : ft)
            if (!is_int_array(e) || e.size() != 2) bad_descriptor("fixed_traces entries must be [root index, trace]");
    } else {
        bad_descriptor("'fixed_traces' must be an object or a list of pairs");
    }
}

void check_profile_schema(const json& j) {
    const json* entries = &j;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            if (it.key() != "coordinates" && it.key() != "entries") bad_profile("unknown profile key '" + it.key() + "'");
        if (!j.contains("entries")) bad_profile("profile object needs 'entries'");
        if (j.contains("coordinates")) {
            const json& c = j["coordinates"];
            if (!c.is_string() || (c != "full" && c != "restricted"))
                bad_profile("'coordinates' must be \"full\" or \"restricted\"");
        }
        entries = &j["entries"];
    }
    if (!entries->is_array()) bad_profile("profile must be a list of {J, exponents}");
    for (const auto& e : *entries) {
        if (!e.is_object() || !e.contains("J") || !e.contains("exponents")) bad_profile("each entry needs 'J' and 'exponents'");
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it.key() != "J" && it.key() != "exponents") bad_profile("unknown entry key '" + it.key() + "'");
        if (!is_int_array(e["J"])) bad_profile("'J' must be a list of indices");
        for (const auto& x : e["J"])
            if (x.get<long long>() < 0) bad_profile("'J' indices must be nonnegative");
        if (!e["exponents"].is_array()) bad_profile("'exponents' must be a list of vectors");
        for (const auto& v : e["exponents"]) {
            if (!v.is_array()) bad_profile("each exponent must be a list of rationals");
            for (const auto& x : v)
                if (!is_rational(x)) bad_profile("not a rational: " + x.dump());
        }
    }
}

PairInput parse_descriptor(const json& j) {
    check_descriptor_schema(j);
    PairInput in;
    in.source = j;
    if (j.contains("family")) {
        FamilySpec spec;
        spec.tag = j["family"].get<std::string>();
        if (j.contains("params"))
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
                if (it.key() == "type") spec.type = it->get<std::string>();
                else if (it->is_boolean()) spec.params[it.key()] = it->get<bool>() ? 1 : 0;
                else spec.params[it.key()] = it->get<long>();
            }
        in.name = describe(spec);
        std::tie(in.datum, in.inv) = instantiate(spec);
        return in;
    }
    const json& r = j["raw"];
    std::size_t n = r["rank"].get<std::size_t>();
    std::vector<IntVec> roots;
    for (const auto& v : r["roots"]) roots.push_back(v.get<IntVec>());
    std::vector<std::size_t> simple;
    for (const auto& s : r["simple"]) {
        if (s.get<long long>() < 0) bad_descriptor("negative simple root index");
        simple.push_back(s.get<std::size_t>());
    }
    std::vector<int> mult = r["mult"].get<std::vector<int>>();
    IntMat theta;
    for (const auto& row : r["theta"]) theta.push_back(row.get<IntVec>());
    InvolutionData inv;
    inv.theta = theta;
    auto add_trace = [&](long long idx, long long t) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= roots.size()) bad_descriptor("fixed_traces index out of range");
        if (!inv.fixed_trace.emplace(static_cast<std::size_t>(idx), static_cast<int>(t)).second)
            bad_descriptor("duplicate fixed_traces entry");
    };
    const json& ft = r["fixed_traces"];
    if (ft.is_object()) {
        for (auto it = ft.begin(); it != ft.end(); ++it) add_trace(std::stoll(it.key()), it->get<long long>());
    } else {
        for (const auto& e : ft) add_trace(e[0].get<long long>(), e[1].get<long long>());
    }
    in.name = "raw";
    in.datum = make_root_datum(n, roots, simple, mult);
    in.inv = inv;
    validate_involution(in.datum, in.inv);
    return in;
}

ExponentProfile parse_profile(const json& j) {
    check_profile_schema(j);
    ExponentProfile p;
    const json* entries = &j;
    if (j.is_object()) {
        if (j.contains("coordinates") && j["coordinates"] == "restricted") p.coordinates = Coordinates::Restricted;
        entries = &j["entries"];
    }
    for (const auto& e : *entries) {
        ExponentEntry entry;
        for (const auto& x : e["J"]) entry.J.push_back(x.get<std::size_t>());
        for (const auto& v : e["exponents"]) {
            RatVec r;
            for (const auto& x : v) r.push_back(rational_of(x));
            entry.exponents.push_back(r);
        }
        p.entries.push_back(entry);
    }
    return p;
}

Analysis analyze(const PairInput& in) {
    Analysis a;
    a.input = in;
    a.ds = build_descendent(in.datum, in.inv);
    a.reps = coset_transversal(a.ds);
    relative_test_characters(a.ds, a.reps);
    a.verdict = classify_pair(a.ds, a.reps);
    return a;
}

json analyze_report(const Analysis& a) {
    const auto& ds = a.ds;
    json j;
    j["pair"] = pair_json(a.input);
    j["ambient_rank"] = ds.dim();
    json rr = json::array();
    for (const auto& r : ds.restricted) {
        json x;
        x["root"] = vec_json(r.vec);
        x["positive"] = r.positive;
        x["coefficients"] = coeffs_json(ds.coefficients(r.vec));
        x["MG"] = r.MG;
        x["MH"] = r.MH;
        x["m_theta"] = r.m_theta;
        x["fiber"] = r.fiber;
        rr.push_back(x);
    }
    j["restricted_roots"] = rr;
    json dgh = json::array();
    for (std::size_t k = 0; k < ds.delta_GH.size(); ++k) {
        json x;
        x["index"] = k;
        x["root"] = vec_json(ds.restricted[ds.delta_GH[k]].vec);
        std::vector<std::size_t> pre;
        for (const auto& [s, pos] : ds.p)
            if (pos == k) pre.push_back(s);
        x["restricted_from"] = pre;
        dgh.push_back(x);
    }
    j["simple_roots_GH"] = dgh;
    json dh = json::array();
    for (auto i : ds.delta_H) dh.push_back(vec_json(ds.restricted[i].vec));
    j["simple_roots_H"] = dh;
    j["simple_roots_G_theta_minus"] = ds.delta_G_minus;
    json perm = json::array();
    for (const auto& [x, y] : theta_minus_permutation(ds.datum, ds.inv)) perm.push_back({x, y});
    j["theta_permutation"] = perm;
    j["rho_G_plus"] = vec_json(ds.rhoG_plus);
    j["rho_H"] = vec_json(ds.rhoH);
    j["weyl"] = {{"order_GH", a.reps.WGH.order()},
                 {"order_H", a.reps.WH.order()},
                 {"transversal_size", a.reps.transversal.size()}};
    json tr = json::array();
    for (std::size_t i = 0; i < a.reps.transversal.size(); ++i) {
        json x;
        x["w"] = a.reps.labels[i];
        x["rho"] = vec_json(a.reps.rho[i]);
        x["coefficients"] = coeffs_json(ds.coefficients(a.reps.rho[i]));
        tr.push_back(x);
    }
    j["transversal"] = tr;
    std::size_t r = ds.delta_GH.size();
    json pars;
    pars["count"] = std::size_t(1) << r;
    if (r <= 6) {
        json list = json::array();
        for (const auto& par : theta_parabolics(ds)) {
            json x;
            x["J"] = par.J;
            x["I"] = par.I;
            json m = json::array();
            for (const auto& v : par.DeltaGH_M) m.push_back(vec_json(v));
            x["DeltaGH_M"] = m;
            list.push_back(x);
        }
        pars["list"] = list;
    }
    j["parabolics"] = pars;
    j["verdict"] = verdict_json(a.verdict);
    return j;
}

static const char* kProfileNote =
    "exponents are user-supplied data (real parts of exponents along theta-stable parabolics); "
    "they are never derived from representations";

json check_report(const Analysis& a, const ExponentProfile& p, const IntegrabilityReport& r, bool strict) {
    json j;
    j["pair"] = pair_json(a.input);
    j["strict"] = strict;
    j["note"] = kProfileNote;
    j["coordinates"] = p.coordinates == Coordinates::Full ? "full" : "restricted";
    j["verdict"] = verdict_json(r.verdict);
    json ex = json::array();
    for (std::size_t e = 0; e < p.entries.size(); ++e) {
        json x;
        x["J"] = p.entries[e].J;
        json ing = json::array();
        for (const auto& g : r.ingested[e]) {
            ing.push_back({{"given", vec_json(g.given)},
                           {"used", vec_json(g.used)},
                           {"discarded_theta_minus", vec_json(g.minus_discarded)},
                           {"discarded_central", vec_json(g.central_discarded)}});
        }
        x["exponents"] = ing;
        ex.push_back(x);
    }
    j["exponents"] = ex;
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"w", a.reps.labels[row.w]},
                        {"entry", row.entry},
                        {"chi", row.chi},
                        {"coefficients", coeffs_json(row.coefficients)},
                        {"pass", row.pass}});
    }
    j["rows"] = rows;
    j["missing_parabolics"] = {{"count", r.missing_count}, {"list", r.missing}};
    return j;
}

json oracle_report(const Analysis& a, const ExponentProfile& p, const ConeDecomposition& cone,
                   const ConvergenceReport& oracle, const IntegrabilityReport& crit, long box) {
    json j;
    j["pair"] = pair_json(a.input);
    j["note"] = std::string(kProfileNote) +
                "; polynomial factors in the exponent expansion do not affect the ratio test and are not simulated; "
                "a zero exponent is reported as divergent (constant or polynomial growth)";
    json c;
    auto zstr = [](const ZVec& v) {
        std::vector<std::string> s;
        for (const auto& x : v) s.push_back(x.get_str());
        return s;
    };
    json gj = json::array();
    for (const auto& y : cone.generators) gj.push_back(zstr(y));
    c["generators"] = gj;
    json lifts = json::array();
    for (const auto& y : cone.generators) lifts.push_back(zstr(cone.lift(y)));
    c["generator_cocharacters"] = lifts;
    json scale = json::array();
    for (const auto& s : cone.scale) scale.push_back(s.get_str());
    c["scale"] = scale;
    c["index"] = cone.quotient.index.get_str();
    json E = json::array();
    for (const auto& e : cone.E) E.push_back(zstr(e));
    c["transversal"] = E;
    json table = json::array();
    for (const auto& row : cone.pairing_table) table.push_back(zstr(row));
    c["pairing_table"] = table;
    j["cone"] = c;
    j["q"] = oracle.q;
    j["depth"] = oracle.depth;
    json entries = json::array();
    std::size_t checked = 0;
    json disagreements = json::array();
    for (std::size_t k = 0; k < oracle.entries.size(); ++k) {
        const auto& oe = oracle.entries[k];
        json x;
        x["w"] = a.reps.labels[oe.w];
        x["J"] = p.entries[oe.entry].J;
        x["chi"] = oe.chi;
        x["directions"] = oe.directions;
        x["exponents"] = coeffs_json(oe.exponents);
        x["partial_sums"] = oe.partial_sums;
        x["converges"] = oe.converges;
        entries.push_back(x);
        ++checked;
        if (crit.rows[k].pass != oe.converges) disagreements.push_back(x);
    }
    j["entries"] = entries;
    j["all_converge"] = oracle.all_converge;
    j["agreement"] = {{"checked", checked}, {"disagreements", disagreements}, {"agree", disagreements.empty()}};
    // truncated cone sum weighted by the identity test character
    RatVec weight = a.reps.rho.empty() ? zero_vec(a.ds.dim()) : a.reps.rho[0];
    auto sum = weighted_cone_sum(cone, weight, oracle.q, box);
    json ws;
    ws["box"] = box;
    ws["weight"] = vec_json(weight);
    ws["points"] = sum.count().get_str();
    auto ex = sum.exact(oracle.q);
    if (ex) ws["value"] = rational_json(*ex);
    ws["approx"] = sum.approx(oracle.q);
    j["weighted_sum"] = ws;
    return j;
}

std::string analyze_table(const Analysis& a) {
    std::ostringstream o;
    const auto& ds = a.ds;
    o << "pair            " << a.input.name << "\n";
    o << "verdict         " << verdict_name(a.verdict.kind) << "\n";
    o << "|W^{G/H}|       " << a.reps.WGH.order() << "\n";
    o << "|W^H|           " << a.reps.WH.order() << "\n";
    o << "transversal     " << a.reps.transversal.size() << "\n";
    o << "restricted simple roots\n";
    for (std::size_t k = 0; k < ds.delta_GH.size(); ++k)
        o << "  " << k << "  " << vec_text(ds.restricted[ds.delta_GH[k]].vec) << "\n";
    o << "restricted roots (root, M^G, M^H, m_theta)\n";
    for (const auto& r : ds.restricted)
        if (r.positive) o << "  " << std::left << std::setw(28) << vec_text(r.vec) << r.MG << "  " << r.MH << "  " << r.m_theta << "\n";
    o << "test characters (w, coefficients on simple roots)\n";
    for (std::size_t i = 0; i < a.reps.transversal.size(); ++i)
        o << "  " << std::left << std::setw(20) << a.reps.labels[i] << coeff_text(ds.coefficients(a.reps.rho[i])) << "\n";
    for (const auto& w : a.verdict.witnesses)
        o << "witness         w=" << w.w << " simple=" << w.simple << " coefficient=" << to_string(w.coefficient) << "\n";
    for (const auto& w : a.verdict.warnings) o << "warning         " << w << "\n";
    return o.str();
}

std::string check_table(const Analysis& a, const IntegrabilityReport& r) {
    std::ostringstream o;
    o << "pair     " << a.input.name << "\n";
    o << "verdict  " << verdict_name(r.verdict.kind) << "\n";
    for (const auto& row : r.rows)
        o << "  " << std::left << std::setw(20) << a.reps.labels[row.w] << "entry " << row.entry << " chi " << row.chi << "  "
          << coeff_text(row.coefficients) << (row.pass ? "  ok" : "  FAIL") << "\n";
    for (const auto& w : r.verdict.warnings) o << w << "\n";
    return o.str();
}

std::string oracle_table(const Analysis& a, const ConvergenceReport& oracle) {
    std::ostringstream o;
    o << "pair     " << a.input.name << "\n";
    o << "q        " << oracle.q << "\n";
    for (const auto& e : oracle.entries) {
        o << "  " << std::left << std::setw(20) << a.reps.labels[e.w] << "entry " << e.entry << " chi " << e.chi << "  "
          << coeff_text(e.exponents) << (e.converges ? "  converges" : "  diverges") << "\n";
    }
    return o.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact H-integrability analysis of symmetric pairs"};
    app.require_subcommand(1);

    std::string descriptor, profile_path, format = "tree", family, type;
    std::vector<std::string> params;
    long q = 2, depth = 10, box = 3;
    bool weak = false, strict = false;

    auto add_pair_opts = [&](CLI::App* sub) {
        sub->add_option("descriptor", descriptor, "pair descriptor (JSON)");
        sub->add_option("--family", family, "built-in family instead of a descriptor file");
        sub->add_option("--type", type, "root system type for galois_doubling / group_case");
        sub->add_option("--param", params, "family parameter key=value")->take_all();
        sub->add_option("--format", format, "tree or table")->check(CLI::IsMember({"tree", "table"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "descendent system, transversal, test characters, verdict");
    add_pair_opts(analyze_cmd);

    auto* check_cmd = app.add_subcommand("check-exponents", "main criterion on a user-supplied exponent profile");
    add_pair_opts(check_cmd);
    check_cmd->add_option("--profile", profile_path, "exponent profile (JSON)")->required();
    check_cmd->add_flag("--strict", strict, "strict positivity (default)");
    check_cmd->add_flag("--weak", weak, "weak positivity");

    auto* oracle_cmd = app.add_subcommand("oracle", "cone-lattice convergence oracle");
    add_pair_opts(oracle_cmd);
    oracle_cmd->add_option("--profile", profile_path, "exponent profile (JSON)")->required();
    oracle_cmd->add_option("--q", q, "residue field size (>= 2)");
    oracle_cmd->add_option("--depth", depth, "truncation depth of the partial sums");
    oracle_cmd->add_option("--box", box, "coordinate bound for the truncated cone sum");

    auto* families_cmd = app.add_subcommand("families", "list built-in families");
    families_cmd->add_option("--format", format, "tree or table")->check(CLI::IsMember({"tree", "table"}));

    std::string validate_path, validate_kind = "auto";
    auto* validate_cmd = app.add_subcommand("validate", "schema check of a descriptor or profile");
    validate_cmd->add_option("file", validate_path, "JSON file")->required();
    validate_cmd->add_option("--kind", validate_kind, "descriptor, profile or auto")
        ->check(CLI::IsMember({"descriptor", "profile", "auto"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto emit = [&](const json& j, const std::string& table) {
        if (format == "table") out << table;
        else out << j.dump(2) << "\n";
    };

    try {
        if (*families_cmd) {
            json j = json::array();
            std::string t;
            for (const auto& f : family_catalog()) {
                j.push_back({{"family", f.tag}, {"params", f.params}, {"description", f.description}});
                t += f.tag + std::string(std::max<std::size_t>(20, f.tag.size() + 1) - f.tag.size(), ' ') + f.params + "  " +
                     f.description + "\n";
            }
            emit(j, t);
            return 0;
        }
        if (*validate_cmd) {
            json j = read_json_file(validate_path, ErrorKind::InvalidDescriptor);
            std::string kind = validate_kind;
            if (kind == "auto") kind = (j.is_object() && (j.contains("family") || j.contains("raw"))) ? "descriptor" : "profile";
            if (kind == "descriptor") check_descriptor_schema(j);
            else check_profile_schema(j);
            out << json{{"valid", true}, {"kind", kind}}.dump(2) << "\n";
            return 0;
        }

        json dj;
        if (!family.empty()) {
            if (!descriptor.empty()) throw EngineError(ErrorKind::InvalidDescriptor, "give a descriptor file or --family, not both");
            dj["family"] = family;
            json pj = json::object();
            if (!type.empty()) pj["type"] = type;
            for (const auto& kv : params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw EngineError(ErrorKind::InvalidDescriptor, "--param expects key=value");
                try {
                    pj[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
                } catch (const std::exception&) {
                    throw EngineError(ErrorKind::InvalidDescriptor, "--param value must be an integer: " + kv);
                }
            }
            dj["params"] = pj;
        } else {
            if (descriptor.empty()) throw EngineError(ErrorKind::InvalidDescriptor, "no descriptor given");
            dj = read_json_file(descriptor, ErrorKind::InvalidDescriptor);
        }
        PairInput in = parse_descriptor(dj);
        Analysis a = analyze(in);

        if (*analyze_cmd) {
            emit(analyze_report(a), analyze_table(a));
            return 0;
        }

        ExponentProfile prof = parse_profile(read_json_file(profile_path, ErrorKind::InvalidProfile));
        if (*check_cmd) {
            if (weak && strict) throw EngineError(ErrorKind::BadParameters, "--strict and --weak are exclusive");
            bool s = !weak;
            auto r = h_integrability(a.ds, a.reps, prof, s);
            emit(check_report(a, prof, r, s), check_table(a, r));
            for (const auto& w : r.verdict.warnings) err << w << "\n";
            return 0;
        }
        if (*oracle_cmd) {
            auto cone = dual_generators(a.ds);
            auto oracle = convergence_oracle(a.ds, a.reps, cone, prof, q, depth);
            auto crit = h_integrability(a.ds, a.reps, prof, true);
            json j = oracle_report(a, prof, cone, oracle, crit, box);
            emit(j, oracle_table(a, oracle));
            if (!j["agreement"]["agree"].get<bool>()) {
                err << "oracle and criterion disagree\n";
                return 3;
            }
            return 0;
        }
    } catch (const EngineError& e) {
        json j = {{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
        out << j.dump(2) << "\n";
        err << kind_name(e.kind()) << ": " << e.what() << "\n";
        return is_consistency_failure(e.kind()) ? 3 : 2;
    } catch (const json::exception& e) {
        json j = {{"error", {{"kind", "InvalidDescriptor"}, {"message", e.what()}}}};
        out << j.dump(2) << "\n";
        err << "InvalidDescriptor: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace symint
