// padic-orbits: JSON front end to the library.
//   exit 0  result on stdout
//   exit 1  domain error, {"error": ...} on stdout
//   exit 2  usage error, message on stderr
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "padic_orbits/acceptance.hpp"
#include "padic_orbits/arith.hpp"
#include "padic_orbits/eichlerselberg.hpp"
#include "padic_orbits/exact.hpp"
#include "padic_orbits/gl2local.hpp"
#include "padic_orbits/kirillov.hpp"
#include "padic_orbits/localquad.hpp"
#include "padic_orbits/pointcount.hpp"
#include "padic_orbits/quadglobal.hpp"
#include "padic_orbits/weylsteinberg.hpp"

using json = nlohmann::json;
using namespace padic_orbits;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const ExactQ& x) { return to_string(x); }
json to_json(const Integer& n) { return to_string(n); }

json to_json(const QHalfPower& v)
{
    return {{"coeff_num", to_string(v.coeff().get_num())},
            {"coeff_den", to_string(v.coeff().get_den())},
            {"q", v.q()},
            {"half_exp", v.half_exp()}};
}

json to_json(const LocalQuadType& t)
{
    json j{{"kind", to_string(t.kind)}};
    if (t.p2_detail) j["p2_detail"] = to_string(*t.p2_detail);
    return j;
}

json to_json(const Gl2OrbitClass& c) { return {{"kind", to_string(c.kind)}, {"d", c.d}, {"q", c.q}}; }

json to_json(const OrbitalReport& r)
{
    return {{"orbit_class", to_json(r.orbit_class)},
            {"abs_D", to_json(r.abs_D)},
            {"O_canonical", to_json(r.O_canonical)},
            {"O_geometric", to_json(r.O_geometric)},
            {"conversion", to_json(r.conversion)},
            {"dgbar_scale", to_json(r.dgbar_scale)},
            {"kottwitz_fixed_points", to_json(kottwitz_fixed_points(r.orbit_class))},
            {"factorization_holds", r.factorization_holds}};
}

json to_json(const QuadFieldData& k) { return {{"d", k.d}, {"disc", k.disc}, {"w", k.w}, {"h", k.h}}; }

json to_json(const L1Estimate& l)
{
    return {{"disc", l.disc}, {"terms", l.terms}, {"value", l.value}, {"err_bound", l.err_bound}};
}

std::uint64_t checked_prime_arg(long long p)
{
    if (p < 2) throw UsageError("--p must be a prime >= 2");
    return static_cast<std::uint64_t>(p);
}

ExactQ q_arg(const std::string& text, const char* flag)
{
    try {
        return parse_q(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::vector<ExactQ> csv_arg(const std::string& text, const char* flag)
{
    std::vector<ExactQ> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(q_arg(item, flag));
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

// Each subcommand fills inputs/outputs and says whether every value is exact.
struct Result {
    json inputs = json::object();
    json outputs;
    bool exact = true;
};

Result torus_volume(long long d, long long p, bool norm1)
{
    const std::uint64_t q = checked_prime_arg(p);
    if (!is_squarefree(d) || d == 1 || d == 0) throw DomainError("d must be squarefree and different from 0, 1");
    const LocalQuadType t = classify_quad(d, q);
    const TorusVolumeReport r = res_torus_volume(t, q);
    Result out;
    out.inputs = {{"d", d}, {"p", p}, {"norm1", norm1}};
    out.outputs = {{"type", to_json(r.type)},
                   {"p", r.p},
                   {"vol_omega_T_Tc", to_json(r.vol_omega_T_Tc)},
                   {"L_factor_at_1", to_json(r.L_factor_at_1)},
                   {"vol_canonical_T0", to_json(r.vol_canonical_T0)},
                   {"index_Tc_over_T0", r.index_Tc_over_T0},
                   {"index_verified", r.index_verified},
                   {"norm_form_prefactor", to_json(norm_form_prefactor(d, q))}};
    if (norm1) {
        out.outputs["norm1_volume"] = to_json(norm1_volume(t, q));
        out.outputs["norm1_component_index"] = norm1_component_index(t);
    }
    return out;
}

Result point_count(long long d, long long p, int k, const std::string& constraint, bool digits, bool raw,
                   const std::string& branch_name)
{
    const std::uint64_t q = checked_prime_arg(p);
    const NormEquation eq{d, constraint == "unit" ? NormConstraint::UnitNorm : NormConstraint::NormOne};
    const Branch branch = branch_name == "odd-x" ? Branch::OddX : Branch::All;
    const CountMode mode = raw ? CountMode::Raw : CountMode::Liftable;
    Result out;
    out.inputs = {{"d", d}, {"p", p}, {"k", k}, {"constraint", constraint}, {"digits", digits},
                  {"mode", raw ? "raw" : "liftable"}, {"branch", to_string(branch)}};

    const CountProfile prof = volume_profile(eq, q, k, mode, branch);
    json counts = json::array();
    for (const auto& [kk, n] : prof.counts) counts.push_back({{"k", kk}, {"count", std::to_string(n)}});
    out.outputs = {{"p", prof.p},
                   {"dim", prof.dim},
                   {"counts", counts},
                   {"stabilized_from", prof.stabilized_from ? json(*prof.stabilized_from) : json(nullptr)},
                   {"volume", prof.volume ? to_json(*prof.volume) : json(nullptr)}};
    if (digits) {
        if (raw) throw UsageError("--digits uses lifted residues; drop --raw");
        json rows = json::array();
        for (const auto& r : digit_table(eq, q, k, branch)) {
            json row{{"variable", std::string(1, r.variable) + std::to_string(r.index)}, {"status", to_string(r.status)}};
            if (r.status == DigitStatus::Forced) row["value"] = r.value;
            if (r.status == DigitStatus::Determined) row["relation"] = r.relation;
            rows.push_back(row);
        }
        out.outputs["digits"] = rows;
    }
    return out;
}

Result disc(const std::string& group, const std::string& eigs, const std::string& nu)
{
    static const std::map<std::string, GroupKind> kinds = {{"gl2", GroupKind::GLn},      {"gln", GroupKind::GLn},
                                                           {"sp2n", GroupKind::Sp2n},    {"gsp2n", GroupKind::GSp2n},
                                                           {"sl-lie", GroupKind::SLnLie}, {"sp-lie", GroupKind::Sp2nLie}};
    const auto it = kinds.find(group);
    if (it == kinds.end()) throw UsageError("--group must be one of gl2, gln, sp2n, gsp2n, sl-lie, sp-lie");
    SpectralData s{it->second, csv_arg(eigs, "--eigs"), std::nullopt};
    if (group == "gl2" && s.eigenvalues.size() != 2) throw UsageError("gl2 takes exactly two eigenvalues");
    if (!nu.empty()) s.multiplier = q_arg(nu, "--nu");

    Result out;
    json e = json::array();
    for (const auto& l : s.eigenvalues) e.push_back(to_json(l));
    out.inputs = {{"group", group}, {"eigs", e}};
    if (s.multiplier) out.inputs["nu"] = to_json(*s.multiplier);
    json spectrum = json::array();
    for (const auto& l : full_spectrum(s)) spectrum.push_back(to_json(l));
    out.outputs = {{"D", to_json(weyl_disc(s))}, {"spectrum", spectrum}};
    if (s.group == GroupKind::SLnLie || s.group == GroupKind::Sp2nLie) {
        json roots = json::array();
        for (const auto& r : positive_root_values(s)) roots.push_back(to_json(r));
        out.outputs["positive_roots"] = roots;
    }
    return out;
}

Result orbital(const std::string& trace, const std::string& det, const std::string& kind, int d, long long p)
{
    const std::uint64_t q = checked_prime_arg(p);
    Result out;
    if (!kind.empty()) {
        if (!trace.empty() || !det.empty()) throw UsageError("give either --trace/--det or --kind/--d");
        if (d < 0) throw UsageError("--d must be nonnegative");
        const Gl2Kind k = kind == "h" ? Gl2Kind::Hyperbolic : kind == "u" ? Gl2Kind::UnramElliptic : Gl2Kind::RamElliptic;
        if (!is_prime(q)) throw DomainError("p = " + std::to_string(p) + " is not prime");
        out.inputs = {{"kind", kind}, {"d", d}, {"p", p}};
        out.outputs = to_json(class_report({k, d, q}));
        return out;
    }
    if (trace.empty() || det.empty()) throw UsageError("orbital needs --trace and --det, or --kind and --d");
    const ExactQ t = q_arg(trace, "--trace"), n = q_arg(det, "--det");
    out.inputs = {{"trace", to_json(t)}, {"det", to_json(n)}, {"p", p}};
    out.outputs = to_json(full_report(t, n, q));
    return out;
}

Result classnum(long long disc)
{
    Result out;
    out.inputs = {{"disc", disc}};
    json forms = json::array();
    for (const auto& f : reduced_forms(disc)) forms.push_back({f.a, f.b, f.c});
    out.outputs = {{"h", class_number(disc)},
                   {"h_analytic", class_number_analytic(disc)},
                   {"forms", forms},
                   {"unit_weight", unit_weight(disc)},
                   {"hurwitz_hw", to_json(hurwitz_hw(disc))},
                   {"fundamental", is_fundamental_discriminant(disc)}};
    return out;
}

Result cnf(long long d, long long terms)
{
    const CnfResidual r = cnf_residual(d, terms);
    Result out;
    out.exact = false;
    out.inputs = {{"d", d}, {"terms", terms}};
    out.outputs = {{"field", to_json(r.field)},
                   {"L", to_json(r.L)},
                   {"closed_form", r.closed_form},
                   {"residual", r.residual},
                   {"within_bound", r.within_bound},
                   {"finite_adelic_volume", to_json(finite_adelic_volume(r.field))}};
    return out;
}

Result global_check(long long trace, long long det, long long terms)
{
    const GlobalCheck g = global_identity_check(trace, det, terms);
    Result out;
    out.exact = false;
    out.inputs = {{"trace", trace}, {"det", det}, {"terms", terms}};
    json local = json::array();
    for (const auto& lf : g.local) {
        local.push_back({{"p", lf.p},
                         {"orbit_class", to_json(lf.orbit_class)},
                         {"O_canonical", to_json(lf.O_canonical)},
                         {"abs_D", to_json(lf.abs_D)},
                         {"abs_disc_K", to_json(lf.abs_disc_K)},
                         {"L_p", to_json(lf.L_p)}});
    }
    json off = json::array();
    for (const auto& [p, o] : g.off_S) off.push_back({{"p", p}, {"O_canonical", to_json(o)}});
    out.outputs = {{"disc", g.disc},
                   {"field", to_json(g.field)},
                   {"conductor", g.conductor},
                   {"local", local},
                   {"off_S", off},
                   {"off_S_trivial", g.off_S_trivial},
                   {"lhs", to_json(g.lhs)},
                   {"lhs_value", g.lhs.get_d()},
                   {"rhs", g.rhs},
                   {"L", to_json(g.L)},
                   {"relative_residual", g.relative_residual},
                   {"relative_bound", g.relative_bound},
                   {"pass", g.pass}};
    return out;
}

Result trace(int k, long long n, bool oracle)
{
    if (k < 4 || k % 2 != 0) throw UsageError("--k must be an even weight >= 4");
    if (n < 1) throw UsageError("--n must be positive");
    const TraceTerms t = trace_formula(k, n);
    Result out;
    out.inputs = {{"k", k}, {"n", n}, {"oracle", oracle}};
    out.outputs = {{"trace", to_json(t.trace)},
                   {"identity_term", to_json(t.identity_term)},
                   {"elliptic_term", to_json(t.elliptic_term)},
                   {"hyperbolic_term", to_json(t.hyperbolic_term)},
                   {"rhs_total", to_json(t.rhs_total)},
                   {"dim", cusp_dimension(k)}};
    if (oracle) {
        json o = nullptr;
        if (cusp_dimension(k) == 0) o = "0";
        else if (cusp_dimension(k) == 1) o = to_json(eigenform_coeffs(k, static_cast<std::size_t>(n)).back());
        out.outputs["oracle"] = o;
        out.outputs["match"] = o.is_null() ? json(nullptr) : json(o == out.outputs["trace"]);
    }
    return out;
}

Result tau(long long upto)
{
    if (upto < 1) throw UsageError("--upto must be positive");
    Result out;
    out.inputs = {{"upto", upto}};
    json values = json::array();
    for (const auto& v : eta_tau(static_cast<std::size_t>(upto))) values.push_back(to_json(v));
    out.outputs = {{"tau", values}};
    return out;
}

Result kirillov(const std::string& check, int samples, unsigned long long seed)
{
    if (samples < 1) throw UsageError("--samples must be positive");
    Result out;
    out.exact = false;
    out.inputs = {{"check", check}, {"samples", samples}, {"seed", seed}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    json rows = json::array();
    double worst = 0;
    if (check == "cone") {
        std::uniform_real_distribution<double> t_dist(0.5, 3.0);
        for (int i = 0; i < samples; ++i) {
            const double t = t_dist(rng);
            double theta = angle(rng);
            while (std::fabs(theta - std::numbers::pi) < 0.1) theta = angle(rng);
            const double v = cone_pullback_check(t, theta, 1e-5).value;
            worst = std::max(worst, std::fabs(std::fabs(v) - 4));
            rows.push_back({{"t", t}, {"theta", theta}, {"value", v}});
        }
        out.outputs = {{"expected_magnitude", 4}};
    } else if (check == "sphere") {
        std::uniform_real_distribution<double> phi_dist(0.1, std::numbers::pi - 0.1);
        for (int i = 0; i < samples; ++i) {
            const double phi = phi_dist(rng), theta = angle(rng);
            const double v = sphere_density(phi, theta);
            worst = std::max(worst, std::fabs(std::fabs(v) - 2 * std::sin(phi)));
            rows.push_back({{"phi", phi}, {"theta", theta}, {"value", v}, {"expected_magnitude", 2 * std::sin(phi)}});
        }
        out.outputs = {{"frame_contraction_north_pole", sphere_frame_contraction(0, 0, 1)}};
    } else {
        for (double t : {0.5, 1.0, 2.0, 5.0}) {
            const ConversionCheck c = sl2_conversion_coefficient(t);
            worst = std::max(worst, std::fabs(std::fabs(c.coefficient * c.D) - 1));
            rows.push_back({{"t", c.t},
                            {"geometric", c.geometric},
                            {"kirillov", c.kirillov},
                            {"coefficient", c.coefficient},
                            {"D", c.D},
                            {"coefficient_times_minus_D", c.product}});
        }
        out.outputs = json::object();
    }
    out.outputs["samples"] = rows;
    out.outputs["max_magnitude_error"] = worst;
    return out;
}

std::set<std::string> split_csv(const std::string& text)
{
    std::set<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

int reproduce_all(AcceptanceOptions opts, const std::string& skip)
{
    opts.skip = split_csv(skip);
    for (const auto& s : opts.skip) {
        const auto& keys = criterion_keys();
        const bool known = std::find(keys.begin(), keys.end(), s) != keys.end() ||
                           (s.size() == 1 && s[0] >= '1' && s[0] <= '9');
        if (!known) throw UsageError("--skip: unknown criterion '" + s + "'");
    }
    const auto results = run_acceptance(opts);
    json rows = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        rows.push_back({{"id", r.id},
                        {"key", r.key},
                        {"title", r.title},
                        {"outcome", to_string(r.outcome)},
                        {"detail", r.detail},
                        {"seconds", r.seconds},
                        {"limit_seconds", r.limit_seconds}});
        std::cerr << to_string(r.outcome) << "  " << r.id << " " << r.key << " (" << r.seconds << " s): " << r.detail << "\n";
        all_pass = all_pass && r.outcome != Outcome::Fail;
    }
    json manifest{{"command", "reproduce-all"},
                  {"inputs", {{"skip", json(opts.skip)}, {"tripwire", opts.tripwire}, {"terms", opts.cnf_terms}}},
                  {"outputs", {{"criteria", rows}, {"all_pass", all_pass}}},
                  {"exact", false}};
    std::cout << manifest.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"p-adic torus volumes, orbital integrals and class number checks"};
    app.require_subcommand(1);

    long long d = 0, p = 0, disc_value = 0, terms = 1'000'000, n = 0, upto = 0, itrace = 0, idet = 0;
    int k = 0, samples = 20, od = 0;
    bool norm1 = false, digits = false, raw = false, oracle = false;
    std::string constraint, branch = "all", group, eigs, nu, strace, sdet, kind, check, skip;
    unsigned long long seed = 1;
    AcceptanceOptions acc;

    auto* tv = app.add_subcommand("torus-volume", "volumes of Res_{E/Q_p} G_m and its norm-one torus");
    tv->add_option("--d", d, "squarefree d, E = Q_p(sqrt d)")->required();
    tv->add_option("--p", p, "prime")->required();
    tv->add_flag("--norm1", norm1, "also report the norm-one torus");

    auto* pc = app.add_subcommand("point-count", "count solutions of x^2 - d y^2 mod p^k");
    pc->add_option("--d", d)->required();
    pc->add_option("--p", p)->required();
    pc->add_option("--k", k, "largest level")->required()->check(CLI::Range(1, 8));
    pc->add_option("--constraint", constraint)->required()->check(CLI::IsMember({"unit", "one"}));
    pc->add_flag("--digits", digits, "binary digit table (p = 2, norm one)");
    pc->add_flag("--raw", raw, "count raw residue solutions instead of lifted ones");
    pc->add_option("--branch", branch, "all or odd-x (p = 2)")->check(CLI::IsMember({"all", "odd-x"}));

    auto* dc = app.add_subcommand("disc", "signed Weyl discriminant");
    dc->add_option("--group", group)->required();
    dc->add_option("--eigs", eigs, "comma separated rationals")->required();
    dc->add_option("--nu", nu, "similitude multiplier (gsp2n)");

    auto* ob = app.add_subcommand("orbital", "GL_2 orbital integrals of the unit function");
    ob->add_option("--trace", strace);
    ob->add_option("--det", sdet);
    ob->add_option("--kind", kind)->check(CLI::IsMember({"h", "u", "r"}));
    ob->add_option("--d", od);
    ob->add_option("--p", p)->required();

    auto* cn = app.add_subcommand("classnum", "class number of a negative discriminant");
    cn->add_option("--disc", disc_value)->required();

    auto* cf = app.add_subcommand("cnf", "analytic class number formula");
    cf->add_option("--d", d)->required();
    cf->add_option("--terms", terms)->check(CLI::PositiveNumber);

    auto* gc = app.add_subcommand("global-check", "global orbital identity for an elliptic gamma");
    gc->add_option("--trace", itrace)->required();
    gc->add_option("--det", idet)->required();
    gc->add_option("--terms", terms)->check(CLI::PositiveNumber);

    auto* tr = app.add_subcommand("trace", "Eichler-Selberg trace of T_n on S_k");
    tr->add_option("--k", k)->required();
    tr->add_option("--n", n)->required();
    tr->add_flag("--oracle", oracle, "compare with the eigenform coefficient");

    auto* ta = app.add_subcommand("tau", "Ramanujan tau from the eta product");
    ta->add_option("--upto", upto)->required();

    auto* kr = app.add_subcommand("kirillov", "numerical checks of Kirillov's form");
    kr->add_option("--check", check)->required()->check(CLI::IsMember({"cone", "sphere", "conversion"}));
    kr->add_option("--samples", samples);
    kr->add_option("--seed", seed);

    auto* ra = app.add_subcommand("reproduce-all", "run every acceptance criterion");
    ra->add_option("--skip", skip, "comma separated criterion ids or keys");
    ra->add_flag("--tripwire", acc.tripwire, "perturb an exact constant");
    ra->add_option("--terms", acc.cnf_terms, "L-series terms for the class number checks")->check(CLI::PositiveNumber);
    ra->add_option("--global-tolerance", acc.global_tolerance);
    ra->add_option("--cone-tolerance", acc.cone_tolerance);
    ra->add_option("--sphere-tolerance", acc.sphere_tolerance);
    ra->add_option("--conversion-tolerance", acc.conversion_tolerance);
    ra->add_option("--seed", acc.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string name;
    try {
        Result r;
        if (tv->parsed()) name = "torus-volume", r = torus_volume(d, p, norm1);
        else if (pc->parsed()) name = "point-count", r = point_count(d, p, k, constraint, digits, raw, branch);
        else if (dc->parsed()) name = "disc", r = disc(group, eigs, nu);
        else if (ob->parsed()) name = "orbital", r = orbital(strace, sdet, kind, od, p);
        else if (cn->parsed()) name = "classnum", r = classnum(disc_value);
        else if (cf->parsed()) name = "cnf", r = cnf(d, terms);
        else if (gc->parsed()) name = "global-check", r = global_check(itrace, idet, terms);
        else if (tr->parsed()) name = "trace", r = trace(k, n, oracle);
        else if (ta->parsed()) name = "tau", r = tau(upto);
        else if (kr->parsed()) name = "kirillov", r = kirillov(check, samples, seed);
        else {
            acc.global_terms = acc.cnf_terms;
            return reproduce_all(acc, skip);
        }
        const json manifest{{"command", name}, {"inputs", r.inputs}, {"outputs", r.outputs}, {"exact", r.exact}};
        std::cout << manifest.dump(2) << "\n";
        return 0;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"command", name}, {"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
