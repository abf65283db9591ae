#include "padic_orbits/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "padic_orbits/arith.hpp"
#include "padic_orbits/eichlerselberg.hpp"
#include "padic_orbits/gl2local.hpp"
#include "padic_orbits/kirillov.hpp"
#include "padic_orbits/localquad.hpp"
#include "padic_orbits/pointcount.hpp"
#include "padic_orbits/quadglobal.hpp"
#include "padic_orbits/weylsteinberg.hpp"

namespace padic_orbits {

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

// Collects failure notes, keeping only the first few.
class Notes {
public:
    void fail(const std::string& note)
    {
        ++failures_;
        if (failures_ <= 4) items_.push_back(note);
    }
    void info(const std::string& note) { info_.push_back(note); }
    bool ok() const { return failures_ == 0; }
    Verdict verdict(const std::string& summary) const
    {
        std::string out = summary;
        if (failures_) {
            out += "; " + std::to_string(failures_) + " failure(s):";
            for (const auto& s : items_) out += " [" + s + "]";
        }
        for (const auto& s : info_) out += "; " + s;
        return {ok(), out};
    }

private:
    int failures_ = 0;
    std::vector<std::string> items_;
    std::vector<std::string> info_;
};

long long first_of_kind(std::uint64_t p, QuadKind kind)
{
    for (long long d = 2;; ++d) {
        if (is_squarefree(d) && classify_quad(d, p).kind == kind) return d;
    }
}

Verdict torus(const AcceptanceOptions&)
{
    Notes notes;
    int cases = 0;
    for (std::uint64_t p = 3; p <= 23; p += 2) {
        if (!is_prime(p)) continue;
        for (QuadKind kind : {QuadKind::Split, QuadKind::Unramified, QuadKind::Ramified}) {
            const long long d = kind == QuadKind::Ramified ? static_cast<long long>(p) : first_of_kind(p, kind);
            const LocalQuadType t = classify_quad(d, p);
            const QHalfPower pre = norm_form_prefactor(d, p);
            const std::string tag = "p=" + std::to_string(p) + " d=" + std::to_string(d);

            const auto unit = volume_profile({d, NormConstraint::UnitNorm}, p, 3);
            const QHalfPower closed = res_torus_volume(t, p).vol_omega_T_Tc;
            ++cases;
            if (!unit.volume) notes.fail(tag + " unit-norm count did not stabilize");
            else if (pre * QHalfPower::rational(*unit.volume, p) != closed)
                notes.fail(tag + " unit-norm " + to_string(*unit.volume) + " vs " + closed.to_string());

            if (kind == QuadKind::Split) continue;
            const auto one = volume_profile({d, NormConstraint::NormOne}, p, 3);
            const QHalfPower closed1 = norm1_volume(t, p);
            ++cases;
            if (!one.volume) notes.fail(tag + " norm-one count did not stabilize");
            else if (pre * QHalfPower::rational(*one.volume, p) != closed1)
                notes.fail(tag + " norm-one " + to_string(*one.volume) + " vs " + closed1.to_string());
        }
    }
    return notes.verdict(std::to_string(cases) + " (p, d, constraint) cases, odd p <= 23");
}

// A claimed digit row: Forced/Determined rows are predicates on the digits,
// Free rows are compared with the enumerated table.
struct DigitClaim {
    std::string text;
    char variable;
    int index;
    std::function<bool(const std::function<int(char, int)>&)> holds;  // empty for "free"
};

void check_digit_claims(Notes& notes, long long d, int depth, Branch branch, const std::vector<DigitClaim>& claims)
{
    const NormEquation eq{d, NormConstraint::NormOne};
    const auto image = liftable_image(eq, 2, depth, branch);
    const auto table = digit_table(eq, 2, depth, branch);
    const std::string tag = "d=" + std::to_string(d) + (branch == Branch::OddX ? " (x odd)" : "");

    for (const auto& c : claims) {
        if (!c.holds) {
            const DigitRecord& rec = table[static_cast<std::size_t>(2 * c.index + (c.variable == 'y'))];
            if (rec.status != DigitStatus::Free) notes.fail(tag + ": " + c.text + " but found " + rec.describe());
            continue;
        }
        for (const auto& [x, y] : image) {
            auto digit = [&, x = x, y = y](char v, int i) { return static_cast<int>(((v == 'x' ? x : y) >> i) & 1); };
            if (!c.holds(digit)) {
                const DigitRecord& rec = table[static_cast<std::size_t>(2 * c.index + (c.variable == 'y'))];
                notes.fail(tag + ": " + c.text + " fails at (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                           ") mod 2^" + std::to_string(depth) + ", enumeration gives " + rec.describe());
                break;
            }
        }
    }
}

Verdict digits(const AcceptanceOptions&)
{
    Notes notes;
    using D = const std::function<int(char, int)>&;
    const std::vector<DigitClaim> sqrt2 = {
        {"x0 = 1", 'x', 0, [](D g) { return g('x', 0) == 1; }},
        {"y0 = 0", 'y', 0, [](D g) { return g('y', 0) == 0; }},
        {"x1 free", 'x', 1, {}},
        {"y1 free", 'y', 1, {}},
        {"x2 = y1", 'x', 2, [](D g) { return g('x', 2) == g('y', 1); }},
        {"y2 free", 'y', 2, {}},
        {"x3 = x2^2 + x1 x2", 'x', 3, [](D g) { return g('x', 3) == ((g('x', 2) + g('x', 1) * g('x', 2)) & 1); }},
        {"y3 free", 'y', 3, {}},
    };
    const std::vector<DigitClaim> sqrt3 = {
        {"x0 = 1", 'x', 0, [](D g) { return g('x', 0) == 1; }},
        {"y0 = 0", 'y', 0, [](D g) { return g('y', 0) == 0; }},
        {"x1 free", 'x', 1, {}},
        {"y1 = 0", 'y', 1, [](D g) { return g('y', 1) == 0; }},
        {"x2 = x1", 'x', 2, [](D g) { return g('x', 2) == g('x', 1); }},
        {"y2 free", 'y', 2, {}},
    };
    check_digit_claims(notes, 2, 4, Branch::All, sqrt2);
    check_digit_claims(notes, 3, 3, Branch::All, sqrt3);

    const auto v2 = volume_profile({2, NormConstraint::NormOne}, 2, 5);
    const auto v3 = volume_profile({3, NormConstraint::NormOne}, 2, 5);
    if (!v2.volume || *v2.volume != 1) notes.fail("d=2 volume " + (v2.volume ? to_string(*v2.volume) : "none") + ", claimed 1");
    if (!v3.volume || *v3.volume != ExactQ(1, 2))
        notes.fail("d=3 volume " + (v3.volume ? to_string(*v3.volume) : "none") + ", claimed 1/2");

    // The x-odd component, for comparison.
    Notes odd;
    check_digit_claims(odd, 3, 3, Branch::OddX, sqrt3);
    const auto v3odd = volume_profile({3, NormConstraint::NormOne}, 2, 5, CountMode::Liftable, Branch::OddX);
    const bool odd_volume = v3odd.volume && *v3odd.volume == ExactQ(1, 2);
    notes.info(std::string("d=3 table and volume 1/2 ") + (odd.ok() && odd_volume ? "hold" : "fail") +
               " on the x-odd component");
    return notes.verdict("digit tables mod 2^4 (d=2) and 2^3 (d=3), volumes from counts up to 2^5");
}

Verdict classnum(const AcceptanceOptions&)
{
    Notes notes;
    int cases = 0;
    for (long long d = -50; d < 0; ++d) {
        if (!is_squarefree(d)) continue;
        for (std::uint64_t p : primes_up_to(50)) {
            ++cases;
            if (!classnum_local_check(d, p)) notes.fail("d=" + std::to_string(d) + " p=" + std::to_string(p));
        }
    }
    return notes.verdict(std::to_string(cases) + " (d, p) pairs");
}

Verdict gl2(const AcceptanceOptions& opts)
{
    Notes notes;
    int cases = 0;
    for (std::uint64_t q : {2, 3, 5, 7}) {
        const ExactQ limit = 1 / ((1 - ExactQ(1, static_cast<long>(q))) * (1 - ExactQ(1, static_cast<long>(q))));
        for (Gl2Kind kind : {Gl2Kind::Hyperbolic, Gl2Kind::UnramElliptic, Gl2Kind::RamElliptic}) {
            std::vector<ExactQ> dist;
            for (int d = 0; d <= 5; ++d) {
                const Gl2OrbitClass c{kind, d, q};
                QHalfPower geometric = orbital_geometric_f0(c);
                if (opts.tripwire) geometric = geometric * QHalfPower::rational(1 + qpow(q, -7), q);
                const QHalfPower product = conversion_factor(c) * QHalfPower::rational(orbital_canonical_f0(c), q);
                ++cases;
                if (geometric != product) notes.fail(to_string(c) + ": " + geometric.to_string() + " vs " + product.to_string());
                dist.push_back(abs(geometric.rational_value() - limit));
            }
            bool all_zero = true, decreasing = true;
            for (std::size_t i = 0; i < dist.size(); ++i) {
                all_zero = all_zero && dist[i] == 0;
                if (i && !(dist[i] < dist[i - 1])) decreasing = false;
            }
            if (!all_zero && !decreasing)
                notes.fail(to_string(Gl2OrbitClass{kind, 0, q}) + ": distance to (1-1/q)^-2 not strictly decreasing");
        }
    }
    return notes.verdict(std::to_string(cases) + " classes; limit (1-1/q)^-2 approached strictly (hyperbolic: attained)");
}

Verdict cnf(const AcceptanceOptions& opts)
{
    Notes notes;
    int cases = 0;
    double worst = 0;
    for (long long disc = -3; disc >= -200; --disc) {
        if (!is_fundamental_discriminant(disc)) continue;
        const long long d = disc % 4 == 0 ? disc / 4 : disc;
        const CnfResidual r = cnf_residual(d, opts.cnf_terms);
        ++cases;
        worst = std::max(worst, r.residual / r.L.err_bound);
        if (!r.within_bound) {
            std::ostringstream s;
            s << "disc=" << disc << " residual " << r.residual << " > bound " << r.L.err_bound;
            notes.fail(s.str());
        }
    }
    std::ostringstream s;
    s << cases << " fundamental discriminants, N=" << opts.cnf_terms << ", max residual/bound " << worst;
    return notes.verdict(s.str());
}

Verdict global(const AcceptanceOptions& opts)
{
    Notes notes;
    std::ostringstream s;
    for (auto [t, n] : {std::pair{1LL, 6LL}, {0LL, 1LL}, {1LL, 1LL}}) {
        const GlobalCheck g = global_identity_check(t, n, opts.global_terms);
        s << " X^2" << (t ? "-X" : "") << "+" << n << ": " << g.relative_residual;
        if (!(g.relative_residual < opts.global_tolerance) || !g.pass) {
            std::ostringstream f;
            f << "tr=" << t << " det=" << n << " residual " << g.relative_residual << " bound " << g.relative_bound
              << (g.off_S_trivial ? "" : " nontrivial factor off S");
            notes.fail(f.str());
        }
    }
    return notes.verdict("relative residuals" + s.str());
}

Verdict trace(const AcceptanceOptions&)
{
    Notes notes;
    int cases = 0;
    const std::size_t N = 50;
    for (int k : {12, 16, 18, 20, 22, 26}) {
        const auto a = eigenform_coeffs(k, N);
        for (std::size_t n = 1; n <= N; ++n) {
            ++cases;
            const Integer tr = trace_formula(k, static_cast<long long>(n)).trace;
            if (tr != a[n - 1]) notes.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + tr.get_str() + " vs " + a[n - 1].get_str());
        }
    }
    for (int k : {4, 6, 8, 10, 14}) {
        for (long long n = 1; n <= 30; ++n) {
            ++cases;
            const Integer tr = trace_formula(k, n).trace;
            if (tr != 0) notes.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + tr.get_str() + " != 0");
        }
    }
    for (int k = 4; k <= 40; k += 2) {
        ++cases;
        const Integer tr = trace_formula(k, 1).trace;
        if (tr != cusp_dimension(k)) notes.fail("k=" + std::to_string(k) + ": Tr T_1 = " + tr.get_str());
    }
    const auto tau = eta_tau(5);
    if (tau[1] != -24 || tau[4] != 4830) notes.fail("eta oracle tau(2), tau(5) = " + tau[1].get_str() + ", " + tau[4].get_str());
    return notes.verdict(std::to_string(cases) + " exact trace comparisons");
}

Verdict kirillov(const AcceptanceOptions& opts)
{
    Notes notes;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> t_dist(0.5, 3.0), theta_dist(0.0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> phi_dist(0.1, std::numbers::pi - 0.1);

    double worst_cone = 0, worst_sphere = 0, worst_conv = 0;
    int cone_sign = 0, sphere_sign = 0, conv_sign = 0;
    for (int i = 0; i < 20; ++i) {
        const double t = t_dist(rng);
        double theta = theta_dist(rng);
        while (std::fabs(theta - std::numbers::pi) < 0.1) theta = theta_dist(rng);
        const double v = cone_pullback_check(t, theta, 1e-5).value;
        worst_cone = std::max(worst_cone, std::fabs(std::fabs(v) - 4));
        cone_sign = v > 0 ? 1 : -1;
    }
    for (int i = 0; i < 100; ++i) {
        const double phi = phi_dist(rng), theta = theta_dist(rng);
        const double v = sphere_density(phi, theta);
        worst_sphere = std::max(worst_sphere, std::fabs(std::fabs(v) - 2 * std::sin(phi)));
        sphere_sign = v > 0 ? 1 : -1;
    }
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const ConversionCheck c = sl2_conversion_coefficient(t);
        // coeff = sign * D^{-1}
        worst_conv = std::max(worst_conv, std::fabs(std::fabs(c.coefficient * c.D) - 1));
        conv_sign = c.coefficient * c.D > 0 ? 1 : -1;
    }
    std::ostringstream s;
    s << "cone max err " << worst_cone << " (sign " << cone_sign << "), sphere max err " << worst_sphere << " (sign "
      << sphere_sign << "), conversion max err " << worst_conv << " (coeff = " << (conv_sign > 0 ? "+" : "-") << "1/D)";
    if (worst_cone > opts.cone_tolerance) notes.fail("cone pullback off by " + std::to_string(worst_cone));
    if (worst_sphere > opts.sphere_tolerance) notes.fail("sphere density off");
    if (worst_conv > opts.conversion_tolerance) notes.fail("conversion coefficient off");
    return notes.verdict(s.str());
}

ExactQ random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-60, 60), den(1, 40);
    for (;;) {
        const long a = num(rng);
        if (a != 0) return make_q(a, den(rng));
    }
}

Verdict jacobian(const AcceptanceOptions& opts)
{
    Notes notes;
    std::mt19937_64 rng(opts.seed + 1);
    int sl2_points = 0, sp4_points = 0;
    std::set<int> sl2_signs, sp4_signs;
    while (sl2_points < opts.jacobian_points) {
        const ExactQ t = random_rational(rng);
        if (t * t == 1) continue;
        const Sl2JacobianCheck c = sl2_jacobian_check(t);
        ++sl2_points;
        sl2_signs.insert(c.measure_sign);
        if (!c.matches_inverse_root || c.realized_sign == 0 || c.measure_sign == 0) notes.fail("SL2 at t=" + to_string(t));
    }
    while (sp4_points < opts.jacobian_points) {
        const ExactQ t1 = random_rational(rng), t2 = random_rational(rng);
        if (sp4_jacobian_closed_form(t1, t2) == 0) continue;
        const JacobianCheck c = jacobian_identity_check(t1, t2);
        ++sp4_points;
        sp4_signs.insert(c.realized_sign);
        if (!c.determinant_matches || !c.negative_root_form_matches || !c.relation_holds)
            notes.fail("Sp4 at (" + to_string(t1) + ", " + to_string(t2) + ")");
    }
    auto signs = [](const std::set<int>& s) {
        std::string out;
        for (int v : s) out += (out.empty() ? "" : ",") + std::string(v > 0 ? "+" : "-");
        return out;
    };
    if (sl2_signs.size() > 1) notes.fail("SL2 sign not constant");
    if (sp4_signs.size() > 1) notes.fail("Sp4 sign not constant");
    return notes.verdict(std::to_string(sl2_points) + " SL2 points (sign " + signs(sl2_signs) + "), " +
                         std::to_string(sp4_points) + " Sp4 points (sign " + signs(sp4_signs) + ")");
}

struct Criterion {
    int id;
    const char* key;
    const char* title;
    double limit;
    Verdict (*run)(const AcceptanceOptions&);
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {1, "torus", "torus volumes vs point counts", 30, torus},
        {2, "digits", "p = 2 digit tables and volumes", 1, digits},
        {3, "classnum", "local class number identity", 10, classnum},
        {4, "gl2", "GL2 orbital factorization", 1, gl2},
        {5, "cnf", "analytic class number formula", 60, cnf},
        {6, "global", "global orbital identity", 60, global},
        {7, "trace", "Eichler-Selberg vs eigenforms", 60, trace},
        {8, "kirillov", "Kirillov form numerics", 5, kirillov},
        {9, "jacobian", "Jacobian identities", 5, jacobian},
    };
    return all;
}

}  // namespace

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skipped: return "SKIP";
    }
    return "?";
}

const std::vector<std::string>& criterion_keys()
{
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& c : criteria()) k.emplace_back(c.key);
        return k;
    }();
    return keys;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts)
{
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        CriterionResult r{c.id, c.key, c.title, Outcome::Skipped, "skipped", 0, c.limit};
        if (opts.skip.count(c.key) || opts.skip.count(std::to_string(c.id))) {
            out.push_back(r);
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.run(opts);
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.detail = v.detail;
        r.outcome = v.pass ? Outcome::Pass : Outcome::Fail;
        if (r.seconds > c.limit) {
            r.outcome = Outcome::Fail;
            r.detail += "; over the time limit";
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace padic_orbits
