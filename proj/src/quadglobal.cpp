#include "padic_orbits/quadglobal.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

#include "padic_orbits/arith.hpp"
#include "padic_orbits/gl2local.hpp"
#include "padic_orbits/localquad.hpp"

namespace padic_orbits {

namespace {

void check_negative_disc(long long disc)
{
    if (disc >= 0) throw DomainError("discriminant must be negative");
    const long long r = mod_floor(disc, 4);
    if (r != 0 && r != 1) throw DomainError("discriminant must be 0 or 1 mod 4");
}

/// disc = f^2 * Delta_K
std::pair<long long, long long> split_conductor(long long disc)
{
    const long long d = squarefree_part(disc);
    const long long dk = field_discriminant(d);
    const long long f = isqrt(disc / dk);
    if (f * f * dk != disc) throw DomainError("discriminant " + std::to_string(disc) + " is not f^2 times a field discriminant");
    return {dk, f};
}

int units_of_field(long long d) { return d == -1 ? 4 : d == -3 ? 6 : 2; }

}  // namespace

QuadFieldData quad_field(long long d)
{
    if (d >= 0) throw DomainError("d must be negative");
    if (!is_squarefree(d)) throw DomainError("d = " + std::to_string(d) + " is not squarefree");
    const long long disc = field_discriminant(d);
    return {d, disc, units_of_field(d), class_number(disc)};
}

std::vector<ReducedForm> reduced_forms(long long disc)
{
    check_negative_disc(disc);
    std::vector<ReducedForm> forms;
    const long long amax = isqrt(-disc / 3);
    for (long long a = 1; a <= amax; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            if (mod_floor(b - disc, 2) != 0) continue;
            const long long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            const long long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

long long class_number(long long disc) { return static_cast<long long>(reduced_forms(disc).size()); }

long long class_number_analytic(long long disc)
{
    check_negative_disc(disc);
    const auto [dk, f] = split_conductor(disc);
    const long long n = -dk;
    long long s = 0;
    for (long long a = 1; a < n; ++a) s += kronecker(dk, a) * a;
    const int w = units_of_field(squarefree_part(dk));
    // h_K = -(w / (2|D|)) sum chi(a) a
    const long long hk = -w * s / (2 * n);
    if (f == 1) return hk;

    ExactQ h = ExactQ(static_cast<long>(hk)) * static_cast<long>(f) / (w / 2);
    for (const auto& [p, e] : factorize(f)) h *= 1 - make_q(kronecker(dk, p), p);
    if (h.get_den() != 1) throw DomainError("conductor formula gave a non-integer class number");
    return h.get_num().get_si();
}

int unit_weight(long long disc)
{
    check_negative_disc(disc);
    return disc == -3 ? 3 : disc == -4 ? 2 : 1;
}

ExactQ hurwitz_hw(long long disc) { return make_q(class_number(disc), unit_weight(disc)); }

L1Estimate dirichlet_L1(long long disc, long long N)
{
    if (!is_fundamental_discriminant(disc)) throw DomainError(std::to_string(disc) + " is not a fundamental discriminant");
    const long long period = std::llabs(disc);
    if (N < period) throw DomainError("term budget N must be at least |disc|");

    std::vector<int> chi(period);
    long long partial = 0, B = 0;
    for (long long n = 0; n < period; ++n) {
        chi[n] = kronecker(disc, n);
        partial += chi[n];
        B = std::max(B, std::llabs(partial));
    }
    const long long M = N / period * period;

    long double sum = 0;
    for (long long n = 1; n <= M; ++n) {
        const int c = chi[n % period];
        if (c) sum += static_cast<long double>(c) / static_cast<long double>(n);
    }
    const long double rounding = static_cast<long double>(M) * LDBL_EPSILON * (2 + std::log(static_cast<long double>(M)));
    const double bound = static_cast<double>(static_cast<long double>(B) / static_cast<long double>(M + 1) + rounding) + DBL_EPSILON;
    return {disc, M, static_cast<double>(sum), bound};
}

CnfResidual cnf_residual(long long d, long long N)
{
    const QuadFieldData K = quad_field(d);
    CnfResidual r{K, dirichlet_L1(K.disc, N), 0, 0, false};
    r.closed_form = 2 * std::numbers::pi * static_cast<double>(K.h) / (K.w * std::sqrt(static_cast<double>(-K.disc)));
    r.residual = std::fabs(r.L.value - r.closed_form);
    r.within_bound = r.residual <= r.L.err_bound + 1e-12;
    return r;
}

ExactQ finite_adelic_volume(const QuadFieldData& K) { return make_q(K.h, K.w); }

GlobalCheck global_identity_check(long long trace, long long det, long long N)
{
    const long long disc = trace * trace - 4 * det;
    if (disc >= 0) throw DomainError("gamma is not elliptic: tr^2 - 4 det = " + std::to_string(disc) + " >= 0");

    GlobalCheck g{};
    g.trace = trace;
    g.det = det;
    g.disc = disc;
    const auto [dk, f] = split_conductor(disc);
    g.field = quad_field(squarefree_part(disc));
    g.conductor = f;
    g.L = dirichlet_L1(dk, N);

    std::vector<std::uint64_t> S;
    for (const auto& [p, e] : factorize(disc)) S.push_back(static_cast<std::uint64_t>(p));
    for (const auto& [p, e] : factorize(det)) S.push_back(static_cast<std::uint64_t>(p));
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());

    const ExactQ D = make_q(-disc, det);
    g.lhs = finite_adelic_volume(g.field);
    double local_product = 1;
    double L_correction = 1;
    for (std::uint64_t p : S) {
        const LocalQuadType t = classify_quad(g.field.d, p);
        const Gl2Kind kind = t.kind == QuadKind::Split ? Gl2Kind::Hyperbolic
                           : t.kind == QuadKind::Unramified ? Gl2Kind::UnramElliptic
                                                            : Gl2Kind::RamElliptic;
        LocalFactor lf{p, {kind, ord_p(Integer(std::to_string(f)), p), p}, 0, abs_p(D, p),
                       abs_p(make_q(dk), p), 1 / (1 - make_q(kronecker(dk, static_cast<long long>(p)), static_cast<long long>(p)))};
        lf.O_canonical = orbital_canonical_f0(lf.orbit_class);
        g.lhs *= lf.O_canonical;

        const QHalfPower factor = lf.abs_D.sqrt() / lf.abs_disc_K.sqrt() * QHalfPower::rational(lf.L_p * lf.O_canonical, p);
        local_product *= factor.to_double();
        L_correction *= lf.L_p.get_d();
        g.local.push_back(lf);
    }

    g.off_S_trivial = true;
    for (std::uint64_t p = 2; g.off_S.size() < 5; ++p) {
        if (!is_prime(p) || std::binary_search(S.begin(), S.end(), p)) continue;
        const ExactQ o = full_report(make_q(trace), make_q(det), p).O_canonical;
        g.off_S.emplace_back(p, o);
        g.off_S_trivial = g.off_S_trivial && o == 1;
    }

    const double D_inf = std::fabs(D.get_d());
    g.rhs = std::sqrt(D_inf) / (2 * std::numbers::pi) * local_product * g.L.value / L_correction;
    const double lhs = g.lhs.get_d();
    g.relative_residual = std::fabs(lhs - g.rhs) / std::fabs(g.rhs);
    g.relative_bound = g.L.err_bound / (g.L.value - g.L.err_bound) + 1e-12;
    g.pass = g.relative_residual <= g.relative_bound && g.off_S_trivial;
    return g;
}

}  // namespace padic_orbits
