#include "padic_orbits/weylsteinberg.hpp"

#include "padic_orbits/arith.hpp"

namespace padic_orbits {

namespace {

void require_nonzero(const ExactQ& t, const char* name)
{
    if (t == 0) throw DomainError(std::string(name) + " must be nonzero");
}

void require_regular(const std::vector<ExactQ>& eigs)
{
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        for (std::size_t j = i + 1; j < eigs.size(); ++j) {
            if (eigs[i] == eigs[j]) throw DomainError("not regular semisimple");
        }
    }
}

ExactQ square(const ExactQ& x) { return x * x; }

}  // namespace

std::string to_string(GroupKind g)
{
    switch (g) {
    case GroupKind::GLn: return "gln";
    case GroupKind::Sp2n: return "sp2n";
    case GroupKind::GSp2n: return "gsp2n";
    case GroupKind::SLnLie: return "sl-lie";
    case GroupKind::Sp2nLie: return "sp-lie";
    }
    return "?";
}

std::vector<ExactQ> full_spectrum(const SpectralData& s)
{
    if (s.eigenvalues.empty()) throw DomainError("empty spectrum");
    if (s.multiplier && s.group != GroupKind::GSp2n) throw DomainError("a multiplier is only meaningful for gsp2n");
    std::vector<ExactQ> all = s.eigenvalues;
    switch (s.group) {
    case GroupKind::GLn:
        for (const auto& l : all) require_nonzero(l, "eigenvalue");
        break;
    case GroupKind::SLnLie: {
        ExactQ sum = 0;
        for (const auto& l : all) sum += l;
        if (sum != 0) throw DomainError("sl_n eigenvalues must sum to 0");
        break;
    }
    case GroupKind::Sp2n:
    case GroupKind::GSp2n: {
        const ExactQ nu = s.group == GroupKind::GSp2n ? s.multiplier.value_or(ExactQ(0)) : ExactQ(1);
        if (s.group == GroupKind::GSp2n && !s.multiplier) throw DomainError("gsp2n needs the multiplier nu");
        require_nonzero(nu, "multiplier");
        for (const auto& l : s.eigenvalues) {
            require_nonzero(l, "eigenvalue");
            all.push_back(nu / l);
        }
        break;
    }
    case GroupKind::Sp2nLie:
        for (const auto& l : s.eigenvalues) all.push_back(-l);
        break;
    }
    require_regular(all);
    return all;
}

ExactQ weyl_disc(const SpectralData& s)
{
    const auto all = full_spectrum(s);
    const auto& l = s.eigenvalues;
    const std::size_t n = l.size();
    ExactQ D = 1;

    switch (s.group) {
    case GroupKind::GLn:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) D *= 1 - l[i] / l[j];
            }
        }
        return D;
    case GroupKind::SLnLie:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) D *= l[i] - l[j];
            }
        }
        return D;
    case GroupKind::Sp2n:
    case GroupKind::GSp2n: {
        const ExactQ nu = s.group == GroupKind::GSp2n ? *s.multiplier : ExactQ(1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                D *= (1 - l[i] / l[j]) * (1 - l[j] / l[i]) * (1 - l[i] * l[j] / nu) * (1 - nu / (l[i] * l[j]));
            }
            D *= (1 - square(l[i]) / nu) * (1 - nu / square(l[i]));
        }
        return D;
    }
    case GroupKind::Sp2nLie: {
        // product of alpha(X) over all roots +-(l_i +- l_j), +-2 l_i
        D = 1;
        for (std::size_t i = 0; i < n; ++i) {
            D *= -4 * square(l[i]);
            for (std::size_t j = i + 1; j < n; ++j) D *= square(square(l[i]) - square(l[j]));
        }
        return D;
    }
    }
    return D;
}

std::vector<ExactQ> positive_root_values(const SpectralData& s)
{
    full_spectrum(s);
    const auto& l = s.eigenvalues;
    std::vector<ExactQ> roots;
    if (s.group == GroupKind::SLnLie) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            for (std::size_t j = i + 1; j < l.size(); ++j) roots.push_back(l[i] - l[j]);
        }
    } else if (s.group == GroupKind::Sp2nLie) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            for (std::size_t j = i + 1; j < l.size(); ++j) {
                roots.push_back(l[i] - l[j]);
                roots.push_back(l[i] + l[j]);
            }
            roots.push_back(2 * l[i]);
        }
    } else {
        throw DomainError("positive roots are tabulated for sl-lie and sp-lie only");
    }
    return roots;
}

DeltaAbs delta_abs_gl2(const ExactQ& trace, const ExactQ& det, std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (det == 0) throw DomainError("det must be nonzero");
    const ExactQ disc = trace * trace - 4 * det;
    if (disc == 0) throw DomainError("not regular semisimple");

    const ExactQ D = -disc / det;
    DeltaAbs out{abs_p(D, p), {Gl2Kind::Hyperbolic, 0, p}, std::nullopt, squarefree_class(disc)};

    int e = 0;
    if (out.disc_class != 1) {
        const LocalQuadType t = classify_quad(out.disc_class, p);
        out.local_type = t;
        switch (t.kind) {
        case QuadKind::Split: out.orbit_class.kind = Gl2Kind::Hyperbolic; break;
        case QuadKind::Unramified: out.orbit_class.kind = Gl2Kind::UnramElliptic; break;
        case QuadKind::Ramified:
            out.orbit_class.kind = Gl2Kind::RamElliptic;
            e = p != 2 ? 1 : (*t.p2_detail == TwoAdicDetail::UnitNonSquare ? 2 : 3);
            break;
        }
    }
    const int twice_d = ord_p(D, p) - e;
    if (twice_d < 0 || twice_d % 2 != 0) throw DomainError("inconsistent valuation data");
    out.orbit_class.d = twice_d / 2;
    return out;
}

ExactQ steinberg_sl2(const ExactQ& t)
{
    require_nonzero(t, "t");
    return t + 1 / t;
}

ExactQ steinberg_sl2_derivative(const ExactQ& t)
{
    require_nonzero(t, "t");
    return 1 - 1 / (t * t);
}

ExactQ chevalley_sl2_lie(const ExactQ& x, const ExactQ& y, const ExactQ& z) { return -z * z / 4 - x * y; }

std::pair<ExactQ, ExactQ> steinberg_sp4(const ExactQ& t1, const ExactQ& t2)
{
    require_nonzero(t1, "t1");
    require_nonzero(t2, "t2");
    const ExactQ a = t1 + t2 + 1 / t1 + 1 / t2;
    const ExactQ b = t1 * t2 + t2 / t1 + t1 / t2 + 1 / (t1 * t2) + 2;
    return {a, b};
}

ExactQ sp4_jacobian_closed_form(const ExactQ& t1, const ExactQ& t2)
{
    require_nonzero(t1, "t1");
    require_nonzero(t2, "t2");
    return (1 - 1 / (t1 * t1)) * (1 - 1 / (t2 * t2)) * (1 - 1 / (t1 * t2)) * (t1 - t2);
}

ExactQ sp4_jacobian_from_partials(const ExactQ& t1, const ExactQ& t2)
{
    require_nonzero(t1, "t1");
    require_nonzero(t2, "t2");
    const ExactQ da_dt1 = 1 - 1 / (t1 * t1);
    const ExactQ da_dt2 = 1 - 1 / (t2 * t2);
    const ExactQ db_dt1 = t2 - t2 / (t1 * t1) + 1 / t2 - 1 / (t1 * t1 * t2);
    const ExactQ db_dt2 = t1 - t1 / (t2 * t2) + 1 / t1 - 1 / (t1 * t2 * t2);
    return da_dt1 * db_dt2 - da_dt2 * db_dt1;
}

JacobianCheck jacobian_identity_check(const ExactQ& t1, const ExactQ& t2)
{
    JacobianCheck c{sp4_jacobian_closed_form(t1, t2), sp4_jacobian_from_partials(t1, t2), false, false, false, 0};
    c.determinant_matches = c.closed_form == c.from_partials;
    ExactQ negative = t1;
    for (const ExactQ& alpha : std::initializer_list<ExactQ>{t2 / t1, 1 / (t1 * t2), 1 / (t1 * t1), 1 / (t2 * t2)}) negative *= 1 - alpha;
    c.negative_root_form_matches = negative == c.closed_form;
    if (c.closed_form == 0) throw DomainError("degenerate point: the Jacobian vanishes");

    const ExactQ rho = t1 * t1 * t2;
    ExactQ prod = 1;
    for (const ExactQ& alpha : std::initializer_list<ExactQ>{t1 / t2, t1 * t2, t1 * t1, t2 * t2}) prod *= 1 - alpha;
    const ExactQ lhs = 1 / (t1 * t2 * c.closed_form);
    const ExactQ rhs = rho / prod;
    if (lhs == rhs) c.realized_sign = 1;
    else if (lhs == -rhs) c.realized_sign = -1;
    c.relation_holds = c.realized_sign != 0;
    return c;
}

namespace {

int sign_relating(const ExactQ& lhs, const ExactQ& rhs)
{
    if (lhs == rhs) return 1;
    if (lhs == -rhs) return -1;
    return 0;
}

}  // namespace

Sl2JacobianCheck sl2_jacobian_check(const ExactQ& t)
{
    const ExactQ der = steinberg_sl2_derivative(t);
    const ExactQ alpha = t * t;
    if (alpha == 1) throw DomainError("degenerate point: alpha(gamma_t) = 1");
    Sl2JacobianCheck c{der, der == 1 - 1 / alpha, sign_relating(der, (1 - alpha) / (t * t)), 0};
    c.measure_sign = sign_relating(1 / (t * der), t / (1 - alpha));
    return c;
}

QHalfPower gsp_charpoly_factor(int n, const ExactQ& det_gamma, const QHalfPower& D_abs, std::uint64_t p)
{
    if (n < 1) throw DomainError("n must be positive");
    if (det_gamma == 0) throw DomainError("det must be nonzero");
    if (D_abs.q() != p) throw DomainError("|D| must be given relative to q = p");
    // |det|^{-(n+1)/4} = q^{(n+1) ord(det) / 4}
    const long long quarter = static_cast<long long>(n + 1) * ord_p(det_gamma, p);
    if (quarter % 2 != 0) throw DomainError("value outside Q(sqrt q) scalar algebra");
    QHalfPower root;
    try {
        root = D_abs.sqrt();
    } catch (const DomainError&) {
        throw DomainError("value outside Q(sqrt q) scalar algebra");
    }
    return root * QHalfPower::power(p, static_cast<int>(quarter / 2));
}

}  // namespace padic_orbits
