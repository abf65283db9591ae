#include "padic_orbits/pointcount.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "padic_orbits/arith.hpp"
#include "padic_orbits/parallel.hpp"

namespace padic_orbits {

namespace {

using u64 = std::uint64_t;

u64 ipow(u64 base, int e)
{
    u64 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_equation(const NormEquation& eq, u64 p, Branch branch)
{
    if (branch == Branch::OddX && p != 2) throw DomainError("the odd-x branch is defined for p = 2 only");
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (!is_squarefree(eq.d)) throw DomainError("d = " + std::to_string(eq.d) + " is not squarefree");
}

/// Enumeration modulus p^K after checking the budget on p^{2K}.
u64 enumeration_modulus(u64 p, int level)
{
    long double pairs = 1;
    for (int i = 0; i < 2 * level; ++i) pairs *= static_cast<long double>(p);
    if (pairs > static_cast<long double>(kEnumerationBudget)) {
        throw DomainError("enumeration budget exceeded: p^(2k) = " + std::to_string(p) + "^" + std::to_string(2 * level) +
                          " > 10^9");
    }
    return ipow(p, level);
}

// m <= sqrt(budget) < 2^16, so products of residues fit comfortably in 64 bits
std::vector<u64> squares_mod(u64 m, u64 factor = 1)
{
    std::vector<u64> sq(m);
    for (u64 x = 0; x < m; ++x) sq[x] = x * x % m * factor % m;
    return sq;
}

/// Marks in a p^k x p^k table every residue that is the reduction of a
/// solution of x^2 - d y^2 = 1 mod p^K.
std::vector<std::uint8_t> liftable_residues(long long d, u64 p, int k, Branch branch, unsigned workers)
{
    const int level = lifting_level(p, k);
    const u64 big = enumeration_modulus(p, level);
    const u64 small = ipow(p, k);
    const auto sq = squares_mod(big);
    const auto dsq = squares_mod(big, static_cast<u64>(mod_floor(d, static_cast<long long>(big))));
    const u64 one = 1 % big;

    std::vector<std::vector<std::uint8_t>> partial(workers, std::vector<std::uint8_t>(small * small, 0));
    parallel_chunks(big, workers, [&](u64 begin, u64 end, unsigned c) {
        auto& marks = partial[c];
        for (u64 x = begin; x < end; ++x) {
            if (branch == Branch::OddX && x % 2 == 0) continue;
            const u64 target = (sq[x] + big - one) % big;  // need d y^2 = x^2 - 1
            for (u64 y = 0; y < big; ++y) {
                if (dsq[y] == target) marks[(x % small) * small + (y % small)] = 1;
            }
        }
    });
    std::vector<std::uint8_t> marks(small * small, 0);
    for (const auto& part : partial) {
        for (u64 i = 0; i < marks.size(); ++i) marks[i] |= part[i];
    }
    return marks;
}

unsigned resolve_workers(unsigned workers) { return workers == 0 ? worker_count() : workers; }

}  // namespace

int lifting_level(std::uint64_t p, int k)
{
    const int v = p == 2 ? 1 : 0;
    return std::max(k + v, 2 * v + 1);
}

std::uint64_t count_mod(const NormEquation& eq, std::uint64_t p, int k, CountMode mode, Branch branch, unsigned workers)
{
    check_equation(eq, p, branch);
    if (k < 1 || k > 8) throw DomainError("k must lie in 1..8");
    workers = resolve_workers(workers);

    const bool raw_enumeration =
        eq.constraint == NormConstraint::UnitNorm || mode == CountMode::Raw || lifting_level(p, k) == k;
    if (!raw_enumeration) {
        const auto marks = liftable_residues(eq.d, p, k, branch, workers);
        return static_cast<u64>(std::count(marks.begin(), marks.end(), std::uint8_t{1}));
    }

    const u64 m = enumeration_modulus(p, k);
    const auto sq = squares_mod(m);
    const auto dsq = squares_mod(m, static_cast<u64>(mod_floor(eq.d, static_cast<long long>(m))));
    const u64 one = 1 % m;
    const bool unit_norm = eq.constraint == NormConstraint::UnitNorm;
    std::vector<u64> dsq_mod_p(m);
    for (u64 y = 0; y < m; ++y) dsq_mod_p[y] = dsq[y] % p;

    std::vector<u64> partial(workers, 0);
    parallel_chunks(m, workers, [&](u64 begin, u64 end, unsigned c) {
        u64 local = 0;
        for (u64 x = begin; x < end; ++x) {
            if (branch == Branch::OddX && x % 2 == 0) continue;
            if (unit_norm) {
                const u64 xp = sq[x] % p;
                for (u64 y = 0; y < m; ++y) local += dsq_mod_p[y] != xp;
            } else {
                const u64 target = (sq[x] + m - one) % m;
                for (u64 y = 0; y < m; ++y) local += dsq[y] == target;
            }
        }
        partial[c] = local;
    });
    return std::accumulate(partial.begin(), partial.end(), u64{0});
}

CountProfile volume_profile(const NormEquation& eq, std::uint64_t p, int k_max, CountMode mode, Branch branch)
{
    if (k_max < 1) throw DomainError("k_max must be positive");
    CountProfile profile{eq, p, branch, {}, eq.dim(), std::nullopt, std::nullopt};
    for (int k = 1; k <= k_max; ++k) profile.counts.emplace_back(k, count_mod(eq, p, k, mode, branch));

    const u64 scale = ipow(p, profile.dim);
    int k0 = k_max;
    while (k0 > 1 && profile.counts[k0 - 1].second == scale * profile.counts[k0 - 2].second) --k0;
    if (k_max - k0 >= 2) {
        profile.stabilized_from = k0;
        profile.volume = ExactQ(Integer(std::to_string(profile.counts[k0 - 1].second))) / qpow(p, k0 * profile.dim);
    }
    return profile;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> liftable_image(const NormEquation& eq, std::uint64_t p, int k,
                                                                    Branch branch)
{
    check_equation(eq, p, branch);
    if (eq.constraint != NormConstraint::NormOne) throw DomainError("the lifted image is defined for norm-one equations");
    if (k < 1 || k > 8) throw DomainError("k must lie in 1..8");
    const auto marks = liftable_residues(eq.d, p, k, branch, worker_count());
    const u64 m = ipow(p, k);
    std::vector<std::pair<u64, u64>> out;
    for (u64 x = 0; x < m; ++x) {
        for (u64 y = 0; y < m; ++y) {
            if (marks[x * m + y]) out.emplace_back(x, y);
        }
    }
    return out;
}

std::string DigitRecord::describe() const
{
    const std::string name = std::string(1, variable) + std::to_string(index);
    switch (status) {
    case DigitStatus::Forced: return name + " = " + std::to_string(value);
    case DigitStatus::Free: return name + " free";
    case DigitStatus::Determined: return name + " = " + relation;
    case DigitStatus::Constrained: return name + " constrained";
    }
    return name;
}

std::vector<DigitRecord> digit_table(const NormEquation& eq, std::uint64_t p, int depth, Branch branch)
{
    if (p != 2) throw DomainError("digit tables are defined for p = 2 only");
    if (eq.constraint != NormConstraint::NormOne) throw DomainError("digit tables are defined for norm-one equations");
    if (depth < 1 || depth > 6) throw DomainError("depth must lie in 1..6");
    check_equation(eq, p, branch);

    const int nvars = 2 * depth;

    // Points as bit vectors; variable j is x_{j/2} for even j and y_{j/2} for odd j.
    std::vector<u64> points;
    for (const auto& [x, y] : liftable_image(eq, p, depth, branch)) {
        u64 bits = 0;
        for (int i = 0; i < depth; ++i) {
            bits |= ((x >> i) & 1) << (2 * i);
            bits |= ((y >> i) & 1) << (2 * i + 1);
        }
        points.push_back(bits);
    }
    if (points.empty()) throw DomainError("no 2-adic solutions to tabulate");

    std::vector<DigitRecord> table;
    std::vector<int> free_vars;
    bool well_founded = true;  // every earlier digit forced, free, or a function of free digits

    auto var_name = [](int j) { return std::string(1, j % 2 ? 'y' : 'x') + std::to_string(j / 2); };

    for (int j = 0; j < nvars; ++j) {
        DigitRecord rec{j / 2, j % 2 ? 'y' : 'x', DigitStatus::Free, 0, {}};
        const u64 prefix_mask = (u64{1} << j) - 1;
        std::map<u64, int> seen;  // prefix -> bitmask of observed values {1: zero, 2: one}
        for (u64 pt : points) seen[pt & prefix_mask] |= 1 << ((pt >> j) & 1);

        int all_values = 0;
        bool every_both = true, every_single = true;
        for (const auto& [prefix, vals] : seen) {
            all_values |= vals;
            if (vals == 3) every_single = false;
            else every_both = false;
        }

        if (all_values != 3) {
            rec.status = DigitStatus::Forced;
            rec.value = all_values == 2 ? 1 : 0;
        } else if (every_both) {
            rec.status = DigitStatus::Free;
            free_vars.push_back(j);
        } else if (every_single && well_founded) {
            rec.status = DigitStatus::Determined;
            // Truth table over the free digits, then the algebraic normal form (Moebius transform).
            const std::size_t f = free_vars.size();
            std::vector<std::uint8_t> table_bits(std::size_t{1} << f, 0);
            for (u64 pt : points) {
                std::size_t idx = 0;
                for (std::size_t i = 0; i < f; ++i) idx |= static_cast<std::size_t>((pt >> free_vars[i]) & 1) << i;
                table_bits[idx] = static_cast<std::uint8_t>((pt >> j) & 1);
            }
            for (std::size_t i = 0; i < f; ++i) {
                for (std::size_t s = 0; s < table_bits.size(); ++s) {
                    if (s & (std::size_t{1} << i)) table_bits[s] ^= table_bits[s ^ (std::size_t{1} << i)];
                }
            }
            std::vector<std::pair<int, std::string>> terms;
            for (std::size_t s = 0; s < table_bits.size(); ++s) {
                if (!table_bits[s]) continue;
                std::string mono;
                int degree = 0;
                for (std::size_t i = 0; i < f; ++i) {
                    if (!(s & (std::size_t{1} << i))) continue;
                    if (!mono.empty()) mono += "*";
                    mono += var_name(free_vars[i]);
                    ++degree;
                }
                terms.emplace_back(degree, mono.empty() ? "1" : mono);
            }
            std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [deg, mono] : terms) rec.relation += (rec.relation.empty() ? "" : " + ") + mono;
            if (rec.relation.empty()) rec.relation = "0";
        } else if (every_single) {
            rec.status = DigitStatus::Determined;
            rec.relation = "function of earlier digits";
        } else {
            rec.status = DigitStatus::Constrained;
            well_founded = false;
        }
        table.push_back(rec);
    }
    return table;
}

std::string to_string(Branch b) { return b == Branch::All ? "all" : "odd-x"; }

std::string to_string(NormConstraint c) { return c == NormConstraint::UnitNorm ? "unit" : "one"; }

std::string to_string(DigitStatus s)
{
    switch (s) {
    case DigitStatus::Forced: return "forced";
    case DigitStatus::Free: return "free";
    case DigitStatus::Determined: return "determined";
    case DigitStatus::Constrained: return "constrained";
    }
    return "?";
}

}  // namespace padic_orbits
