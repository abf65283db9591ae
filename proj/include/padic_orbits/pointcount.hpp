#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic_orbits/exact.hpp"

namespace padic_orbits {

enum class NormConstraint {
    UnitNorm,  // |x^2 - d y^2| = 1, an open subset of the plane
    NormOne,   // x^2 - d y^2 = 1, a curve
};

struct NormEquation {
    long long d;
    NormConstraint constraint;

    int dim() const { return constraint == NormConstraint::UnitNorm ? 2 : 1; }
};

/// Which residues mod p^k are counted for a NormOne curve.
///   Liftable: reductions of genuine Z_p-solutions (the image of the reduction map).
///   Raw:      every pair satisfying x^2 - d y^2 = 1 mod p^k.
/// Both agree for UnitNorm and, for squarefree d, whenever p is odd.
enum class CountMode { Liftable, Raw };

/// Which solutions are counted. OddX keeps the residues with x odd, which for
/// p = 2 is the index-2 subgroup of the norm-one group containing the identity;
/// it is only available at p = 2.
enum class Branch { All, OddX };

inline constexpr std::uint64_t kEnumerationBudget = 1'000'000'000ULL;

/// Modulus exponent K such that a residue mod p^k lifts to a Z_p-point iff it is
/// the reduction of a solution mod p^K. The gradient (2x, -2dy) of x^2 - d y^2
/// has valuation v = 0 at every solution for odd p and v = 1 for p = 2, so
/// K = max(k + v, 2v + 1).
int lifting_level(std::uint64_t p, int k);

/// Exact number of residues (x, y) mod p^k meeting the constraint, by plain
/// enumeration of (Z/p^K)^2. The x-range is split across worker_count() threads;
/// the result does not depend on the split.
std::uint64_t count_mod(const NormEquation& eq, std::uint64_t p, int k, CountMode mode = CountMode::Liftable,
                        Branch branch = Branch::All, unsigned workers = 0);

struct CountProfile {
    NormEquation equation;
    std::uint64_t p;
    Branch branch;
    std::vector<std::pair<int, std::uint64_t>> counts;  // (k, N_k)
    int dim;
    std::optional<int> stabilized_from;
    std::optional<ExactQ> volume;  // N_{k0} / p^{k0 dim}
};

/// Counts for k = 1..k_max. Stabilization is declared at the least k0 after which
/// every step scales by exactly p^dim, and only when at least two such steps
/// were observed.
CountProfile volume_profile(const NormEquation& eq, std::uint64_t p, int k_max, CountMode mode = CountMode::Liftable,
                            Branch branch = Branch::All);

/// Residues (x, y) mod p^k of NormOne solutions that lift to Z_p-points.
std::vector<std::pair<std::uint64_t, std::uint64_t>> liftable_image(const NormEquation& eq, std::uint64_t p, int k,
                                                                    Branch branch = Branch::All);

enum class DigitStatus { Forced, Free, Determined, Constrained };

struct DigitRecord {
    int index;        // i in x = x_0 + 2 x_1 + 4 x_2 + ...
    char variable;    // 'x' or 'y'
    DigitStatus status;
    int value = 0;    // for Forced
    std::string relation;  // for Determined: right-hand side over F_2 in the free digits

    std::string describe() const;
};

/// Binary digit structure of the 2-adic solutions of a NormOne equation,
/// digits x_0, y_0, x_1, y_1, ... up to index depth - 1, read off from all
/// residues mod 2^depth that lift.
std::vector<DigitRecord> digit_table(const NormEquation& eq, std::uint64_t p, int depth, Branch branch = Branch::All);

std::string to_string(NormConstraint c);
std::string to_string(DigitStatus s);
std::string to_string(Branch b);

}  // namespace padic_orbits
