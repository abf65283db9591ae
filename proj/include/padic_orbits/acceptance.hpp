#pragma once

#include <set>
#include <string>
#include <vector>

namespace padic_orbits {

enum class Outcome { Pass, Fail, Skipped };

std::string to_string(Outcome o);

struct CriterionResult {
    int id;
    std::string key;
    std::string title;
    Outcome outcome;
    std::string detail;
    double seconds;
    double limit_seconds;
};

struct AcceptanceOptions {
    std::set<std::string> skip;   // ids ("5") or keys ("cnf")
    bool tripwire = false;        // perturbs one exact constant; some criterion must then fail
    long long cnf_terms = 1'000'000;
    long long global_terms = 1'000'000;
    double global_tolerance = 1e-4;
    double cone_tolerance = 1e-6;
    double sphere_tolerance = 1e-8;
    double conversion_tolerance = 1e-12;
    int jacobian_points = 100;
    unsigned long long seed = 20240611;
};

/// Criterion keys in order: torus, digits, classnum, gl2, cnf, global, trace, kirillov, jacobian.
const std::vector<std::string>& criterion_keys();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace padic_orbits
