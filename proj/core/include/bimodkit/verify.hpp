#ifndef BIMODKIT_VERIFY_HPP
#define BIMODKIT_VERIFY_HPP

#include <string>

#include "bimodkit/cohomology.hpp"
#include "bimodkit/rng.hpp"
#include "bimodkit/varieties.hpp"

namespace bimodkit {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    u32 p = 2;
    std::size_t n = 1;
    std::size_t max_degree = 4;
    u64 seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

/// Replays the library's structural identities over the group algebra of
/// (Z/p)^n on generated corpora: unipotence, duality and rigidity, the
/// twisted-bimodule group law and varieties, induction/restriction between
/// modules and bimodules, sincerity, cohomology dimensions and the
/// automorphism action. Supported grid: p in {2,3,5}, n in {1,2}.
/// Deterministic for a fixed seed.
VerifyReport run_verify_suite(u32 p, std::size_t n, std::size_t max_degree, u64 seed);

std::string report_to_json(const VerifyReport& r);
std::string report_to_table(const VerifyReport& r);

/// Seeded generator of left-right projective bimodules: inductions of random
/// modules, twisted bimodules, free summands and tensor combinations.
Bimodule random_lrp_bimodule(const HopfAlgebra& h, Rng& rng, std::size_t max_dim);

/// Seeded invertible linear substitutions on the generator span.
Automorphism random_linear_automorphism(const AlgebraPtr& a, Rng& rng);

}  // namespace bimodkit

#endif
