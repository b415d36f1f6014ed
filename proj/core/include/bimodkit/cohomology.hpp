#ifndef BIMODKIT_COHOMOLOGY_HPP
#define BIMODKIT_COHOMOLOGY_HPP

#include "bimodkit/bimodule.hpp"

namespace bimodkit {

struct GradedDims {
    std::vector<std::size_t> dims;
    bool operator==(const GradedDims&) const = default;
};

/// Minimal projective resolution P_len -> ... -> P_0 -> M -> 0 over a local
/// algebra, computed by iterated covers inside free modules. Differentials
/// are stored as plain k-matrices between the underlying spaces of the free
/// terms; diff(i) maps P_{i+1} -> P_i for i >= 0.
class MinimalResolution {
  public:
    MinimalResolution(AlgebraPtr algebra, Module module, std::vector<std::size_t> ranks,
                      std::vector<FpMatrix> diffs, FpMatrix augmentation);

    const AlgebraPtr& algebra() const { return alg_; }
    const Module& module() const { return mod_; }
    std::size_t length() const { return ranks_.size() - 1; }
    std::size_t term_rank(std::size_t i) const { return ranks_[i]; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    /// The i-th term as a free module.
    Module term(std::size_t i) const { return free_module(alg_, ranks_[i]); }
    const FpMatrix& diff(std::size_t i) const { return diffs_[i]; }
    const FpMatrix& augmentation() const { return aug_; }

    /// Exactness at every term (by rank) and minimality (differential
    /// entries in the radical). Throws on violation.
    void validate() const;

    /// Algebra-coefficient entry lambda_{t,s} of diff(i): the coordinates of
    /// the (t, s) entry of the matrix over the algebra.
    FpMatrix entry(std::size_t i, std::size_t t, std::size_t s) const;

  private:
    AlgebraPtr alg_;
    Module mod_;
    std::vector<std::size_t> ranks_;
    std::vector<FpMatrix> diffs_;
    FpMatrix aug_;
};

MinimalResolution minimal_resolution(const Module& m, std::size_t length);

/// dim Ext^i(M, N) for 0 <= i <= max_degree, as the cohomology of
/// Hom(P_*, N) (the differentials are computed honestly, not read off).
GradedDims ext_dims(const Module& m, const Module& n, std::size_t max_degree);

/// dim HH^i(A) = dim Ext^i over the enveloping algebra of the regular
/// bimodule against itself.
GradedDims hochschild_dims(const AlgebraPtr& a, std::size_t max_degree);

/// For elementary abelian A: dim HH^i(A) == dim A * dim H^i(A, k) in every
/// degree up to max_degree, both sides computed independently.
bool holm_check(const AlgebraPtr& a, std::size_t max_degree);

/// The tensor-of-periodic-complexes resolution of k over an elementary
/// abelian algebra, with terms labeled by exponent tuples in degree-lex
/// order: P_d = (+) A.eps_j over |j| = d, differential
///   d(eps_j) = sum_i (-1)^{j_1+...+j_{i-1}} x_i^{c(j_i)} eps_{j - e_i},
/// c(j_i) = 1 for odd j_i and p-1 for even j_i.
struct StandardResolution {
    AlgebraPtr algebra;
    std::vector<std::vector<std::vector<std::size_t>>> labels;  // per degree
    std::vector<FpMatrix> diffs;
    FpMatrix augmentation;
};
StandardResolution standard_resolution(const AlgebraPtr& a, std::size_t length);

/// Matrix of the automorphism action on Ext^d(k, k) in the dual basis of
/// the standard resolution's labels. The comparison k = (twist of k) is
/// lifted to a chain map along the resolution; the convention used here
/// lifts psi^{-1} so that the assignment psi -> matrix is a group
/// homomorphism. On the degree-1 class dual to eps_{1,0,...,0} a diagonal
/// twist w_1 -> c w_1 therefore acts by c^{-1} (equal to c at p = 3, c != 1
/// as soon as c != 1).
FpMatrix aut_action_on_cohomology(const Automorphism& psi, std::size_t degree);

}  // namespace bimodkit

#endif
