#ifndef BIMODKIT_MODULE_HPP
#define BIMODKIT_MODULE_HPP

#include <optional>
#include <vector>

#include "bimodkit/algebra.hpp"

namespace bimodkit {

/// Left module over a finite dimensional algebra: a dimension plus one
/// action matrix per algebra generator. Relation compliance is checked at
/// construction; actions of arbitrary algebra elements are derived from the
/// generator actions through the algebra's monomial decomposition.
class Module {
  public:
    Module() = default;
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<FpMatrix> gen_actions);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return dim_; }
    u32 p() const { return alg_->p(); }
    const FpMatrix& action(std::size_t g) const { return acts_[g]; }
    const std::vector<FpMatrix>& actions() const { return acts_; }

    /// Action of the i-th algebra basis element.
    const FpMatrix& basis_action(std::size_t i) const;
    /// Action of an arbitrary element given by a coordinate column.
    FpMatrix act_by(const FpMatrix& coords) const;

    bool same_algebra(const Module& o) const { return alg_->same_as(*o.alg_); }

  private:
    AlgebraPtr alg_;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> acts_;
    mutable std::vector<FpMatrix> basis_acts_;  // filled on first use
};

Module zero_module(const AlgebraPtr& a);
/// The ground field as a module through the augmentation.
Module trivial_module(const AlgebraPtr& a);
Module regular_module(const AlgebraPtr& a);
Module free_module(const AlgebraPtr& a, std::size_t rank);
/// Over k[w]/(w^m): w acting as a single nilpotent Jordan block of size s <= m.
Module jordan_module(const AlgebraPtr& a, std::size_t block_size);
Module direct_sum(const Module& m, const Module& n);

/// Homomorphism of modules, stored as a target.dim x source.dim matrix that
/// intertwines every generator action (validated).
struct ModuleMap {
    Module source;
    Module target;
    FpMatrix matrix;
};
ModuleMap make_module_map(Module source, Module target, FpMatrix matrix);
bool is_module_map(const Module& source, const Module& target, const FpMatrix& t);

/// Basis of Hom(M, N) as matrices (solving the intertwiner system).
std::vector<FpMatrix> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

/// Basis of rad(A).M as columns.
FpMatrix radical_span(const Module& m);

/// Freeness test over a local algebra: dim M == dim(M / rad M) * dim A.
bool is_projective(const Module& m);

struct Cover {
    Module projective;  // A^rank
    ModuleMap onto;     // surjection onto the covered module
    std::size_t rank;
};
/// Projective cover over a local algebra: P = A^r with r = dim(M / rad M),
/// kernel inside rad P.
Cover projective_cover(const Module& m);

/// Kernel of the projective cover, with any free summand split off.
Module syzygy(const Module& m);
/// Computed as D(syzygy(D(M))) over the opposite algebra; valid for
/// selfinjective algebras where injectives and projectives coincide.
Module cosyzygy(const Module& m);

/// Vector-space dual as a module over the opposite algebra.
Module dual_module(const Module& m);

/// Splits off copies of the regular module until none remains. Over a local
/// algebra M has a free summand iff some homomorphism M -> A is surjective,
/// which is a linear condition on Hom(M, A).
Module strip_projective_summands(const Module& m);

enum class Iso { No, Yes, Unknown };
struct IsoResult {
    Iso verdict;
    std::optional<FpMatrix> witness;  // invertible intertwiner when Yes
    bool yes() const { return verdict == Iso::Yes; }
};

/// Searches Hom(M, N) for an invertible element: exhaustively when p^dim Hom
/// is small enough, otherwise by seeded random sampling (1000 trials). A
/// sampling miss returns Unknown, never No.
IsoResult is_isomorphic(const Module& m, const Module& n, u64 seed = 0x414243);

/// Restriction of scalars along an algebra map f: B -> A.
Module restrict_along(const AlgebraMap& f, const Module& m);

struct QuotientModule {
    Module quotient;
    FpMatrix proj;
    FpMatrix section;
};
/// Quotient by an action-stable subspace (columns of span).
QuotientModule quotient_module(const Module& m, const FpMatrix& span);

struct Submodule {
    Module sub;
    FpMatrix inclusion;
};
/// Submodule on an action-stable subspace basis.
Submodule submodule(const Module& m, const FpMatrix& span);

/// Smallest action-stable subspace containing the given columns.
FpMatrix submodule_closure(const Module& m, const FpMatrix& vectors);

}  // namespace bimodkit

#endif
