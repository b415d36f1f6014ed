#ifndef BIMODKIT_BIMODULE_HPP
#define BIMODKIT_BIMODULE_HPP

#include "bimodkit/module.hpp"

namespace bimodkit {

/// Bimodule over a base algebra Lambda, stored as a module over the
/// enveloping algebra with the generator split fixed as u_1..u_n (acting
/// from the left) followed by v_1..v_n (acting from the right).
struct Bimodule {
    AlgebraPtr base;
    AlgebraPtr env;
    Module inner;

    std::size_t n_left() const { return base->generators().size(); }
    std::size_t dim() const { return inner.dim(); }
    const FpMatrix& u_action(std::size_t i) const { return inner.action(i); }
    const FpMatrix& v_action(std::size_t i) const { return inner.action(n_left() + i); }
    u32 p() const { return base->p(); }
};

/// Enveloping algebra, shared per base algebra instance.
AlgebraPtr shared_env(const AlgebraPtr& base);

Bimodule make_bimodule(AlgebraPtr base, AlgebraPtr env, Module inner);
Bimodule make_bimodule(const AlgebraPtr& base, std::size_t dim, std::vector<FpMatrix> u_acts,
                       std::vector<FpMatrix> v_acts);

/// Lambda itself with left/right multiplication.
Bimodule regular_bimodule(const AlgebraPtr& a);
/// The ground field with zero u/v actions.
Bimodule trivial_bimodule(const AlgebraPtr& a);
/// (Lambda^env)^rank as a bimodule (free over the enveloping algebra).
Bimodule free_env_bimodule(const AlgebraPtr& a, std::size_t rank);
Bimodule direct_sum(const Bimodule& b, const Bimodule& c);

/// Underlying space Lambda, left action through alpha, right action through
/// beta: u_i = L(alpha(w_i)), v_i = R(beta(w_i)).
Bimodule twisted_bimodule(const Automorphism& alpha, const Automorphism& beta);

/// Keep only the u actions (left module over the base).
Module forget_left(const Bimodule& b);
/// Keep only the v actions (left module over the opposite base).
Module forget_right(const Bimodule& b);

/// Projective as a left module and as a right module.
bool is_lrp(const Bimodule& b);

/// B (x)_Lambda C with a stored projection/section pair from the plain
/// tensor space. When one side is projective the quotient is realized
/// through a free-module coordinate system; the generic coequalizer
/// (quotient by span{b.l (x) c - b (x) l.c}) is always available and is the
/// oracle the fast path is tested against. balanced_warning is set when
/// neither side is projective (the result is still the coequalizer).
struct TensorProduct {
    Bimodule prod;
    FpMatrix proj;     // dim(B)*dim(C) columns -> quotient coordinates
    FpMatrix section;  // right inverse of proj
    bool balanced_warning = false;
};
TensorProduct tensor_over_algebra_full(const Bimodule& b, const Bimodule& c,
                                       bool force_coequalizer = false);
Bimodule tensor_over_algebra(const Bimodule& b, const Bimodule& c);

/// Duals with their representing functionals: reps[s] is the dim(Lambda) x
/// dim(B) matrix of the s-th basis element of the Hom space.
/// left_dual(B)  = Hom(B as right module, Lambda), actions
///   (l.f)(b) = l f(b),   (f.l)(b) = f(l b);
/// right_dual(B) = Hom(B as left module, Lambda), actions
///   (l.g)(b) = g(b l),   (g.l)(b) = g(b) l.
struct DualData {
    Bimodule dual;
    std::vector<FpMatrix> reps;
};
DualData left_dual_data(const Bimodule& b);
DualData right_dual_data(const Bimodule& b);
Bimodule left_dual(const Bimodule& b);
Bimodule right_dual(const Bimodule& b);

/// ev: B' (x)_Lambda B -> Lambda, f (x) b -> f(b), as a bimodule map over
/// the enveloping algebra (validated).
ModuleMap evaluation(const Bimodule& b);
/// coev: Lambda -> B (x)_Lambda B', 1 -> sum b_i (x) f_i with
/// sum b_i.f_i(-) the identity of B (solved as a linear system).
ModuleMap coevaluation(const Bimodule& b);
/// ev': B (x)_Lambda 'B -> Lambda and coev': Lambda -> 'B (x)_Lambda B for
/// the right dual.
ModuleMap evaluation_right(const Bimodule& b);
ModuleMap coevaluation_right(const Bimodule& b);

/// Checks all four triangle composites: both left-dual composites equal
/// id_B and id_{B'}, both right-dual composites equal id_B and id_{'B}.
/// The induced maps are evaluated exactly through plain-tensor lifts of the
/// stored projections; associator() gives the same regrouping isomorphism
/// as one explicit matrix.
bool verify_zigzag(const Bimodule& b);

/// Explicit matrix of the associativity isomorphism
/// (B (x) C) (x) D -> B (x) (C (x) D) between the stored quotient
/// presentations. Materializes the full regrouping; meant for small inputs.
FpMatrix associator(const Bimodule& b, const Bimodule& c, const Bimodule& d);

/// Builds alpha_{B,C}: C (x)_Lambda B' -> Hom(B as right module, C as right
/// module), c (x) f -> (b -> c.f(b)), and the degree-0 adjunction
/// tau: Hom_env(B (x)_Lambda C, D) -> Hom_env(B, Hom(C as right module, D)),
/// and returns true iff alpha is a bijective bimodule map and tau is a
/// bijection (checked for D = Lambda and D = B (x)_Lambda C).
bool hom_tensor_iso_check(const Bimodule& b, const Bimodule& c);

IsoResult bimodule_isomorphic(const Bimodule& b, const Bimodule& c, u64 seed = 0x414243);

Bimodule strip_projective_summands(const Bimodule& b);

/// B (x)_k C with the outer structure: u from B, v from C.
Bimodule tensor_over_field(const Bimodule& b, const Bimodule& c);

/// Syzygy over the enveloping algebra.
Bimodule syzygy(const Bimodule& b);

/// Hom(C as right module, D as right module) as a bimodule with
/// (l.phi)(c) = l.phi(c) and (phi.l)(c) = phi(l.c), plus representing
/// matrices.
struct HomBimodule {
    Bimodule hom;
    std::vector<FpMatrix> reps;  // dim(D) x dim(C) matrices
};
HomBimodule hom_right_modules(const Bimodule& c, const Bimodule& d);

}  // namespace bimodkit

#endif
