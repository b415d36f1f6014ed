#ifndef BIMODKIT_HOPF_HPP
#define BIMODKIT_HOPF_HPP

#include "bimodkit/bimodule.hpp"

namespace bimodkit {

/// The embedding delta: A -> A^env, g -> g (x) g^{-1} on group elements,
/// written on the nilpotent-generator presentations of both sides and
/// validated as an algebra map.
AlgebraMap delta_embedding(const HopfAlgebra& h);

/// Induction from modules to bimodules, computed through the closed form on
/// M (x) A: for a group-like g, g.(m (x) b) = gm (x) gb and
/// (m (x) b).a = m (x) ba. The image is left-right projective.
Bimodule functor_F(const HopfAlgebra& h, const Module& m);

/// Literal induction A^env (x)_{delta(A)} M as a coequalizer; cross-check
/// for functor_F on small inputs.
Bimodule functor_F_induced(const HopfAlgebra& h, const Module& m);

/// B (x)_A k: the quotient of B (viewed through its left action) by the
/// span of all right-generator images, with the stored projection.
struct GResult {
    Module module;
    FpMatrix proj;
    FpMatrix section;
};
GResult functor_G_full(const Bimodule& b);
Module functor_G(const Bimodule& b);

/// G(F(M)) compared with M through the explicit natural map m (x) b ->
/// eps(b) m; true iff that map is a bijective intertwiner (and the
/// isomorphism search agrees).
bool check_GF_identity(const HopfAlgebra& h, const Module& m);

/// is_isomorphic(F(M (x)_k N), F(M) (x)_A F(N)).
bool check_F_monoidal(const HopfAlgebra& h, const Module& m, const Module& n, u64 seed = 0x414243);

/// M (x)_k N with the diagonal action through the comultiplication.
Module tensor_over_field(const HopfAlgebra& h, const Module& m, const Module& n);

/// Projectivity transfer: env-projectivity of B iff projectivity of G(B)
/// over A. This biconditional is the checkable finite content of the
/// sincerity of B -> B (x)_A k.
bool sincerity_witness(const Bimodule& b);

}  // namespace bimodkit

#endif
