#ifndef BIMODKIT_VARIETIES_HPP
#define BIMODKIT_VARIETIES_HPP

#include "bimodkit/hopf.hpp"

namespace bimodkit {

/// Point of projective space over F_p, normalized so the first nonzero
/// coordinate is 1; ordered lexicographically.
struct ProjectivePoint {
    std::vector<u32> coords;

    static ProjectivePoint normalized(u32 p, std::vector<u32> coords);
    bool operator==(const ProjectivePoint&) const = default;
    bool operator<(const ProjectivePoint& o) const { return coords < o.coords; }
};

/// Sorted duplicate-free list of rational points; points live in
/// P^{ambient}(F_p) and carry ambient+1 coordinates.
struct RankVariety {
    u32 p = 2;
    std::size_t ambient = 0;
    std::vector<ProjectivePoint> points;

    bool operator==(const RankVariety&) const = default;
};

/// All points of P^{ncoords-1}(F_p), sorted.
std::vector<ProjectivePoint> all_projective_points(u32 p, std::size_t ncoords);

RankVariety intersect(const RankVariety& a, const RankVariety& b);
RankVariety unite(const RankVariety& a, const RankVariety& b);

/// X = sum pt_i * action(gen_i); requires a module over an elementary
/// abelian presentation (all truncation exponents equal p) with one
/// coordinate per generator. X^p = 0 is asserted.
FpMatrix shifted_unit_action(const Module& m, const ProjectivePoint& pt);

/// All Jordan blocks of the nilpotent X have size p, i.e. the restriction
/// to k[t]/(t^p), t -> X, is free: rank(X^{p-1}) = dim / p.
bool is_free_restriction(const FpMatrix& x, u32 p);

/// Rational points of the rank variety: all points of projective space over
/// the generator coordinates whose shifted-unit restriction is not free.
/// Only F_p-rational points are seen; refuses non-elementary-abelian input.
RankVariety rank_variety(const Module& m);
RankVariety rank_variety(const Bimodule& b);

/// If B is left-right projective, its variety avoids every point whose
/// first-block coordinates or second-block coordinates all vanish
/// (one-directional check at rational points).
bool lrp_consistency_check(const Bimodule& b);

/// V(M (x)_k N) == V(M) cap V(N) at rational points.
bool tensor_product_property_check(const HopfAlgebra& h, const Module& m, const Module& n);

}  // namespace bimodkit

#endif
