#include "bimodkit/varieties.hpp"

#include <algorithm>
#include <stdexcept>

namespace bimodkit {

ProjectivePoint ProjectivePoint::normalized(u32 p, std::vector<u32> coords) {
    for (u32& c : coords) c %= p;
    std::size_t lead = coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) {
            lead = i;
            break;
        }
    if (lead == coords.size()) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
    u64 inv = mod_inverse(coords[lead], p);
    for (u32& c : coords) c = static_cast<u32>(c * inv % p);
    return ProjectivePoint{std::move(coords)};
}

std::vector<ProjectivePoint> all_projective_points(u32 p, std::size_t ncoords) {
    std::vector<ProjectivePoint> pts;
    if (ncoords == 0) return pts;
    // Leading coordinate 1, the rest arbitrary.
    for (std::size_t lead = 0; lead < ncoords; ++lead) {
        std::size_t tail = ncoords - lead - 1;
        u64 count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            std::vector<u32> c(ncoords, 0);
            c[lead] = 1;
            u64 x = idx;
            for (std::size_t i = 0; i < tail; ++i) {
                c[lead + 1 + i] = static_cast<u32>(x % p);
                x /= p;
            }
            pts.push_back(ProjectivePoint{std::move(c)});
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

RankVariety intersect(const RankVariety& a, const RankVariety& b) {
    if (a.p != b.p || a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    RankVariety out{a.p, a.ambient, {}};
    std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                          std::back_inserter(out.points));
    return out;
}

RankVariety unite(const RankVariety& a, const RankVariety& b) {
    if (a.p != b.p || a.ambient != b.ambient) throw std::invalid_argument("unite: ambient mismatch");
    RankVariety out{a.p, a.ambient, {}};
    std::set_union(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                   std::back_inserter(out.points));
    return out;
}

namespace {

void require_elementary_abelian(const Algebra& a) {
    if (!a.is_elementary_abelian())
        throw std::invalid_argument(
            "rank varieties require an elementary abelian presentation "
            "(truncated polynomial algebra with every exponent equal to p)");
}

}  // namespace

FpMatrix shifted_unit_action(const Module& m, const ProjectivePoint& pt) {
    require_elementary_abelian(*m.algebra());
    const std::size_t n = m.algebra()->generators().size();
    if (pt.coords.size() != n)
        throw std::invalid_argument("shifted_unit_action: point length does not match generator count");
    const u32 p = m.p();
    FpMatrix x(p, m.dim(), m.dim());
    for (std::size_t i = 0; i < n; ++i)
        if (pt.coords[i]) x = x + m.action(i).scaled(pt.coords[i]);
    if (!x.pow(p).is_zero()) throw std::logic_error("shifted_unit_action: X^p != 0");
    return x;
}

bool is_free_restriction(const FpMatrix& x, u32 p) {
    if (x.rows() != x.cols()) throw std::invalid_argument("is_free_restriction: non-square");
    if (x.rows() == 0) return true;
    if (!x.pow(p).is_zero()) throw std::invalid_argument("is_free_restriction: X^p != 0");
    if (x.rows() % p != 0) return false;
    return rank(x.pow(p - 1)) == x.rows() / p;
}

RankVariety rank_variety(const Module& m) {
    require_elementary_abelian(*m.algebra());
    const std::size_t n = m.algebra()->generators().size();
    const u32 p = m.p();
    RankVariety v{p, n == 0 ? 0 : n - 1, {}};
    if (m.dim() == 0) return v;
    for (const ProjectivePoint& pt : all_projective_points(p, n)) {
        FpMatrix x = shifted_unit_action(m, pt);
        if (!is_free_restriction(x, p)) v.points.push_back(pt);
    }
    return v;  // enumeration order is already sorted
}

RankVariety rank_variety(const Bimodule& b) { return rank_variety(b.inner); }

bool lrp_consistency_check(const Bimodule& b) {
    require_elementary_abelian(*b.base);
    if (!is_lrp(b)) return true;  // vacuous
    const std::size_t n = b.n_left();
    RankVariety v = rank_variety(b);
    for (const ProjectivePoint& pt : v.points) {
        bool first_zero = true, second_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (pt.coords[i]) first_zero = false;
            if (pt.coords[n + i]) second_zero = false;
        }
        if (first_zero || second_zero) return false;
    }
    return true;
}

bool tensor_product_property_check(const HopfAlgebra& h, const Module& m, const Module& n) {
    Module t = tensor_over_field(h, m, n);
    return rank_variety(t) == intersect(rank_variety(m), rank_variety(n));
}

}  // namespace bimodkit
