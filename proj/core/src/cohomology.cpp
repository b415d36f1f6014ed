#include "bimodkit/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bimodkit {

namespace {

// Apply L to every length-a block of each column (the left action of an
// algebra element on the free module A^r).
FpMatrix apply_blockwise(const FpMatrix& l, const FpMatrix& vecs, std::size_t r) {
    const std::size_t a = l.rows();
    FpMatrix out(vecs.p(), vecs.rows(), vecs.cols());
    for (std::size_t c = 0; c < vecs.cols(); ++c) {
        FpMatrix col = vecs.column(c).reshaped(r, a);
        FpMatrix res = col * l.transpose();
        out.set_column(c, res.reshaped(vecs.rows(), 1));
    }
    return out;
}

}  // namespace

MinimalResolution::MinimalResolution(AlgebraPtr algebra, Module module, std::vector<std::size_t> ranks,
                                     std::vector<FpMatrix> diffs, FpMatrix augmentation)
    : alg_(std::move(algebra)),
      mod_(std::move(module)),
      ranks_(std::move(ranks)),
      diffs_(std::move(diffs)),
      aug_(std::move(augmentation)) {}

FpMatrix MinimalResolution::entry(std::size_t i, std::size_t t, std::size_t s) const {
    const std::size_t a = alg_->dim();
    FpMatrix col = diffs_[i].column(s * a + alg_->unit_index());
    FpMatrix out(alg_->p(), a, 1);
    for (std::size_t k = 0; k < a; ++k) out.set(k, 0, col(t * a + k, 0));
    return out;
}

void MinimalResolution::validate() const {
    const std::size_t a = alg_->dim();
    // Exactness by rank at every inner term.
    std::size_t prev_rank = rank(aug_);
    if (mod_.dim() > 0 && prev_rank != mod_.dim()) throw std::logic_error("resolution: cover not onto");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        std::size_t dom = ranks_[i] * a;
        std::size_t nullity = dom - prev_rank;
        std::size_t r = diffs_[i].cols() ? rank(diffs_[i]) : 0;
        if (r != nullity) throw std::logic_error("resolution: not exact");
        prev_rank = r;
        // Minimality: every entry of the differential lies in the radical.
        for (std::size_t s = 0; s < ranks_[i + 1]; ++s)
            for (std::size_t t = 0; t < ranks_[i]; ++t)
                if (alg_->augment(entry(i, t, s)) != 0)
                    throw std::logic_error("resolution: differential not in the radical");
    }
}

MinimalResolution minimal_resolution(const Module& m, std::size_t length) {
    const AlgebraPtr& a = m.algebra();
    if (!a->is_unipotent()) throw std::invalid_argument("minimal_resolution: algebra is not local");
    const u32 p = a->p();
    const std::size_t ad = a->dim();
    Cover c0 = projective_cover(m);
    std::vector<std::size_t> ranks{c0.rank};
    std::vector<FpMatrix> diffs;
    FpMatrix aug = c0.onto.matrix;
    FpMatrix ker = kernel_basis(aug);
    // rad is generated by the shifted generators; the kernel is a submodule,
    // so their images span rad.ker for commutative algebras (the general
    // case closes up under all basis actions afterwards).
    std::vector<FpMatrix> rad_lmuls;
    for (std::size_t g : a->generators()) {
        u32 e = a->augmentation()(0, g);
        rad_lmuls.push_back(a->left_mult(g) - FpMatrix::identity(p, ad).scaled(e));
    }
    const bool commutative = a->is_commutative();
    for (std::size_t step = 1; step <= length; ++step) {
        const std::size_t r_prev = ranks.back();
        if (ker.cols() == 0) {
            ranks.push_back(0);
            diffs.push_back(FpMatrix(p, r_prev * ad, 0));
            ker = FpMatrix(p, 0, 0);
            continue;
        }
        // Minimal generators of the kernel: columns not in rad . ker.
        FpMatrix radk(p, r_prev * ad, 0);
        for (const FpMatrix& lm : rad_lmuls) radk = radk.hcat(apply_blockwise(lm, ker, r_prev));
        if (!commutative) {
            Module ambient = free_module(a, r_prev);
            radk = submodule_closure(ambient, radk);
        }
        IncrementalSpan span(p, r_prev * ad);
        for (std::size_t j = 0; j < radk.cols(); ++j) span.try_insert(radk.column(j));
        std::vector<std::size_t> picks;
        for (std::size_t j = 0; j < ker.cols(); ++j)
            if (span.try_insert(ker.column(j))) picks.push_back(j);
        const std::size_t r = picks.size();
        FpMatrix d(p, r_prev * ad, r * ad);
        for (std::size_t s = 0; s < r; ++s) {
            FpMatrix gen = ker.column(picks[s]);
            for (std::size_t t = 0; t < ad; ++t)
                d.set_column(s * ad + t, apply_blockwise(a->left_mult(t), gen, r_prev));
        }
        ranks.push_back(r);
        ker = kernel_basis(d);
        diffs.push_back(std::move(d));
    }
    return MinimalResolution(a, m, std::move(ranks), std::move(diffs), std::move(aug));
}

GradedDims ext_dims(const Module& m, const Module& n, std::size_t max_degree) {
    if (!m.same_algebra(n)) throw std::invalid_argument("ext_dims: algebra mismatch");
    const AlgebraPtr& a = m.algebra();
    const u32 p = a->p();
    MinimalResolution res = minimal_resolution(m, max_degree + 1);
    // Hom(A^r, N) = N^r; the transpose complex has block matrices act_N(entry).
    auto hom_map = [&](std::size_t i) {
        const std::size_t rs = res.term_rank(i + 1), rt = res.term_rank(i);
        FpMatrix t(p, rs * n.dim(), rt * n.dim());
        for (std::size_t s = 0; s < rs; ++s)
            for (std::size_t tt = 0; tt < rt; ++tt) {
                FpMatrix act = n.act_by(res.entry(i, tt, s));
                for (std::size_t i2 = 0; i2 < n.dim(); ++i2)
                    for (std::size_t j2 = 0; j2 < n.dim(); ++j2)
                        if (act(i2, j2)) t.set(s * n.dim() + i2, tt * n.dim() + j2, act(i2, j2));
            }
        return t;
    };
    GradedDims out;
    std::size_t prev_rank = 0;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        FpMatrix next = hom_map(i);
        std::size_t dom = res.term_rank(i) * n.dim();
        std::size_t rk = next.cols() == 0 || next.rows() == 0 ? 0 : rank(next);
        out.dims.push_back(dom - rk - prev_rank);
        prev_rank = rk;
    }
    return out;
}

GradedDims hochschild_dims(const AlgebraPtr& a, std::size_t max_degree) {
    if (!a->is_unipotent()) throw std::invalid_argument("hochschild_dims: algebra is not unipotent");
    Bimodule reg = regular_bimodule(a);
    return ext_dims(reg.inner, reg.inner, max_degree);
}

bool holm_check(const AlgebraPtr& a, std::size_t max_degree) {
    if (!a->is_elementary_abelian())
        throw std::invalid_argument("holm_check: needs an elementary abelian algebra");
    GradedDims hh = hochschild_dims(a, max_degree);
    Module k = trivial_module(a);
    GradedDims h = ext_dims(k, k, max_degree);
    for (std::size_t i = 0; i <= max_degree; ++i)
        if (hh.dims[i] != a->dim() * h.dims[i]) return false;
    return true;
}

namespace {

std::vector<std::vector<std::size_t>> compositions(std::size_t n, std::size_t total) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<std::size_t> cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, total);
    // Within a degree, earlier variables sort first: (d,0,...) precedes
    // (0,...,d), so the class of x_1 is the first one.
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

StandardResolution standard_resolution(const AlgebraPtr& a, std::size_t length) {
    if (a->kind() != AlgebraKind::Truncated)
        throw std::invalid_argument("standard_resolution: needs a truncated polynomial algebra");
    const u32 p = a->p();
    const std::size_t n = a->generators().size(), ad = a->dim();
    const std::vector<std::size_t>& exps = a->exponents();
    StandardResolution res;
    res.algebra = a;
    for (std::size_t d = 0; d <= length; ++d) res.labels.push_back(compositions(n, d));
    res.augmentation = a->augmentation();
    // Powers of the generators used by the differentials.
    std::vector<FpMatrix> l_odd, l_even;
    for (std::size_t i = 0; i < n; ++i) {
        l_odd.push_back(a->left_mult(a->generators()[i]));
        l_even.push_back(l_odd.back().pow(exps[i] - 1));
    }
    for (std::size_t d = 1; d <= length; ++d) {
        const auto& src = res.labels[d];
        const auto& dst = res.labels[d - 1];
        auto find_dst = [&](const std::vector<std::size_t>& t) {
            return static_cast<std::size_t>(
                std::lower_bound(dst.begin(), dst.end(), t, std::greater<>()) - dst.begin());
        };
        FpMatrix diff(p, dst.size() * ad, src.size() * ad);
        for (std::size_t s = 0; s < src.size(); ++s) {
            const auto& j = src[s];
            std::size_t deg_before = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (j[i] > 0) {
                    std::vector<std::size_t> tgt = j;
                    --tgt[i];
                    std::size_t t = find_dst(tgt);
                    const FpMatrix& l = (j[i] % 2 == 1) ? l_odd[i] : l_even[i];
                    u32 sign = (deg_before % 2 == 0) ? 1 : p - 1;
                    for (std::size_t bt = 0; bt < ad; ++bt) {
                        FpMatrix col = l.column(bt).scaled(sign);
                        for (std::size_t row = 0; row < ad; ++row)
                            if (col(row, 0)) diff.add_at(t * ad + row, s * ad + bt, col(row, 0));
                    }
                }
                deg_before += j[i];
            }
        }
        res.diffs.push_back(std::move(diff));
    }
    // d o d = 0.
    for (std::size_t d = 1; d < res.diffs.size(); ++d)
        if (!(res.diffs[d - 1] * res.diffs[d]).is_zero())
            throw std::logic_error("standard_resolution: differential does not square to zero");
    if (!res.diffs.empty() && !(res.augmentation * res.diffs[0]).is_zero())
        throw std::logic_error("standard_resolution: augmentation does not kill the image");
    return res;
}

FpMatrix aut_action_on_cohomology(const Automorphism& psi, std::size_t degree) {
    const AlgebraPtr& a = psi.algebra;
    if (a->kind() != AlgebraKind::Truncated)
        throw std::invalid_argument("aut_action_on_cohomology: needs a truncated polynomial algebra");
    const u32 p = a->p();
    const std::size_t ad = a->dim(), n = a->generators().size();
    // Lift psi^{-1}; with this convention psi -> matrix is a homomorphism.
    Automorphism phi = psi.inverted();
    StandardResolution res = standard_resolution(a, degree);
    // A chain map into the twisted complex is the twisted-linear extension
    // of its values on the free generators, so each degree needs only one
    // solve D xi_t = (C_{prev} D) e_t; intertwining holds by construction.
    std::vector<FpMatrix> phi_lmults;
    for (std::size_t b = 0; b < ad; ++b) phi_lmults.push_back(a->left_mult_by(phi.matrix.column(b)));
    FpMatrix chain = phi.matrix;  // degree 0: a -> phi(a)
    for (std::size_t d = 1; d <= degree; ++d) {
        const std::size_t r = res.labels[d].size();
        const FpMatrix& dmat = res.diffs[d - 1];
        FpMatrix rhs(p, dmat.rows(), r);
        FpMatrix cd = chain * dmat;
        for (std::size_t t = 0; t < r; ++t) rhs.set_column(t, cd.column(t * ad + a->unit_index()));
        auto xi = solve(dmat, rhs);
        if (!xi) throw std::logic_error("aut_action_on_cohomology: chain lift failed");
        FpMatrix x(p, r * ad, r * ad);
        for (std::size_t t = 0; t < r; ++t) {
            FpMatrix gen_image = xi->column(t).reshaped(r, ad);
            for (std::size_t bt = 0; bt < ad; ++bt)
                x.set_column(t * ad + bt, (gen_image * phi_lmults[bt].transpose()).reshaped(r * ad, 1));
        }
        chain = std::move(x);
    }
    // E[t][s] = eps(algebra entry (t, s) of the top chain map).
    const std::size_t r = res.labels[degree].size();
    FpMatrix e(p, r, r);
    for (std::size_t s = 0; s < r; ++s) {
        FpMatrix col = chain.column(s * ad + a->unit_index());
        for (std::size_t t = 0; t < r; ++t) {
            u64 v = 0;
            for (std::size_t k = 0; k < ad; ++k)
                v += static_cast<u64>(a->augmentation()(0, k)) * col(t * ad + k, 0);
            e.set(t, s, v % p);
        }
    }
    return e.transpose();
}

}  // namespace bimodkit
