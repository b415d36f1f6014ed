#include "bimodkit/hopf.hpp"

#include <map>
#include <stdexcept>

namespace bimodkit {

AlgebraMap delta_embedding(const HopfAlgebra& h) {
    const AlgebraPtr& a = h.poly_algebra;
    AlgebraPtr env = shared_env(a);
    const u32 p = a->p();
    const std::size_t d = a->dim();
    // a (x) b has known enveloping coordinates: the pure tensor of the
    // monomial coefficient vectors, reindexed by concatenating exponent
    // tuples (u-block from a, v-block from b).
    std::map<std::vector<std::size_t>, std::size_t> env_index;
    for (std::size_t i = 0; i < env->dim(); ++i) env_index[env->monomial_exponents()[i]] = i;
    const auto& poly_tuples = a->monomial_exponents();
    // delta on group coordinates: (1 (x) S) Delta.
    FpMatrix delta_group = kronecker(FpMatrix::identity(p, d), h.antipode) * h.comul;
    FpMatrix m(p, env->dim(), d);
    for (std::size_t j = 0; j < d; ++j) {
        FpMatrix y = delta_group * h.poly_to_group.column(j);
        // Back to the polynomial presentation factorwise, then scatter.
        FpMatrix ymat = y.reshaped(d, d);
        FpMatrix ypoly = h.group_to_poly * ymat * h.group_to_poly.transpose();
        FpMatrix val(p, env->dim(), 1);
        for (std::size_t i1 = 0; i1 < d; ++i1)
            for (std::size_t i2 = 0; i2 < d; ++i2) {
                u32 c = ypoly(i1, i2);
                if (!c) continue;
                std::vector<std::size_t> t = poly_tuples[i1];
                t.insert(t.end(), poly_tuples[i2].begin(), poly_tuples[i2].end());
                val.add_at(env_index.at(t), 0, c);
            }
        m.set_column(j, val);
    }
    return make_algebra_map(a, env, m);
}

Bimodule functor_F(const HopfAlgebra& h, const Module& m) {
    const AlgebraPtr& a = h.poly_algebra;
    if (!m.algebra()->same_as(*a)) throw std::invalid_argument("functor_F: module not over the Hopf algebra");
    const u32 p = a->p();
    const std::size_t n = a->generators().size();
    FpMatrix im = FpMatrix::identity(p, m.dim());
    FpMatrix ia = FpMatrix::identity(p, a->dim());
    std::vector<FpMatrix> u, v;
    for (std::size_t g = 0; g < n; ++g) {
        // w_i = g_i - 1 with g_i group-like: the left action on M (x) A is
        // (1 + W_i) (x) (1 + L_i) - 1 (x) 1.
        FpMatrix gm = im + m.action(g);
        FpMatrix ga = ia + a->left_mult(a->generators()[g]);
        u.push_back(kronecker(gm, ga) - kronecker(im, ia));
        v.push_back(kronecker(im, a->right_mult(a->generators()[g])));
    }
    return make_bimodule(a, m.dim() * a->dim(), std::move(u), std::move(v));
}

Bimodule functor_F_induced(const HopfAlgebra& h, const Module& m) {
    const AlgebraPtr& a = h.poly_algebra;
    AlgebraPtr env = shared_env(a);
    const u32 p = a->p();
    const std::size_t de = env->dim(), dm = m.dim();
    AlgebraMap delta = delta_embedding(h);
    // Quotient of env (x) M by x.delta(g) (x) m - x (x) g.m over the
    // group-like generators g = 1 + w.
    const std::size_t n = a->generators().size();
    FpMatrix rel(p, de * dm, n * de * dm);
    std::size_t col = 0;
    for (std::size_t g = 0; g < n; ++g) {
        FpMatrix dg = delta.matrix * (a->unit_coords() + FpMatrix::basis_column(p, a->dim(), a->generators()[g]));
        FpMatrix rmul = env->right_mult_by(dg);
        FpMatrix gact = FpMatrix::identity(p, dm) + m.action(g);
        for (std::size_t x = 0; x < de; ++x)
            for (std::size_t mm = 0; mm < dm; ++mm, ++col) {
                for (std::size_t r = 0; r < de; ++r)
                    if (rmul(r, x)) rel.add_at(r * dm + mm, col, rmul(r, x));
                for (std::size_t r = 0; r < dm; ++r)
                    if (gact(r, mm)) rel.add_at(x * dm + r, col, p - gact(r, mm) % p);
            }
    }
    QuotientSpace qs = make_quotient(p, de * dm, rel);
    const std::size_t q = qs.proj.rows();
    std::vector<FpMatrix> acts;
    for (std::size_t g = 0; g < 2 * n; ++g) {
        FpMatrix lg = env->left_mult(env->generators()[g]);
        FpMatrix ag(p, q, q);
        for (std::size_t j = 0; j < q; ++j) {
            FpMatrix w = qs.section.column(j).reshaped(de, dm);
            ag.set_column(j, qs.proj * (lg * w).reshaped(de * dm, 1));
        }
        acts.push_back(std::move(ag));
    }
    return make_bimodule(a, env, Module(env, q, std::move(acts)));
}

GResult functor_G_full(const Bimodule& b) {
    const u32 p = b.p();
    FpMatrix images(p, b.dim(), 0);
    for (std::size_t g = 0; g < b.n_left(); ++g) images = images.hcat(b.v_action(g));
    FpMatrix span = column_space_basis(images);
    Module left = forget_left(b);
    QuotientModule q = quotient_module(left, span);
    return GResult{std::move(q.quotient), std::move(q.proj), std::move(q.section)};
}

Module functor_G(const Bimodule& b) { return functor_G_full(b).module; }

bool check_GF_identity(const HopfAlgebra& h, const Module& m) {
    Bimodule f = functor_F(h, m);
    GResult g = functor_G_full(f);
    const AlgebraPtr& a = h.poly_algebra;
    const u32 p = a->p();
    // Natural map GF(M) -> M induced by m (x) b -> eps(b) m.
    FpMatrix n0(p, m.dim(), m.dim() * a->dim());
    for (std::size_t mi = 0; mi < m.dim(); ++mi)
        for (std::size_t bi = 0; bi < a->dim(); ++bi) {
            u32 e = a->augmentation()(0, bi);
            if (e) n0.set(mi, mi * a->dim() + bi, e);
        }
    FpMatrix nbar = n0 * g.section;
    if (!(nbar * g.proj == n0)) return false;  // does not factor
    if (!is_module_map(g.module, m, nbar)) return false;
    if (g.module.dim() != m.dim() || !is_invertible(nbar)) return false;
    return is_isomorphic(g.module, m).yes();
}

Module tensor_over_field(const HopfAlgebra& h, const Module& m, const Module& n) {
    const AlgebraPtr& a = h.poly_algebra;
    if (!m.algebra()->same_as(*a) || !n.algebra()->same_as(*a))
        throw std::invalid_argument("tensor_over_field: modules not over the Hopf algebra");
    const u32 p = a->p();
    const std::size_t d = a->dim();
    FpMatrix comul = h.comul_poly();
    std::vector<FpMatrix> acts;
    for (std::size_t g : a->generators()) {
        FpMatrix col = comul.column(g);
        FpMatrix act(p, m.dim() * n.dim(), m.dim() * n.dim());
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                u32 c = col(j * d + k, 0);
                if (c) act = act + kronecker(m.basis_action(j), n.basis_action(k)).scaled(c);
            }
        acts.push_back(std::move(act));
    }
    return Module(a, m.dim() * n.dim(), std::move(acts));
}

bool check_F_monoidal(const HopfAlgebra& h, const Module& m, const Module& n, u64 seed) {
    Bimodule lhs = functor_F(h, tensor_over_field(h, m, n));
    Bimodule rhs = tensor_over_algebra(functor_F(h, m), functor_F(h, n));
    if (lhs.dim() != rhs.dim()) return false;
    return bimodule_isomorphic(lhs, rhs, seed).yes();
}

bool sincerity_witness(const Bimodule& b) {
    if (!b.base->is_unipotent()) throw std::invalid_argument("sincerity_witness: base must be unipotent");
    bool env_proj = is_projective(b.inner);
    bool g_proj = is_projective(functor_G(b));
    return env_proj == g_proj;
}

}  // namespace bimodkit
