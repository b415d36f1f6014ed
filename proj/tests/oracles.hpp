#ifndef BIMODKIT_TESTS_ORACLES_HPP
#define BIMODKIT_TESTS_ORACLES_HPP

// Test-only brute-force oracle: Ext dimensions through a deliberately
// NON-minimal resolution, so the Hom-complex differentials do not vanish
// and the homology computation is exercised for real. The generator
// selection works by greedy submodule generation (no radical/top argument),
// independent of the minimal-resolution path in the library.

#include "bimodkit/module.hpp"

namespace bimodkit::oracles {

inline FpMatrix block_action(const Algebra& a, std::size_t basis_index, const FpMatrix& vec,
                             std::size_t r) {
    FpMatrix col = vec.reshaped(r, a.dim());
    return (col * a.left_mult(basis_index).transpose()).reshaped(vec.rows(), 1);
}

inline std::vector<std::size_t> nonminimal_ext_dims(const Module& m, const Module& n,
                                                    std::size_t max_degree) {
    const AlgebraPtr& a = m.algebra();
    const u32 p = a->p();
    const std::size_t ad = a->dim();

    // Greedy module generators of a subspace (columns span an action-stable
    // subspace of the ambient free module), plus one duplicate so the cover
    // is never minimal.
    auto padded_generators = [&](const Module& ambient, const FpMatrix& cols) {
        std::vector<FpMatrix> gens;
        FpMatrix span(p, cols.rows(), 0);
        for (std::size_t j = 0; j < cols.cols(); ++j) {
            FpMatrix v = cols.column(j);
            if (span.cols() && in_column_space(span, v)) continue;
            gens.push_back(v);
            span = submodule_closure(ambient, span.hcat(v));
            if (span.cols() == static_cast<std::size_t>(rank(cols))) {
                // everything else is generated; stop scanning
                bool done = true;
                for (std::size_t j2 = j + 1; j2 < cols.cols() && done; ++j2)
                    if (!in_column_space(span, cols.column(j2))) done = false;
                if (done) break;
            }
        }
        if (!gens.empty()) gens.push_back(gens[0]);
        return gens;
    };

    std::vector<std::size_t> ranks;
    std::vector<FpMatrix> diffs;
    // Step 0: cover M itself through its standard basis (maximally lazy).
    std::vector<FpMatrix> gens0;
    {
        FpMatrix id = FpMatrix::identity(p, m.dim());
        FpMatrix span(p, m.dim(), 0);
        for (std::size_t j = 0; j < m.dim(); ++j) {
            FpMatrix v = id.column(j);
            if (span.cols() && in_column_space(span, v)) continue;
            gens0.push_back(v);
            span = submodule_closure(m, span.hcat(v));
        }
        if (!gens0.empty()) gens0.push_back(gens0[0]);
    }
    ranks.push_back(gens0.size());
    FpMatrix aug(p, m.dim(), gens0.size() * ad);
    for (std::size_t s = 0; s < gens0.size(); ++s)
        for (std::size_t t = 0; t < ad; ++t) aug.set_column(s * ad + t, m.basis_action(t) * gens0[s]);
    FpMatrix ker = kernel_basis(aug);
    for (std::size_t step = 1; step <= max_degree + 1; ++step) {
        std::size_t r_prev = ranks.back();
        if (ker.cols() == 0) {
            ranks.push_back(0);
            diffs.push_back(FpMatrix(p, r_prev * ad, 0));
            continue;
        }
        Module ambient = free_module(a, r_prev);
        std::vector<FpMatrix> kg = padded_generators(ambient, ker);
        FpMatrix d(p, r_prev * ad, kg.size() * ad);
        for (std::size_t s = 0; s < kg.size(); ++s)
            for (std::size_t t = 0; t < ad; ++t) d.set_column(s * ad + t, block_action(*a, t, kg[s], r_prev));
        ranks.push_back(kg.size());
        ker = kernel_basis(d);
        diffs.push_back(std::move(d));
    }
    // Hom(P_i, N) = N^{r_i}; precomposition with the differential acts by
    // the blocks act_N(entry).
    auto hom_map = [&](std::size_t i) {
        std::size_t rs = ranks[i + 1], rt = ranks[i];
        FpMatrix t(p, rs * n.dim(), rt * n.dim());
        for (std::size_t s = 0; s < rs; ++s)
            for (std::size_t tt = 0; tt < rt; ++tt) {
                FpMatrix coords(p, ad, 1);
                for (std::size_t k = 0; k < ad; ++k)
                    coords.set(k, 0, diffs[i](tt * ad + k, s * ad + a->unit_index()));
                FpMatrix act = n.act_by(coords);
                for (std::size_t i2 = 0; i2 < n.dim(); ++i2)
                    for (std::size_t j2 = 0; j2 < n.dim(); ++j2)
                        if (act(i2, j2)) t.set(s * n.dim() + i2, tt * n.dim() + j2, act(i2, j2));
            }
        return t;
    };
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::size_t i = 0; i <= max_degree; ++i) {
        FpMatrix next = hom_map(i);
        std::size_t dom = ranks[i] * n.dim();
        std::size_t rk = (next.rows() == 0 || next.cols() == 0) ? 0 : rank(next);
        dims.push_back(dom - rk - prev_rank);
        prev_rank = rk;
    }
    return dims;
}

}  // namespace bimodkit::oracles

#endif
