#include "bimodkit/rng.hpp"

namespace bimodkit {

FpMatrix Rng::matrix(u32 p, std::size_t rows, std::size_t cols) {
    FpMatrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, residue(p));
    return m;
}

FpMatrix Rng::invertible(u32 p, std::size_t n) {
    while (true) {
        FpMatrix m = matrix(p, n, n);
        if (is_invertible(m)) return m;
    }
}

Module Rng::module(const AlgebraPtr& a, std::size_t max_dim) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t rank = 1 + below(2);
        Module f = free_module(a, rank);
        std::size_t nvec = 1 + below(3);
        FpMatrix vecs = matrix(a->p(), f.dim(), nvec);
        FpMatrix span = submodule_closure(f, vecs);
        if (span.cols() == f.dim()) continue;  // quotient would be zero
        QuotientModule q = quotient_module(f, span);
        if (q.quotient.dim() >= 1 && q.quotient.dim() <= max_dim) return q.quotient;
    }
    return trivial_module(a);
}

}  // namespace bimodkit
