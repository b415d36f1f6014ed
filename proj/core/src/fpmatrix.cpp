#include "bimodkit/fpmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace bimodkit {

bool FieldSpec::is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(u32 modulus) : p(modulus) {
    if (!is_prime(modulus))
        throw std::invalid_argument("FieldSpec: modulus " + std::to_string(modulus) + " is not prime");
}

u32 mod_pow(u32 a, u64 k, u32 p) {
    u64 r = 1 % p, b = a % p;
    while (k) {
        if (k & 1) r = r * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return static_cast<u32>(r);
}

u32 mod_inverse(u32 a, u32 p) {
    a %= p;
    if (a == 0) throw std::domain_error("mod_inverse of 0");
    return mod_pow(a, p - 2, p);  // Fermat; p prime
}

FpMatrix::FpMatrix(u32 p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
    FieldSpec check(p);
    (void)check;
}

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1 % p;
    return m;
}

FpMatrix FpMatrix::zero(u32 p, std::size_t rows, std::size_t cols) { return FpMatrix(p, rows, cols); }

FpMatrix FpMatrix::basis_column(u32 p, std::size_t n, std::size_t i) {
    FpMatrix m(p, n, 1);
    m.set(i, 0, 1);
    return m;
}

void FpMatrix::add_at(std::size_t i, std::size_t j, u64 v) {
    e_[i * cols_ + j] = static_cast<u32>((e_[i * cols_ + j] + v) % p_);
}

bool FpMatrix::is_zero() const {
    for (u32 x : e_)
        if (x) return false;
    return true;
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (e_[i * cols_ + j] != (i == j ? 1u % p_ : 0u)) return false;
    return true;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = e_[i * cols_ + j];
    return t;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix::operator+: shape or modulus mismatch");
    FpMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix::operator-: shape or modulus mismatch");
    FpMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + p_ - o.e_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_)
        throw std::invalid_argument("FpMatrix::operator*: shape or modulus mismatch");
    FpMatrix r(p_, rows_, o.cols_);
    // i-k-j loop with deferred reduction; accumulation cannot overflow u64
    // at the dimensions this library handles.
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<u64> acc(o.cols_, 0);
        const u32* arow = &e_[i * cols_];
        for (std::size_t k = 0; k < cols_; ++k) {
            u64 a = arow[k];
            if (!a) continue;
            const u32* brow = &o.e_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * brow[j];
        }
        for (std::size_t j = 0; j < o.cols_; ++j) r.e_[i * o.cols_ + j] = static_cast<u32>(acc[j] % p_);
    }
    return r;
}

FpMatrix FpMatrix::scaled(u32 c) const {
    FpMatrix r(p_, rows_, cols_);
    u64 cc = c % p_;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<u32>(e_[i] * cc % p_);
    return r;
}

FpMatrix FpMatrix::pow(std::size_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("FpMatrix::pow: non-square");
    FpMatrix r = identity(p_, rows_);
    FpMatrix b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FpMatrix FpMatrix::reshaped(std::size_t rows, std::size_t cols) const {
    if (rows * cols != rows_ * cols_) throw std::invalid_argument("reshaped: size mismatch");
    FpMatrix r(p_, rows, cols);
    r.e_ = e_;
    return r;
}

FpMatrix FpMatrix::column(std::size_t j) const {
    FpMatrix c(p_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.e_[i] = e_[i * cols_ + j];
    return c;
}

void FpMatrix::set_column(std::size_t j, const FpMatrix& col) {
    if (col.rows_ != rows_ || col.cols_ != 1) throw std::invalid_argument("set_column: bad shape");
    for (std::size_t i = 0; i < rows_; ++i) e_[i * cols_ + j] = col.e_[i];
}

FpMatrix FpMatrix::columns(std::size_t first, std::size_t count) const {
    FpMatrix r(p_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) r.e_[i * count + j] = e_[i * cols_ + first + j];
    return r;
}

FpMatrix FpMatrix::hcat(const FpMatrix& o) const {
    if (rows_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("hcat: shape or modulus mismatch");
    FpMatrix r(p_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.e_[i * r.cols_ + j] = e_[i * cols_ + j];
        for (std::size_t j = 0; j < o.cols_; ++j) r.e_[i * r.cols_ + cols_ + j] = o.e_[i * o.cols_ + j];
    }
    return r;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " mod " << p_ << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << e_[i * cols_ + j];
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix a = m;
    const u32 p = a.p();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<u32>& e = a.raw();
    std::vector<std::size_t> pivots;
    // Entries stay below p; x + (p-1)*y is at most (p-1)p < p^2, so a small
    // lookup table replaces the hardware modulo in the elimination loop.
    static thread_local std::vector<u32> modtab;
    static thread_local u32 modtab_p = 0;
    if (modtab_p != p) {
        modtab.assign(static_cast<std::size_t>(p) * p, 0);
        for (std::size_t x = 0; x < modtab.size(); ++x) modtab[x] = static_cast<u32>(x % p);
        modtab_p = p;
    }
    const u32* mt = modtab.data();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && e[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(e[r * cols + j], e[piv * cols + j]);
        u64 inv = mod_inverse(e[r * cols + c], p);
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j)
                e[r * cols + j] = static_cast<u32>(e[r * cols + j] * inv % p);
        const u32* prow = &e[r * cols];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            u32 f = e[i * cols + c];
            if (!f) continue;
            u32 neg = p - f;
            u32* irow = &e[i * cols];
            for (std::size_t j = c; j < cols; ++j) irow[j] = mt[irow[j] + neg * prow[j]];
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), std::move(pivots), r};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix kernel_basis(const FpMatrix& m) {
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix k(m.p(), cols, free_cols.size());
    const u32 p = m.p();
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t f = free_cols[idx];
        k.set(f, idx, 1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            u32 v = rr.rref(r, f);
            if (v) k.set(rr.pivots[r], idx, p - v);
        }
    }
    return k;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
    if (a.p() != b.p()) throw std::invalid_argument("kronecker: modulus mismatch");
    FpMatrix r(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
    const u32 p = a.p();
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            u64 v = a(ia, ja);
            if (!v) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    u64 w = b(ib, jb);
                    if (!w) continue;
                    r.set(ia * b.rows() + ib, ja * b.cols() + jb, v * w % p);
                }
        }
    return r;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    RrefResult rr = rref(m.hcat(FpMatrix::identity(m.p(), n)));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= rr.pivots.size() || rr.pivots[i] != i) return std::nullopt;
    return rr.rref.columns(n, n);
}

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.p() != b.p()) throw std::invalid_argument("solve: shape or modulus mismatch");
    RrefResult rr = rref(a.hcat(b));
    const std::size_t n = a.cols();
    // Inconsistent iff some pivot lands in the b block.
    for (std::size_t c : rr.pivots)
        if (c >= n) return std::nullopt;
    FpMatrix x(a.p(), n, b.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(rr.pivots[r], j, rr.rref(r, n + j));
    return x;
}

bool in_column_space(const FpMatrix& span, const FpMatrix& v) { return solve(span, v).has_value(); }

FpMatrix column_space_basis(const FpMatrix& m) {
    RrefResult rr = rref(m.transpose());
    FpMatrix out(m.p(), m.rows(), rr.rank);
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < m.rows(); ++c) out.set(c, r, rr.rref(r, c));
    return out;
}

bool IncrementalSpan::try_insert(const FpMatrix& column) {
    std::vector<u32> v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = column(i, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        u32 f = v[pivots_[r]];
        if (!f) continue;
        u64 neg = p_ - f;
        const std::vector<u32>& row = rows_[r];
        for (std::size_t i = 0; i < dim_; ++i) v[i] = static_cast<u32>((v[i] + neg * row[i]) % p_);
    }
    std::size_t piv = dim_;
    for (std::size_t i = 0; i < dim_; ++i)
        if (v[i]) {
            piv = i;
            break;
        }
    if (piv == dim_) return false;
    u64 inv = mod_inverse(v[piv], p_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = static_cast<u32>(v[i] * inv % p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

QuotientSpace make_quotient(u32 p, std::size_t n, const FpMatrix& rel) {
    if (rel.rows() != n) throw std::invalid_argument("make_quotient: relation rows mismatch");
    // Row-reduce the transposed relations; pivot coordinates get eliminated,
    // the surviving non-pivot standard coordinates index the quotient.
    RrefResult rr = rref(rel.transpose());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) rest.push_back(c);
    const std::size_t q = rest.size();
    FpMatrix proj(p, q, n);
    FpMatrix section(p, n, q);
    for (std::size_t i = 0; i < q; ++i) {
        proj.set(i, rest[i], 1);
        section.set(rest[i], i, 1);
    }
    // x mod rel: subtract x[pivot_k] * rowvec_k, which zeroes all pivot
    // coordinates; record what lands on each surviving coordinate.
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
        std::size_t pc = rr.pivots[k];
        for (std::size_t i = 0; i < q; ++i) {
            u32 v = rr.rref(k, rest[i]);
            if (v) proj.set(i, pc, p - v);
        }
    }
    return QuotientSpace{std::move(proj), std::move(section)};
}

}  // namespace bimodkit
