#ifndef BIMODKIT_FPMATRIX_HPP
#define BIMODKIT_FPMATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bimodkit {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Prime modulus of the ground field. Primality is checked at construction.
struct FieldSpec {
    u32 p;

    explicit FieldSpec(u32 modulus);

    static bool is_prime(u32 n);
};

/// Dense exact matrix over F_p, row-major, entries reduced into [0, p).
///
/// This is the carrier of every computation in the library: algebra
/// multiplication tables, module actions, homomorphisms and quotient
/// projections are all FpMatrix values. All operations are pure; matrices
/// are immutable after the caller finishes filling them in.
class FpMatrix {
  public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(u32 p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(u32 p, std::size_t n);
    static FpMatrix zero(u32 p, std::size_t rows, std::size_t cols);
    /// n x 1 standard basis column e_i.
    static FpMatrix basis_column(u32 p, std::size_t n, std::size_t i);

    u32 p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u32 operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, u64 v) { e_[i * cols_ + j] = static_cast<u32>(v % p_); }
    void add_at(std::size_t i, std::size_t j, u64 v);

    const std::vector<u32>& entries() const { return e_; }
    std::vector<u32>& raw() { return e_; }

    bool is_zero() const;
    bool is_identity() const;

    FpMatrix transpose() const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(u32 c) const;
    FpMatrix pow(std::size_t k) const;
    bool operator==(const FpMatrix& o) const = default;

    /// Same entries, new shape (row-major layout preserved); sizes must agree.
    FpMatrix reshaped(std::size_t rows, std::size_t cols) const;

    FpMatrix column(std::size_t j) const;
    void set_column(std::size_t j, const FpMatrix& col);
    /// Columns [first, first+count) as a new matrix.
    FpMatrix columns(std::size_t first, std::size_t count) const;
    /// Horizontal concatenation [this | o].
    FpMatrix hcat(const FpMatrix& o) const;

    std::string to_string() const;

  private:
    u32 p_;
    std::size_t rows_, cols_;
    std::vector<u32> e_;
};

struct RrefResult {
    FpMatrix rref;
    std::vector<std::size_t> pivots;  // pivot column indices, increasing
    std::size_t rank;
};

/// Reduced row echelon form (unique), pivot columns, rank.
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Basis of the right null space {x : M x = 0}, returned as columns.
/// Column count equals cols(M) - rank(M); deterministic (free columns in
/// increasing order, each with a 1 in its own coordinate).
FpMatrix kernel_basis(const FpMatrix& m);

/// Kronecker product with the row-major block convention:
/// (A (x) B)[(ia*rB+ib),(ja*cB+jb)] = A[ia,ja]*B[ib,jb].
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

/// One solution X of A X = B, or nullopt if inconsistent. Deterministic:
/// free variables are set to zero.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

/// True iff every column of v lies in the column space of span.
bool in_column_space(const FpMatrix& span, const FpMatrix& v);

/// Deterministic basis of the column space (rows of the transposed rref).
FpMatrix column_space_basis(const FpMatrix& m);

/// Projection/section pair presenting k^n / colspace(rel).
/// proj is q x n with kernel exactly colspace(rel), section is n x q with
/// proj * section = I_q. Deterministic (pivot coordinates are eliminated,
/// non-pivot standard coordinates survive).
struct QuotientSpace {
    FpMatrix proj;
    FpMatrix section;
};
QuotientSpace make_quotient(u32 p, std::size_t n, const FpMatrix& rel);

u32 mod_inverse(u32 a, u32 p);
u32 mod_pow(u32 a, u64 k, u32 p);

/// Row-reduced span with remembered pivots; try_insert reduces one vector
/// against the current rows and keeps it when independent.
class IncrementalSpan {
  public:
    IncrementalSpan(u32 p, std::size_t dim) : p_(p), dim_(dim) {}

    /// True iff the vector was independent (and is now part of the span).
    bool try_insert(const FpMatrix& column);
    std::size_t size() const { return rows_.size(); }

  private:
    u32 p_;
    std::size_t dim_;
    std::vector<std::vector<u32>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace bimodkit

#endif
