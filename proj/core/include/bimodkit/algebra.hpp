#ifndef BIMODKIT_ALGEBRA_HPP
#define BIMODKIT_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "bimodkit/fpmatrix.hpp"

namespace bimodkit {

/// One defining relation sum_t coeff_t * (product of generators in word_t) = 0,
/// used to validate module actions without expanding the full multiplication
/// table on large modules.
struct Relation {
    struct Term {
        u32 coeff;
        std::vector<std::size_t> word;  // generator indices, product left to right
    };
    std::vector<Term> terms;
    std::string label;
};

enum class AlgebraKind { Truncated, Group, Table };

/// Finite dimensional augmented algebra, given by a basis and a
/// multiplication table. The table is stored as the left-multiplication
/// matrices L[i] of the basis elements: column j of L[i] holds the
/// coordinates of b_i * b_j.
///
/// Associativity, unitality and multiplicativity of the augmentation are
/// verified at construction (exhaustively up to dim 64, sampled above).
class Algebra {
  public:
    Algebra(FieldSpec field, std::vector<std::string> basis_labels, std::vector<FpMatrix> left_mult,
            std::size_t unit_index, std::vector<std::size_t> generators, FpMatrix augmentation,
            std::vector<Relation> relations, AlgebraKind kind);

    u32 p() const { return field_.p; }
    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    AlgebraKind kind() const { return kind_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    std::size_t unit_index() const { return unit_; }
    const std::vector<std::size_t>& generators() const { return gens_; }
    std::string generator_label(std::size_t g) const { return labels_[gens_[g]]; }
    const FpMatrix& augmentation() const { return aug_; }
    const std::vector<Relation>& relations() const { return relations_; }

    /// Matrix of x -> b_i * x.
    const FpMatrix& left_mult(std::size_t i) const { return lmul_[i]; }
    /// Matrix of x -> x * b_i.
    const FpMatrix& right_mult(std::size_t i) const { return rmul_.empty() ? lmul_[i] : rmul_[i]; }
    /// Left multiplication by an arbitrary element (coordinate column).
    FpMatrix left_mult_by(const FpMatrix& coords) const;
    FpMatrix right_mult_by(const FpMatrix& coords) const;
    /// Coordinates of b_i * b_j.
    FpMatrix product(const FpMatrix& x, const FpMatrix& y) const;
    FpMatrix unit_coords() const;
    u32 augment(const FpMatrix& coords) const;

    /// Expression of every basis element as a linear combination of
    /// monomials in the generators: monomial_words lists the chosen
    /// monomial words, basis_in_monomials column i gives the coordinates of
    /// b_i over those monomials. Exists because the generators generate.
    const std::vector<std::vector<std::size_t>>& monomial_words() const { return mono_words_; }
    const FpMatrix& basis_in_monomials() const { return basis_in_monos_; }

    /// Evaluates every basis element in a multiplicative context: given the
    /// value of each generator as a square matrix, returns
    ///   value(b_j) = sum_w basis_in_monomials(w, j) * prod_{g in word_w} gen_values[g]
    /// with the empty product the identity. Covers module actions
    /// (gen_values = action matrices) and algebra maps (gen_values =
    /// left-multiplication by the generator images in the target).
    std::vector<FpMatrix> evaluate_basis(u32 value_p, std::size_t value_dim,
                                         const std::vector<FpMatrix>& gen_values) const;

    /// Basis of ker(augmentation) as columns (the radical for local algebras).
    FpMatrix augmentation_ideal_basis() const;

    /// True iff ker(augmentation) is nilpotent.
    bool is_unipotent() const;

    /// Structural equality (same modulus, table, unit, generators, augmentation).
    bool same_as(const Algebra& o) const;

    bool is_commutative() const;
    /// All truncation exponents (only for Truncated kind).
    const std::vector<std::size_t>& exponents() const { return exponents_; }
    /// Exponent tuple of each basis monomial (only for Truncated kind).
    const std::vector<std::vector<std::size_t>>& monomial_exponents() const { return tuples_; }
    std::vector<std::vector<std::size_t>> tuples_;  // set by truncated constructor
    /// Truncated with every exponent equal to p: the group algebra of an
    /// elementary abelian p-group in the nilpotent-generator presentation.
    bool is_elementary_abelian() const;

    std::vector<std::size_t> exponents_;  // set by truncated constructor

  private:
    void validate() const;
    void build_monomial_words();

    FieldSpec field_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<FpMatrix> lmul_, rmul_;
    std::size_t unit_;
    std::vector<std::size_t> gens_;
    FpMatrix aug_;
    std::vector<Relation> relations_;
    AlgebraKind kind_;
    std::vector<std::vector<std::size_t>> mono_words_;
    FpMatrix basis_in_monos_;
    mutable int unipotent_cache_ = -1;    // -1 unknown, else 0/1
    mutable int commutative_cache_ = -1;  // -1 unknown, else 0/1
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// k[w_1..w_n]/(w_i^{m_i}) with the monomial basis in degree-lex order on
/// exponent tuples, augmentation w_i -> 0. Every m_i must be >= 2.
/// Variable names default to w1..wn.
AlgebraPtr truncated_polynomial_algebra(u32 p, const std::vector<std::size_t>& exponents,
                                        const std::vector<std::string>& var_names = {});

/// Lambda^env = Lambda (x)_k Lambda^op with multiplication
/// (a(x)b)(a'(x)b') = aa' (x) b'b. For truncated input the result is the
/// truncated algebra on generators u_1..u_n (w_i(x)1) and v_1..v_n (1(x)w_i),
/// with the pair basis identified with monomials u^a v^b. For table input
/// the pair basis is kept as-is.
AlgebraPtr enveloping(const AlgebraPtr& a);

AlgebraPtr opposite(const AlgebraPtr& a);

/// Small table algebra k x k (two orthogonal idempotents); not local.
AlgebraPtr k_times_k(u32 p);

bool is_unipotent(const Algebra& a);

/// Invertible algebra endomorphism recorded as a matrix on the basis.
struct Automorphism {
    AlgebraPtr algebra;
    FpMatrix matrix;  // dim x dim, coordinates of phi(b_j) in column j
    FpMatrix linear;  // n x n action on the generator span when constructed from one

    Automorphism compose(const Automorphism& inner_first) const;
    Automorphism inverted() const;
    bool is_identity() const;
    /// phi applied to a coordinate column.
    FpMatrix apply(const FpMatrix& coords) const;
};

Automorphism identity_automorphism(const AlgebraPtr& a);

/// Extends an invertible linear map on span{w_1..w_n} multiplicatively to the
/// monomial basis of a truncated polynomial algebra. Always valid when every
/// exponent equals p; otherwise the extension is validated and rejected if it
/// breaks a relation.
Automorphism automorphism_from_linear(const AlgebraPtr& a, const FpMatrix& phi);

/// Algebra homomorphism recorded on basis coordinates (unital, multiplicative;
/// validated at construction).
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    FpMatrix matrix;  // dim(target) x dim(source)

    FpMatrix apply(const FpMatrix& coords) const { return matrix * coords; }
};

AlgebraMap make_algebra_map(const AlgebraPtr& source, const AlgebraPtr& target, const FpMatrix& matrix);

/// w_i -> u_i and w_i -> v_i into the enveloping algebra.
AlgebraMap left_inclusion(const AlgebraPtr& a, const AlgebraPtr& env);
AlgebraMap right_inclusion(const AlgebraPtr& a, const AlgebraPtr& env);

/// Group algebra of an abelian p-group with Hopf structure on the
/// group-element basis and a recorded change of basis to the truncated
/// polynomial presentation via w_i = g_i - 1.
struct HopfAlgebra {
    AlgebraPtr group_algebra;  // group-element basis
    FpMatrix comul;            // dim^2 x dim, Delta(g) = g (x) g
    FpMatrix antipode;         // dim x dim, S(g) = g^{-1}
    FpMatrix counit;           // 1 x dim, all ones on group elements
    AlgebraPtr poly_algebra;   // truncated presentation, modules live here
    FpMatrix group_to_poly;    // coordinates change: poly = G2P * group
    FpMatrix poly_to_group;
    std::vector<std::size_t> orders;

    u32 p() const { return poly_algebra->p(); }
    /// Comultiplication written on the truncated presentation's basis.
    FpMatrix comul_poly() const;
};

/// Orders must be powers of p. Basis elements are tuples g^(e_1..e_l) in
/// mixed-radix order; Hopf axioms are verified exhaustively on the basis.
HopfAlgebra group_algebra_abelian(u32 p, const std::vector<std::size_t>& orders);

}  // namespace bimodkit

#endif
