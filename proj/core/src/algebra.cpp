#include "bimodkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bimodkit {

namespace {

std::string monomial_label(const std::vector<std::string>& vars, const std::vector<std::size_t>& exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

// Degree-lex order on exponent tuples: by total degree, then lexicographic.
bool deg_lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t da = std::accumulate(a.begin(), a.end(), std::size_t{0});
    std::size_t db = std::accumulate(b.begin(), b.end(), std::size_t{0});
    if (da != db) return da < db;
    return a < b;
}

}  // namespace

Algebra::Algebra(FieldSpec field, std::vector<std::string> basis_labels, std::vector<FpMatrix> left_mult,
                 std::size_t unit_index, std::vector<std::size_t> generators, FpMatrix augmentation,
                 std::vector<Relation> relations, AlgebraKind kind)
    : field_(field),
      dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      lmul_(std::move(left_mult)),
      unit_(unit_index),
      gens_(std::move(generators)),
      aug_(std::move(augmentation)),
      relations_(std::move(relations)),
      kind_(kind) {
    if (lmul_.size() != dim_) throw std::invalid_argument("Algebra: table size mismatch");
    for (const FpMatrix& m : lmul_)
        if (m.rows() != dim_ || m.cols() != dim_ || m.p() != field_.p)
            throw std::invalid_argument("Algebra: table entry shape mismatch");
    if (aug_.rows() != 1 || aug_.cols() != dim_) throw std::invalid_argument("Algebra: augmentation shape");
    // For commutative tables the right multiplications coincide with the
    // left ones and are not stored separately.
    bool commutative = true;
    for (std::size_t i = 0; i < dim_ && commutative; ++i)
        for (std::size_t j = 0; j < i && commutative; ++j)
            if (!(lmul_[i].column(j) == lmul_[j].column(i))) commutative = false;
    commutative_cache_ = commutative ? 1 : 0;
    if (!commutative) {
        rmul_.assign(dim_, FpMatrix(field_.p, dim_, dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) rmul_[i].add_at(k, j, lmul_[j](k, i));
    }
    validate();
    build_monomial_words();
}

FpMatrix Algebra::left_mult_by(const FpMatrix& coords) const {
    FpMatrix r(field_.p, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        u32 c = coords(i, 0);
        if (c) r = r + lmul_[i].scaled(c);
    }
    return r;
}

FpMatrix Algebra::right_mult_by(const FpMatrix& coords) const {
    FpMatrix r(field_.p, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        u32 c = coords(i, 0);
        if (c) r = r + right_mult(i).scaled(c);
    }
    return r;
}

FpMatrix Algebra::product(const FpMatrix& x, const FpMatrix& y) const { return left_mult_by(x) * y; }

FpMatrix Algebra::unit_coords() const { return FpMatrix::basis_column(field_.p, dim_, unit_); }

u32 Algebra::augment(const FpMatrix& coords) const { return (aug_ * coords)(0, 0); }

void Algebra::validate() const {
    const u32 p = field_.p;
    // Unit.
    if (!lmul_[unit_].is_identity() || !right_mult(unit_).is_identity())
        throw std::invalid_argument("Algebra: unit_index does not act as a two-sided unit");
    // Augmentation is an algebra map.
    if (aug_(0, unit_) != 1) throw std::invalid_argument("Algebra: augmentation(1) != 1");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            u32 lhs = augment(lmul_[i].column(j));
            u32 rhs = static_cast<u32>(static_cast<u64>(aug_(0, i)) * aug_(0, j) % p);
            if (lhs != rhs) throw std::invalid_argument("Algebra: augmentation is not multiplicative");
        }
    // Associativity: (b_i b_j) b_k == b_i (b_j b_k), exhaustively up to
    // dim 64, sampled above. Products of basis vectors are usually sparse
    // (monomial algebras), so this stays cheap at the sizes we build.
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        FpMatrix ij = lmul_[i].column(j);
        FpMatrix lhs(p, dim_, 1);
        for (std::size_t m = 0; m < dim_; ++m) {
            u32 c = ij(m, 0);
            if (c) lhs = lhs + lmul_[m].column(k).scaled(c);
        }
        FpMatrix rhs = lmul_[i] * lmul_[j].column(k);
        if (!(lhs == rhs)) throw std::invalid_argument("Algebra: multiplication table is not associative");
    };
    if (dim_ <= 64) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) check_triple(i, j, k);
    } else {
        std::mt19937_64 rng(0x5eedu);
        std::uniform_int_distribution<std::size_t> d(0, dim_ - 1);
        for (int t = 0; t < 2000; ++t) check_triple(d(rng), d(rng), d(rng));
    }
}

void Algebra::build_monomial_words() {
    const u32 p = field_.p;
    // Greedy spanning set of monomials in the generators, found by breadth
    // first search from the unit. Fails only if the generators do not
    // generate the algebra. Independence is tracked incrementally: reduced
    // echelon rows with remembered pivots, one reduction per candidate.
    std::vector<std::vector<std::size_t>> words;
    std::vector<FpMatrix> coords_list;
    std::vector<std::vector<u32>> echelon;      // reduced rows
    std::vector<std::size_t> pivots;
    auto try_add = [&](const std::vector<std::size_t>& word, const FpMatrix& coords) {
        if (words.size() == dim_) return false;
        std::vector<u32> v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = coords(i, 0);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            u32 f = v[pivots[r]];
            if (!f) continue;
            u64 neg = p - f;
            for (std::size_t i = 0; i < dim_; ++i)
                v[i] = static_cast<u32>((v[i] + neg * echelon[r][i]) % p);
        }
        std::size_t piv = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (v[i]) {
                piv = i;
                break;
            }
        if (piv == dim_) return false;
        u64 inv = mod_inverse(v[piv], p);
        for (std::size_t i = 0; i < dim_; ++i) v[i] = static_cast<u32>(v[i] * inv % p);
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
        words.push_back(word);
        coords_list.push_back(coords);
        return true;
    };
    try_add({}, unit_coords());
    std::size_t head = 0;
    while (head < words.size() && words.size() < dim_) {
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            std::vector<std::size_t> w = words[head];
            w.push_back(g);
            FpMatrix c = right_mult(gens_[g]) * coords_list[head];
            try_add(w, c);
        }
        ++head;
    }
    if (words.size() != dim_)
        throw std::invalid_argument("Algebra: the declared generators do not generate");
    mono_words_ = std::move(words);
    FpMatrix span(p, dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c) span.set_column(c, coords_list[c]);
    auto inv = inverse(span);
    basis_in_monos_ = *inv;  // span is square invertible by construction
}

std::vector<FpMatrix> Algebra::evaluate_basis(u32 value_p, std::size_t value_dim,
                                              const std::vector<FpMatrix>& gen_values) const {
    if (gen_values.size() != gens_.size())
        throw std::invalid_argument("evaluate_basis: one value per generator required");
    std::vector<FpMatrix> word_values;
    word_values.reserve(mono_words_.size());
    for (const auto& w : mono_words_) {
        FpMatrix v = FpMatrix::identity(value_p, value_dim);
        for (std::size_t g : w) v = v * gen_values[g];
        word_values.push_back(std::move(v));
    }
    std::vector<FpMatrix> out;
    out.reserve(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        FpMatrix v(value_p, value_dim, value_dim);
        for (std::size_t w = 0; w < word_values.size(); ++w) {
            u32 c = basis_in_monos_(w, j);
            if (c) v = v + word_values[w].scaled(c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

FpMatrix Algebra::augmentation_ideal_basis() const { return kernel_basis(aug_); }

bool Algebra::is_unipotent() const {
    if (unipotent_cache_ >= 0) return unipotent_cache_ == 1;
    // Monomial constructors are unipotent by construction: the augmentation
    // ideal is spanned by positive-degree monomials in nilpotent generators
    // (truncated), respectively by g - 1 with g of p-power order in
    // characteristic p (group basis). The generic ideal-power computation
    // below stays as the decision procedure for table input.
    if (kind_ == AlgebraKind::Truncated || kind_ == AlgebraKind::Group) {
        unipotent_cache_ = 1;
        return true;
    }
    FpMatrix base = augmentation_ideal_basis();
    // Right-multiplication matrices of an ideal basis, reused every round:
    // I^{k+1} = span of R(y_j) applied to a basis of I^k.
    std::vector<FpMatrix> rmuls;
    for (std::size_t j = 0; j < base.cols(); ++j) rmuls.push_back(right_mult_by(base.column(j)));
    FpMatrix power = base;
    std::size_t d = power.cols();
    bool result = true;
    while (d > 0) {
        FpMatrix prods(field_.p, dim_, 0);
        for (const FpMatrix& r : rmuls) prods = prods.hcat(r * power);
        FpMatrix next = column_space_basis(prods);
        std::size_t d2 = next.cols();
        if (d2 == 0) break;
        if (d2 >= d) {
            result = false;
            break;
        }
        power = std::move(next);
        d = d2;
    }
    unipotent_cache_ = result ? 1 : 0;
    return result;
}

bool is_unipotent(const Algebra& a) { return a.is_unipotent(); }

bool Algebra::same_as(const Algebra& o) const {
    return field_.p == o.field_.p && dim_ == o.dim_ && unit_ == o.unit_ && gens_ == o.gens_ &&
           lmul_ == o.lmul_ && aug_ == o.aug_;
}

bool Algebra::is_commutative() const { return commutative_cache_ == 1; }

bool Algebra::is_elementary_abelian() const {
    if (kind_ != AlgebraKind::Truncated) return false;
    for (std::size_t m : exponents_)
        if (m != field_.p) return false;
    return true;
}

AlgebraPtr truncated_polynomial_algebra(u32 p, const std::vector<std::size_t>& exponents,
                                        const std::vector<std::string>& var_names) {
    FieldSpec field(p);
    const std::size_t n = exponents.size();
    for (std::size_t m : exponents)
        if (m < 2) throw std::invalid_argument("truncated_polynomial_algebra: exponent < 2");
    std::vector<std::string> vars = var_names;
    if (vars.empty())
        for (std::size_t i = 0; i < n; ++i) vars.push_back("w" + std::to_string(i + 1));
    if (vars.size() != n) throw std::invalid_argument("truncated_polynomial_algebra: variable name count");

    // All exponent tuples in degree-lex order.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur(n, 0);
    while (true) {
        tuples.push_back(cur);
        std::size_t i = 0;
        while (i < n) {
            if (++cur[i] < exponents[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(tuples.begin(), tuples.end(), deg_lex_less);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = i;
    const std::size_t dim = tuples.size();

    std::vector<std::string> labels;
    for (const auto& t : tuples) labels.push_back(monomial_label(vars, t));

    std::vector<FpMatrix> lmul(dim, FpMatrix(p, dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::size_t> s(n);
            bool alive = true;
            for (std::size_t t = 0; t < n; ++t) {
                s[t] = tuples[i][t] + tuples[j][t];
                if (s[t] >= exponents[t]) {
                    alive = false;
                    break;
                }
            }
            if (alive) lmul[i].set(index[s], j, 1);
        }

    std::vector<std::size_t> gens;
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<std::size_t> t(n, 0);
        t[g] = 1;
        gens.push_back(index[t]);
    }
    FpMatrix aug(p, 1, dim);
    aug.set(0, 0, 1);  // tuple 0 sorts first

    std::vector<Relation> rels;
    for (std::size_t g = 0; g < n; ++g) {
        Relation r;
        r.terms.push_back({1, std::vector<std::size_t>(exponents[g], g)});
        r.label = vars[g] + "^" + std::to_string(exponents[g]);
        rels.push_back(std::move(r));
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = g + 1; h < n; ++h) {
            Relation r;
            r.terms.push_back({1, {g, h}});
            r.terms.push_back({p - 1, {h, g}});
            r.label = "[" + vars[g] + "," + vars[h] + "]";
            rels.push_back(std::move(r));
        }

    auto alg = std::make_shared<Algebra>(field, std::move(labels), std::move(lmul), 0, std::move(gens),
                                         std::move(aug), std::move(rels), AlgebraKind::Truncated);
    const_cast<Algebra&>(*alg).exponents_ = exponents;
    const_cast<Algebra&>(*alg).tuples_ = std::move(tuples);
    return alg;
}

AlgebraPtr enveloping(const AlgebraPtr& a) {
    const u32 p = a->p();
    if (a->kind() == AlgebraKind::Truncated) {
        const std::size_t n = a->generators().size();
        std::vector<std::size_t> exps = a->exponents();
        std::vector<std::size_t> both = exps;
        both.insert(both.end(), exps.begin(), exps.end());
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < n; ++i) vars.push_back("u" + std::to_string(i + 1));
        for (std::size_t i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i + 1));
        return truncated_polynomial_algebra(p, both, vars);
    }
    // Generic pair basis (b_i, b_j), multiplication (a(x)b)(a'(x)b') = aa' (x) b'b.
    const std::size_t d = a->dim();
    const std::size_t dim = d * d;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            labels.push_back("(" + a->basis_labels()[i] + "," + a->basis_labels()[j] + ")");
    std::vector<FpMatrix> lmul(dim, FpMatrix(p, dim, dim));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            FpMatrix& L = lmul[i * d + j];
            for (std::size_t i2 = 0; i2 < d; ++i2)
                for (std::size_t j2 = 0; j2 < d; ++j2) {
                    FpMatrix t1 = a->left_mult(i).column(i2);   // b_i b_{i2}
                    FpMatrix t2 = a->left_mult(j2).column(j);   // b_{j2} b_j
                    for (std::size_t k = 0; k < d; ++k) {
                        if (!t1(k, 0)) continue;
                        for (std::size_t l = 0; l < d; ++l)
                            if (t2(l, 0))
                                L.add_at(k * d + l, i2 * d + j2,
                                         static_cast<u64>(t1(k, 0)) * t2(l, 0));
                    }
                }
        }
    std::size_t unit = a->unit_index() * d + a->unit_index();
    std::vector<std::size_t> gens;
    for (std::size_t g : a->generators()) gens.push_back(g * d + a->unit_index());
    for (std::size_t g : a->generators()) gens.push_back(a->unit_index() * d + g);
    FpMatrix aug(p, 1, dim);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            aug.set(0, i * d + j, static_cast<u64>(a->augmentation()(0, i)) * a->augmentation()(0, j));
    const std::size_t ng = a->generators().size();
    std::vector<Relation> rels;
    for (const Relation& r : a->relations()) {
        Relation left = r, right = r;
        for (auto& t : right.terms) std::reverse(t.word.begin(), t.word.end());
        for (auto& t : right.terms)
            for (auto& g : t.word) g += ng;
        left.label = "u:" + r.label;
        right.label = "v:" + r.label;
        rels.push_back(std::move(left));
        rels.push_back(std::move(right));
    }
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < ng; ++j) {
            Relation r;
            r.terms.push_back({1, {i, ng + j}});
            r.terms.push_back({p - 1, {ng + j, i}});
            r.label = "[u" + std::to_string(i + 1) + ",v" + std::to_string(j + 1) + "]";
            rels.push_back(std::move(r));
        }
    return std::make_shared<Algebra>(FieldSpec(p), std::move(labels), std::move(lmul), unit,
                                     std::move(gens), std::move(aug), std::move(rels), AlgebraKind::Table);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    if (a->is_commutative()) return a;
    std::vector<FpMatrix> lmul;
    for (std::size_t i = 0; i < a->dim(); ++i) lmul.push_back(a->right_mult(i));
    std::vector<Relation> rels = a->relations();
    for (Relation& r : rels)
        for (auto& t : r.terms) std::reverse(t.word.begin(), t.word.end());
    return std::make_shared<Algebra>(a->field(), a->basis_labels(), std::move(lmul), a->unit_index(),
                                     a->generators(), a->augmentation(), std::move(rels),
                                     AlgebraKind::Table);
}

AlgebraPtr k_times_k(u32 p) {
    // k[e]/(e^2 - e): two orthogonal idempotents e and 1-e.
    std::vector<FpMatrix> lmul(2, FpMatrix(p, 2, 2));
    lmul[0] = FpMatrix::identity(p, 2);
    lmul[1].set(1, 0, 1);
    lmul[1].set(1, 1, 1);
    FpMatrix aug(p, 1, 2);
    aug.set(0, 0, 1);
    Relation r;
    r.terms.push_back({1, {0, 0}});
    r.terms.push_back({p - 1, {0}});
    r.label = "e^2-e";
    return std::make_shared<Algebra>(FieldSpec(p), std::vector<std::string>{"1", "e"}, std::move(lmul), 0,
                                     std::vector<std::size_t>{1}, std::move(aug),
                                     std::vector<Relation>{std::move(r)}, AlgebraKind::Table);
}

Automorphism Automorphism::compose(const Automorphism& inner_first) const {
    if (!algebra->same_as(*inner_first.algebra)) throw std::invalid_argument("compose: algebra mismatch");
    FpMatrix lin = linear;
    if (linear.rows() && inner_first.linear.rows()) lin = linear * inner_first.linear;
    return Automorphism{algebra, matrix * inner_first.matrix, lin};
}

Automorphism Automorphism::inverted() const {
    auto inv = inverse(matrix);
    if (!inv) throw std::logic_error("Automorphism: matrix not invertible");
    FpMatrix lin = linear;
    if (linear.rows()) lin = *inverse(linear);
    return Automorphism{algebra, *inv, lin};
}

bool Automorphism::is_identity() const { return matrix.is_identity(); }

FpMatrix Automorphism::apply(const FpMatrix& coords) const { return matrix * coords; }

Automorphism identity_automorphism(const AlgebraPtr& a) {
    return Automorphism{a, FpMatrix::identity(a->p(), a->dim()), FpMatrix::identity(a->p(), a->generators().size())};
}

Automorphism automorphism_from_linear(const AlgebraPtr& a, const FpMatrix& phi) {
    if (a->kind() != AlgebraKind::Truncated)
        throw std::invalid_argument("automorphism_from_linear: needs a truncated polynomial algebra");
    const std::size_t n = a->generators().size();
    if (phi.rows() != n || phi.cols() != n || phi.p() != a->p())
        throw std::invalid_argument("automorphism_from_linear: phi must be n x n over F_p");
    if (!is_invertible(phi)) throw std::invalid_argument("automorphism_from_linear: phi is singular");
    const u32 p = a->p();
    const std::size_t dim = a->dim();
    // phi(w_i) = sum_j phi[j][i] w_j as coordinate columns.
    std::vector<FpMatrix> gen_values;
    for (std::size_t i = 0; i < n; ++i) {
        FpMatrix c(p, dim, 1);
        for (std::size_t j = 0; j < n; ++j) c.set(a->generators()[j], 0, phi(j, i));
        gen_values.push_back(a->left_mult_by(c));
    }
    // Extend multiplicatively: phi(b_j) = (monomial evaluation at the images) * 1.
    std::vector<FpMatrix> vals = a->evaluate_basis(p, dim, gen_values);
    FpMatrix m(p, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) m.set_column(b, vals[b] * a->unit_coords());
    Automorphism out{a, std::move(m), phi};
    if (!is_invertible(out.matrix))
        throw std::invalid_argument("automorphism_from_linear: extension is singular (relation violated)");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            FpMatrix lhs = out.matrix * a->left_mult(i).column(j);
            FpMatrix rhs = a->product(out.matrix.column(i), out.matrix.column(j));
            if (!(lhs == rhs))
                throw std::invalid_argument(
                    "automorphism_from_linear: multiplicative extension violates a relation");
        }
    return out;
}

AlgebraMap make_algebra_map(const AlgebraPtr& source, const AlgebraPtr& target, const FpMatrix& matrix) {
    if (matrix.rows() != target->dim() || matrix.cols() != source->dim() || matrix.p() != source->p())
        throw std::invalid_argument("make_algebra_map: shape mismatch");
    AlgebraMap f{source, target, matrix};
    if (!(matrix.column(source->unit_index()) == target->unit_coords()))
        throw std::invalid_argument("make_algebra_map: does not preserve the unit");
    auto check_pair = [&](std::size_t i, std::size_t j) {
        FpMatrix lhs = matrix * source->left_mult(i).column(j);
        FpMatrix rhs = target->product(matrix.column(i), matrix.column(j));
        if (!(lhs == rhs)) throw std::invalid_argument("make_algebra_map: not multiplicative");
    };
    if (source->dim() <= 32 || target->dim() <= 128) {
        for (std::size_t i = 0; i < source->dim(); ++i)
            for (std::size_t j = 0; j < source->dim(); ++j) check_pair(i, j);
    } else {
        // Large targets: all generator pairs plus a fixed random sample.
        for (std::size_t g : source->generators())
            for (std::size_t j = 0; j < source->dim(); ++j) {
                check_pair(g, j);
                check_pair(j, g);
            }
        std::mt19937_64 rng(0x6d617073u);
        std::uniform_int_distribution<std::size_t> d(0, source->dim() - 1);
        for (int t = 0; t < 256; ++t) check_pair(d(rng), d(rng));
    }
    return f;
}

namespace {

AlgebraMap inclusion_along(const AlgebraPtr& src, const AlgebraPtr& env, std::size_t gen_offset) {
    std::vector<FpMatrix> gen_values;
    for (std::size_t g = 0; g < src->generators().size(); ++g)
        gen_values.push_back(env->left_mult(env->generators()[gen_offset + g]));
    std::vector<FpMatrix> vals = src->evaluate_basis(src->p(), env->dim(), gen_values);
    FpMatrix m(src->p(), env->dim(), src->dim());
    for (std::size_t b = 0; b < src->dim(); ++b) m.set_column(b, vals[b] * env->unit_coords());
    return make_algebra_map(src, env, m);
}

}  // namespace

AlgebraMap left_inclusion(const AlgebraPtr& a, const AlgebraPtr& env) {
    return inclusion_along(a, env, 0);
}

AlgebraMap right_inclusion(const AlgebraPtr& a, const AlgebraPtr& env) {
    // x -> 1 (x) x reverses products, so the source is the opposite algebra.
    return inclusion_along(opposite(a), env, a->generators().size());
}

FpMatrix HopfAlgebra::comul_poly() const {
    return kronecker(group_to_poly, group_to_poly) * comul * poly_to_group;
}

HopfAlgebra group_algebra_abelian(u32 p, const std::vector<std::size_t>& orders) {
    FieldSpec field(p);
    for (std::size_t o : orders) {
        if (o < 2) throw std::invalid_argument("group_algebra_abelian: order < 2");
        std::size_t t = o;
        while (t % p == 0) t /= p;
        if (t != 1) throw std::invalid_argument("group_algebra_abelian: order is not a power of p");
    }
    const std::size_t l = orders.size();
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> cur(l, 0);
    while (true) {
        tuples.push_back(cur);
        std::size_t i = 0;
        while (i < l) {
            if (++cur[i] < orders[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == l) break;
    }
    std::sort(tuples.begin(), tuples.end());
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = i;
    const std::size_t dim = tuples.size();

    std::vector<std::string> vars;
    for (std::size_t i = 0; i < l; ++i) vars.push_back("g" + std::to_string(i + 1));
    std::vector<std::string> labels;
    for (const auto& t : tuples) labels.push_back(monomial_label(vars, t));

    std::vector<FpMatrix> lmul(dim, FpMatrix(p, dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::size_t> s(l);
            for (std::size_t t = 0; t < l; ++t) s[t] = (tuples[i][t] + tuples[j][t]) % orders[t];
            lmul[i].set(index[s], j, 1);
        }
    std::vector<std::size_t> gens;
    for (std::size_t g = 0; g < l; ++g) {
        std::vector<std::size_t> t(l, 0);
        t[g] = 1;
        gens.push_back(index[t]);
    }
    FpMatrix aug(p, 1, dim);
    for (std::size_t i = 0; i < dim; ++i) aug.set(0, i, 1);
    std::vector<Relation> rels;
    for (std::size_t g = 0; g < l; ++g) {
        Relation r;
        r.terms.push_back({1, std::vector<std::size_t>(orders[g], g)});
        r.terms.push_back({p - 1, {}});
        r.label = vars[g] + "^" + std::to_string(orders[g]) + "-1";
        rels.push_back(std::move(r));
    }
    for (std::size_t g = 0; g < l; ++g)
        for (std::size_t h = g + 1; h < l; ++h) {
            Relation r;
            r.terms.push_back({1, {g, h}});
            r.terms.push_back({p - 1, {h, g}});
            r.label = "[" + vars[g] + "," + vars[h] + "]";
            rels.push_back(std::move(r));
        }
    auto group = std::make_shared<Algebra>(field, std::move(labels), std::move(lmul), 0, std::move(gens),
                                           std::move(aug), std::move(rels), AlgebraKind::Group);

    FpMatrix comul(p, dim * dim, dim);
    for (std::size_t f = 0; f < dim; ++f) comul.set(f * dim + f, f, 1);
    FpMatrix antipode(p, dim, dim);
    for (std::size_t f = 0; f < dim; ++f) {
        std::vector<std::size_t> t(l);
        for (std::size_t i = 0; i < l; ++i) t[i] = (orders[i] - tuples[f][i]) % orders[i];
        antipode.set(index[t], f, 1);
    }
    FpMatrix counit = group->augmentation();

    // Hopf axioms, exhaustively on the basis.
    FpMatrix id = FpMatrix::identity(p, dim);
    if (!(kronecker(comul, id) * comul == kronecker(id, comul) * comul))
        throw std::logic_error("group_algebra_abelian: comultiplication not coassociative");
    FpMatrix mult(p, dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) mult.set_column(i * dim + j, group->left_mult(i).column(j));
    FpMatrix unit_eps = group->unit_coords() * counit;
    if (!(mult * kronecker(antipode, id) * comul == unit_eps) ||
        !(mult * kronecker(id, antipode) * comul == unit_eps))
        throw std::logic_error("group_algebra_abelian: antipode axiom fails");
    if (!(kronecker(counit, id) * comul == id) || !(kronecker(id, counit) * comul == id))
        throw std::logic_error("group_algebra_abelian: counit axiom fails");

    auto poly = truncated_polynomial_algebra(p, orders);

    // w^e = prod (g_i - 1)^{e_i}, expanded inside the group algebra.
    std::vector<FpMatrix> shifted_gens;
    for (std::size_t g = 0; g < l; ++g) {
        FpMatrix gm = FpMatrix::basis_column(p, dim, group->generators()[g]);
        shifted_gens.push_back(group->left_mult_by(gm - group->unit_coords()));
    }
    std::vector<FpMatrix> vals = poly->evaluate_basis(p, dim, shifted_gens);
    FpMatrix poly_to_group(p, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) poly_to_group.set_column(b, vals[b] * group->unit_coords());
    auto inv = inverse(poly_to_group);
    if (!inv) throw std::logic_error("group_algebra_abelian: change of basis is singular");

    return HopfAlgebra{group, std::move(comul), std::move(antipode), std::move(counit),
                       poly, *inv, std::move(poly_to_group), orders};
}

}  // namespace bimodkit
