#ifndef TDEG_ALGEBRA_HPP
#define TDEG_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include <tdeg/tensor3.hpp>

namespace tdeg {

enum class Tri { unchecked, yes, no };

struct AlgebraFlags {
    Tri associative = Tri::unchecked;
    Tri commutative = Tri::unchecked;
    Tri unital = Tri::unchecked;
};

// A finite-dimensional (possibly nonassociative) algebra given by structure
// constants: table(i, j) is the coordinate vector of b_i * b_j. Property
// flags stay "unchecked" until their check runs.
class AlgebraStruct {
public:
    AlgebraStruct(int dim, std::vector<std::string> basis_names,
                  std::vector<std::vector<Vec<Rational>>> table);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const Vec<Rational>& table(int i, int j) const {
        return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const AlgebraFlags& flags() const { return flags_; }

    // Bilinear product of coordinate vectors; works over the rationals and,
    // through the same structure constants, over eps (for A(eps)).
    template <typename T>
    Vec<T> mul(const Vec<T>& x, const Vec<T>& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw DimensionMismatch("algebra element has wrong length");
        Vec<T> out(static_cast<size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(x[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < dim_; ++j) {
                if (is_zero(y[static_cast<size_t>(j)])) continue;
                T f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                const auto& row = table(i, j);
                for (int k = 0; k < dim_; ++k)
                    if (!is_zero(row[static_cast<size_t>(k)]))
                        out[static_cast<size_t>(k)] += f * T(row[static_cast<size_t>(k)]);
            }
        }
        return out;
    }

    // Matrix of x -> a*x (resp. x -> x*a) in the algebra basis.
    template <typename T>
    Matrix<T> left_mult(const Vec<T>& a) const {
        Matrix<T> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Vec<T> bj(static_cast<size_t>(dim_));
            bj[static_cast<size_t>(j)] = T(1);
            Vec<T> col = mul(a, bj);
            for (int k = 0; k < dim_; ++k) m(k, j) = col[static_cast<size_t>(k)];
        }
        return m;
    }

    template <typename T>
    Matrix<T> right_mult(const Vec<T>& a) const {
        Matrix<T> m(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Vec<T> bj(static_cast<size_t>(dim_));
            bj[static_cast<size_t>(j)] = T(1);
            Vec<T> col = mul(bj, a);
            for (int k = 0; k < dim_; ++k) m(k, j) = col[static_cast<size_t>(k)];
        }
        return m;
    }

    // Solves the two-sided identity equations; the solution is unique when it
    // exists. Caches the result and sets the unital flag.
    std::optional<Vec<Rational>> find_identity();

    // Exhaustive basis checks for associativity and commutativity plus the
    // identity solve; sets and returns all three flags.
    const AlgebraFlags& check_properties();

    // Tensor with entry (i,j,k) = coordinate k of b_i * b_j.
    Tensor3<Rational> structure_tensor() const;

private:
    int dim_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Vec<Rational>>> table_;
    std::optional<Vec<Rational>> identity_;
    AlgebraFlags flags_;
};

// A bilinear map V x V -> V as an n x n x n tensor, with an optional identity
// element (checked against the tensor on construction when supplied).
struct BilinearMap {
    Tensor3<Rational> tensor;
    std::optional<Vec<Rational>> identity;
};

BilinearMap make_bilinear_map(Tensor3<Rational> tensor, std::optional<Vec<Rational>> identity);

// Reads the tensor as a multiplication table.
AlgebraStruct algebra_from_tensor(const Tensor3<Rational>& t, std::vector<std::string> basis_names = {});

// k^n with coordinate-wise multiplication.
AlgebraStruct make_diag_algebra(int n);

// The diagonal tensor sum_i e_i (x) e_i (x) e_i.
Tensor3<Rational> make_diag_tensor(int n);

// Quotient of a polynomial ring by the span of {x_i x_j, x_i^2 - x_j^2,
// x_i^3 | i != j}; basis (1, x_1, ..., x_q, x_1^2), dimension q + 2.
AlgebraStruct make_cw_algebra(int q);

// Coppersmith-Winograd tensor of format (q+2)^3 with 3q+3 unit entries, basis
// order (e0, e1_1..e1_q, e2).
Tensor3<Rational> make_cw_tensor(int q);

// Its restriction of format (q+1)^3 with 3q unit entries, basis order
// (e0, e1_1..e1_q).
Tensor3<Rational> make_cw_easy_tensor(int q);

// The projection triple along e2 onto <e0, e1_i> realizing the easy tensor as
// a restriction of the full one.
RestrictionOperator<Rational> cw_easy_projection(int q);

// The map (a, b) -> radical part of a*b on the subspace spanned by 1 and the
// x_i, with values in the radical; inputs indexed by (1, x_1..x_q), outputs
// by (x_1..x_q, x_1^2).
BilinearMap make_cw_easy_map(int q);

// Relabeling triple with make_cw_easy_map(q).tensor ==
// apply_restriction(cw_easy_relabeling(q), make_cw_easy_tensor(q)).
RestrictionOperator<Rational> cw_easy_relabeling(int q);

// k[x_1..x_d] / <monomial generators>, basis the standard monomials. Requires
// a pure power of every variable among the generators; throws
// InfiniteDimensional otherwise. Generators are exponent vectors of length d.
AlgebraStruct make_monomial_quotient(int num_vars, const std::vector<std::vector<int>>& generators);

} // namespace tdeg

#endif // TDEG_ALGEBRA_HPP
