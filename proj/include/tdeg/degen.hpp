#ifndef TDEG_DEGEN_HPP
#define TDEG_DEGEN_HPP

#include <cstdint>
#include <string>

#include <tdeg/algebra.hpp>

namespace tdeg {

// A border-rank <= r certificate: r rank-one triples over eps whose sum is
// claimed to equal the target tensor up to O(eps).
struct DecompCert {
    struct Term {
        Vec<EpsScalar> v1, v2, v3;
    };
    int r = 0;
    std::vector<Term> terms;
    Dims3 target_dims{0, 0, 0};
};

struct EntryMismatch {
    Index3 index{0, 0, 0};
    std::string expected, actual;
};

// Outcome of comparing a claimed tensor against a target modulo O(eps).
// valid iff every entry of (claimed - target) has valuation >= 1.
// min_error_valuation is nullopt (+infinity) when the match is exact.
struct DegenReport {
    bool valid = false;
    std::optional<long> min_error_valuation;
    std::optional<EntryMismatch> first_mismatch;
    std::string note;
};

DegenReport compare_to_target(const Tensor3<EpsScalar>& claimed, const Tensor3<Rational>& target);

// Exact equality of apply_restriction(op, t) with the target.
bool verify_restriction(const RestrictionOperator<Rational>& op, const Tensor3<Rational>& t,
                        const Tensor3<Rational>& target);

// Degeneration check over eps: the operator may have poles, but the image
// must be regular at 0 and agree with the target there.
DegenReport verify_degeneration(const RestrictionOperator<EpsScalar>& op, const Tensor3<Rational>& t,
                                const Tensor3<Rational>& target);

// Sums the rank-one terms and compares against the target modulo O(eps); a
// valid report certifies border rank <= r.
DegenReport verify_decomposition(const DecompCert& cert, const Tensor3<Rational>& target);

// The operator with the certificate vectors as columns: applying it to the
// r-point diagonal tensor reproduces the certificate sum.
RestrictionOperator<EpsScalar> cert_to_operator(const DecompCert& cert);

// The q+2 term decomposition witnessing that the Coppersmith-Winograd tensor
// has minimal border rank. Blocks: q terms scaled by eps^-2, one by -eps^-3,
// one by (eps^-3 - q eps^-2); scale factors folded into the first vector.
DecompCert cw_certificate(int q);

// Certificate for the n-th Kronecker power: r^n terms, each a factor-wise
// Kronecker product of source terms (tuples enumerated lexicographically,
// vectors paired with the row-major kron convention). Verify the result with
// verify_decomposition against kron_power of the source target.
DecompCert power_certificate(const DecompCert& cert, int n, std::uint64_t max_scalars = 10'000'000);

struct UnitalizeResult {
    BilinearMap map;
    // the operator applied to the input tensor (third factor untouched)
    RestrictionOperator<Rational> op;
    Vec<Rational> identity;
};

// Turns a binding tensor into an equivalent unital bilinear map by applying
// the inverse slice isomorphisms in the first two factors. The witnesses are
// rechecked; throws NotBindingWitness when a contraction is singular.
UnitalizeResult unitalize(const Tensor3<Rational>& t, const Vec<Rational>& alpha1, const Vec<Rational>& alpha2);

// Isotropy triple of the structure tensor of A built from invertible a, b, c
// in A(eps): ((L_a R_b)^T, (L_b^-1 R_c)^T, L_a^-1 R_c^-1). The result is
// checked to fix the structure tensor before it is returned.
RestrictionOperator<EpsScalar> sandwich_triple(const AlgebraStruct& a_struct, const Vec<EpsScalar>& a,
                                               const Vec<EpsScalar>& b, const Vec<EpsScalar>& c);

// One invertible map acting as S* (x) S* (x) S^-1.
struct SandwichOperator {
    Matrix<EpsScalar> s;
};

// Checks the change-of-basis degeneration S^-1 (S x . S y)|_{eps=0} = phi(x, y)
// with the product taken in A(eps); the report compares all basis pairs.
DegenReport sandwich_check(const AlgebraStruct& algebra, const BilinearMap& phi, const Matrix<EpsScalar>& s);

// Constructive normalization of a unital degeneration: given maps F, G, H
// with phi(x,y) = H(F x . G y)|_{eps=0} (verified first), produces a single
// sandwich operator S with S^-1 (S x . S y)|_{eps=0} = phi(x,y).
//
// Steps: Q = H L_{Fe} G must be id + O(eps); G' = G Q^-1; P = H R_{G'e} F
// must be id + O(eps); S = (H L_{Fe} R_{G'e})^-1. The id + O(eps) assertions
// and the final sandwich property are checked on every run.
SandwichOperator normalize_unital_degeneration(const AlgebraStruct& algebra, const BilinearMap& phi,
                                               const Matrix<EpsScalar>& f, const Matrix<EpsScalar>& g,
                                               const Matrix<EpsScalar>& h);

// The explicit (q+2) x (q+2) smoothing matrix for the Coppersmith-Winograd
// algebra, relative to the basis (1, x_1..x_q, x_1^2): rows (1, eps in slot i,
// -eps^3) for i = 1..q, then (1, eps^2, ..., eps^2, -eps^3), then (1, 0, ..., 0).
Matrix<EpsScalar> cw_smoothing_matrix(int q);

// Verifies that the matrix above is invertible and realizes the CW algebra
// as a sandwich degeneration of the coordinate-wise product on k^{q+2}.
DegenReport cw_smoothing_check(int q);

// The CW degeneration data transported into unital form: A = k^{q+2},
// phi = multiplication of the CW algebra, and (F, G, H) obtained by composing
// the certificate operator with the unitalization of the CW tensor and the
// basis dictionary (identity slot first, squared generator last).
struct CwTransport {
    AlgebraStruct algebra;
    BilinearMap phi;
    Matrix<EpsScalar> f, g, h;
};

CwTransport cw_transported_degeneration(int q);

} // namespace tdeg

#endif // TDEG_DEGEN_HPP
