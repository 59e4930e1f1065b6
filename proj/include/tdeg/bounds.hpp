#ifndef TDEG_BOUNDS_HPP
#define TDEG_BOUNDS_HPP

#include <memory>

#include <tdeg/degen.hpp>

namespace tdeg {

// Resource limits for materialization and exhaustive sweeps.
struct Limits {
    std::uint64_t max_cells = kDefaultMaxCells;
    std::uint64_t max_ff_evals = 10'000'000;
};

// Syntax tree of named tensor constructors. Structural lower-bound rules
// match on this tree, never on raw entries.
class TensorExpr {
public:
    enum class Kind { diag, cw, cw_easy, struct_algebra, pow, kron };

    static TensorExpr diag(int n);
    static TensorExpr cw(int q);
    static TensorExpr cw_easy(int q);
    static TensorExpr struct_algebra(std::shared_ptr<const AlgebraStruct> algebra, std::string name);
    static TensorExpr pow(TensorExpr base, int n);
    static TensorExpr kron(TensorExpr a, TensorExpr b);

    Kind kind() const { return kind_; }
    int param() const { return param_; }
    const TensorExpr& child(int i) const { return *children_[static_cast<size_t>(i)]; }
    const AlgebraStruct& algebra() const { return *algebra_; }

    std::string to_string() const;

    Tensor3<Rational> materialize(const Limits& limits = {}) const;

    // True when the constructor tree is symmetric under factor permutations
    // (all named tensors except algebra structure tensors are).
    bool symmetric_under_factor_permutation() const;

private:
    TensorExpr() = default;

    Kind kind_ = Kind::diag;
    int param_ = 0;
    std::string name_;
    std::shared_ptr<const AlgebraStruct> algebra_;
    std::vector<std::shared_ptr<const TensorExpr>> children_;
};

// Parses the named-constructor grammar: "diag:n=4", "cw:q=2", "cweasy:q=2",
// "cwalg:q=2", "pow:<inner>:n=2". Throws ParseError on anything else.
TensorExpr parse_tensor_expr(std::string_view text);

enum class Grade { proved, witness, finite_field_evidence, conditional };

std::string to_string(Grade g);

struct DerivationNode {
    std::string rule;
    Grade grade = Grade::proved;
    std::string statement;
    std::vector<int> premises;
};

// Lower/upper interval for m(T) = min over nonzero u of rank of the u-slice.
struct MInterval {
    long lower = 0;
    std::optional<long> upper;
    bool exact() const { return upper && *upper == lower; }
};

struct BoundReport {
    long lower = 0;
    std::optional<long> upper;
    std::optional<MInterval> m;
    int mode = 1;
    Dims3 dims{0, 0, 0};
    std::string subject;
    std::uint64_t subject_hash = 0;
    std::vector<DerivationNode> derivation;
};

// Deterministic content hash of dims and entries.
std::uint64_t tensor_hash(const Tensor3<Rational>& t);

struct MWitness {
    Vec<Rational> u;
    long rank_value = 0;
};

// Exact rank of the u-slice in factor 1; an upper bound on m(T).
MWitness m_upper(const Tensor3<Rational>& t, const Vec<Rational>& u);

struct FfSearchResult {
    int min_rank = 0;
    std::vector<int> witness; // coordinates in [0, p)
    std::uint64_t evaluated = 0;
};

// Exhaustive minimum of the slice rank over the projective space of nonzero
// first-factor vectors with p-element-field coordinates. Evidence for the
// value of m over the closure, never a proof.
FfSearchResult m_exhaustive_ff_search(const Tensor3<Rational>& t, long p, const Limits& limits = {}, int jobs = 1);
int m_exhaustive_ff(const Tensor3<Rational>& t, long p, const Limits& limits = {}, int jobs = 1);

struct StructuralMBound {
    long m_lower = 0;
    std::vector<DerivationNode> nodes;
};

// Structural doubling rule: m(cweasy(q) (x) psi) >= 2 m(psi) for q >= 2.
// Matches kron/pow expressions with an easy CW factor and recurses into the
// rest; throws RuleNotApplicable when the tree does not match or q = 1.
StructuralMBound cw_product_rule(const TensorExpr& expr, const Limits& limits = {});

// Border-rank lower bound n - 1 + m via first-factor slices. The proved part
// of the m interval comes only from structural rules; witness slices tighten
// the upper end. mode selects which factor is sliced (the tensor is permuted
// so that factor becomes first).
BoundReport substitution_bound(const TensorExpr& expr, const Limits& limits = {}, std::uint64_t seed = 0,
                               int mode = 1);

// Max flattening rank over the three modes; the classical conciseness bound.
int flattening_bound(const Tensor3<Rational>& t);

// Wraps the flattening bound of a tensor as a report (used as an inner bound
// for subspace composition).
BoundReport flattening_report(const Tensor3<Rational>& t, std::string subject);

// Composes R(T) >= n - d + R(T|U') from a caller-chosen subspace U' and an
// inner bound for the restriction. The inner report must describe exactly the
// materialized restriction (dims and content hash are rechecked). Unless
// assert_minimal is set the resulting node is graded conditional, because the
// theorem needs the minimum over all d-dimensional subspaces.
BoundReport subspace_restriction_bound(const Tensor3<Rational>& t, const std::vector<Vec<Rational>>& subspace_basis,
                                       const BoundReport& inner, bool assert_minimal = false);

// Verifies the certificate against the materialized expression and merges
// upper = r into the report. Throws CertificateInvalid when it fails.
void upper_bound_from_cert(BoundReport& report, const TensorExpr& expr, const DecompCert& cert,
                           const Limits& limits = {});

} // namespace tdeg

#endif // TDEG_BOUNDS_HPP
