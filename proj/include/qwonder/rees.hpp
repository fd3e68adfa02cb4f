#pragma once

#include "qwonder/matcoef.hpp"

namespace qwonder {

/// The coordinate algebra viewed as a filtered algebra: levels indexed by
/// the weight lattice through word length and parity.
struct FilteredAlgebra {
    const Sl2Context* context;

    std::vector<std::pair<int, long>> level(const AlgebraElement& x) const {
        return context->pw_degree(x);
    }
};

/// Element of the Rees algebra: a finite map level -> part, each part an
/// element of the coordinate algebra lying in filtration level <= lambda
/// (word lengths <= lambda with matching parity). z^lambda is the formal
/// grading variable; only even bare powers exist (the unit part).
class ReesElement {
public:
    explicit ReesElement(const Sl2Context& context) : ctx_(&context) {}

    static ReesElement unit(const Sl2Context& context);
    /// f * z^lambda; throws unless f sits in level <= lambda.
    static ReesElement part(const Sl2Context& context, const AlgebraElement& f, long lambda);
    /// The generators az, bz, cz, dz.
    static ReesElement generator(const Sl2Context& context, char role);
    /// z^lambda alone; lambda must be even and nonnegative.
    static ReesElement z_power(const Sl2Context& context, long lambda);

    const Sl2Context& context() const { return *ctx_; }
    const std::map<long, AlgebraElement>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    ReesElement operator+(const ReesElement& other) const;
    ReesElement operator-(const ReesElement& other) const;
    ReesElement operator*(const QRational& scalar) const;
    /// (f z^lambda)(g z^mu) = (f g) z^{lambda+mu}.
    ReesElement operator*(const ReesElement& other) const;

    bool operator==(const ReesElement& other) const { return parts_ == other.parts_; }
    bool operator!=(const ReesElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    void add_part(long lambda, const AlgebraElement& f);

    const Sl2Context* ctx_;
    std::map<long, AlgebraElement> parts_;
};

/// Coproduct of a Rees element: per level, a two-slot tensor tagged with
/// z^lambda on both sides.
struct ReesTensor {
    std::map<long, TensorElement> parts;

    bool operator==(const ReesTensor& other) const { return parts == other.parts; }
    bool operator!=(const ReesTensor& other) const { return !(*this == other); }
};

ReesTensor rees_coproduct(const ReesElement& x);
QRational rees_counit(const ReesElement& x);

/// The bialgebra isomorphism onto the quantum matrix algebra:
/// (az, bz, cz, dz) -> (a, b, c, d), z^2 -> the quantum determinant.
AlgebraElement vinberg_to_matq(const ReesElement& x);
/// Inverse on the image: a degree-n element of the matrix algebra becomes
/// a level-n Rees part.
ReesElement matq_to_vinberg(const Sl2Context& context, const AlgebraElement& y);

/// Element of the partial associated graded algebra gr_I. For the SL2
/// family I is either empty or the full set:
///   I = {}:    classes are dominant levels n, residues are exact
///              matrix-coefficient block components;
///   I = full:  classes are parities, residues arbitrary elements of
///              that parity (gr is the whole algebra).
class GrElement {
public:
    GrElement(const Sl2Context& context, RootSubset subset)
        : ctx_(&context), subset_(std::move(subset)) {}

    /// The vector-space identification of the coordinate algebra with its
    /// associated graded: split x into classes.
    static GrElement from_element(const Sl2Context& context, const RootSubset& I,
                                  const AlgebraElement& x);

    const Sl2Context& context() const { return *ctx_; }
    const RootSubset& subset() const { return subset_; }
    bool full_subset() const { return subset_.contains(1); }
    const std::map<long, AlgebraElement>& classes() const { return classes_; }
    bool is_zero() const { return classes_.empty(); }

    GrElement operator+(const GrElement& other) const;
    GrElement operator*(const QRational& scalar) const;
    /// Multiply representatives, keep the components allowed by I.
    GrElement operator*(const GrElement& other) const;

    bool operator==(const GrElement& other) const {
        return subset_ == other.subset_ && classes_ == other.classes_;
    }
    bool operator!=(const GrElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    friend GrElement gr_multiply(const GrElement&, const GrElement&);
    void add_class(long key, const AlgebraElement& value);

    const Sl2Context* ctx_;
    RootSubset subset_;
    std::map<long, AlgebraElement> classes_;
};

GrElement gr_multiply(const GrElement& x, const GrElement& y);

/// The graded isomorphism gr_{} -> two q-plane factors:
/// a -> x(x)u, b -> x(x)w, c -> y(x)u, d -> y(x)w on class-n residues
/// (words shorter than the class die in the quotient).
AlgebraElement gr_to_p1p1(const GrElement& x);

/// Dimension of the class-n piece of gr_{}: the rank of the c^{V_n}
/// block, which the context verifies equal to (n+1)^2.
size_t gr_dimension(const Sl2Context& context, long n);

/// Element of the orbit algebra gr_I (x) C[Lambda_I]: Laurent exponent
/// (an element of Lambda_I, stored as the integer 2k for I = full, always
/// 0 for I = {}) -> gr coefficient.
class OrbitAlgebraElement {
public:
    OrbitAlgebraElement(const Sl2Context& context, RootSubset subset)
        : ctx_(&context), subset_(std::move(subset)) {}

    static OrbitAlgebraElement make(const GrElement& gr_part, long laurent_exponent);

    const RootSubset& subset() const { return subset_; }
    const std::map<long, GrElement>& parts() const { return parts_; }

    OrbitAlgebraElement operator+(const OrbitAlgebraElement& other) const;
    OrbitAlgebraElement operator*(const OrbitAlgebraElement& other) const;

    bool operator==(const OrbitAlgebraElement& other) const;
    bool operator!=(const OrbitAlgebraElement& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    void add_part(long exponent, const GrElement& value);

    const Sl2Context* ctx_;
    RootSubset subset_;
    std::map<long, GrElement> parts_;
};

/// Basis indices of (V_n)_I: the I-parabolic subspace generated by the
/// highest vector. I = {} gives {0}; I = full gives everything. Verified
/// against the kernel of the raising operator.
std::vector<size_t> vI_basis(const Sl2Context& context, long n, const RootSubset& I);

/// Phi(c_{f,v}) = sum_i c_{f,e_i} (x) c_{e^i,v} over the (V_n)_I basis;
/// for I = full this is the coproduct, for I = {} the rank-one tensor
/// through the highest-weight line.
TensorElement phi(const Sl2Context& context, const RootSubset& I, const MatrixCoefficient& c);

/// Checks Phi(gr-product of c1, c2) == Phi(c1) * Phi(c2), the gr-product
/// expanded through the tensor-product decomposition: the summands V_k
/// with n + m - k in Lambda_I contribute c^{V_k} coefficients through the
/// inclusion/projection pair.
bool phi_multiplicativity_check(const Sl2Context& context, const RootSubset& I,
                                const MatrixCoefficient& c1, const MatrixCoefficient& c2);

/// The gr-product of two matrix-coefficient symbols expanded through the
/// tensor-product decomposition (the route phi_multiplicativity_check
/// compares against the rewriting engine).
AlgebraElement coefficient_gr_product(const Sl2Context& context, const RootSubset& I,
                                      const MatrixCoefficient& c1, const MatrixCoefficient& c2);

}  // namespace qwonder
