#pragma once

#include <optional>

#include "qwonder/ncalg.hpp"

namespace qwonder {

/// Tensor power of an algebra: sparse combination of word tuples, each
/// slot kept in normal form.
class TensorElement {
public:
    TensorElement(PresentationPtr presentation, size_t arity)
        : pres_(std::move(presentation)), arity_(arity) {}

    static TensorElement lift(const AlgebraElement& x);  // arity 1
    static TensorElement tensor(const TensorElement& a, const TensorElement& b);
    static TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b);

    const PresentationPtr& presentation() const { return pres_; }
    size_t arity() const { return arity_; }
    const std::map<std::vector<Word>, QRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<Word>& slots, const QRational& coeff);

    TensorElement operator+(const TensorElement& other) const;
    TensorElement operator-(const TensorElement& other) const;
    TensorElement operator*(const QRational& scalar) const;
    /// Componentwise product: slots multiply inside the algebra.
    TensorElement operator*(const TensorElement& other) const;

    bool operator==(const TensorElement& other) const { return terms_ == other.terms_; }
    bool operator!=(const TensorElement& other) const { return !(*this == other); }

    /// The arity-1 tensor as a plain element.
    AlgebraElement to_element() const;

    /// Slot contents of every term multiplied left to right.
    AlgebraElement multiply_out() const;

    std::string to_string() const;

private:
    PresentationPtr pres_;
    size_t arity_ = 1;
    std::map<std::vector<Word>, QRational> terms_;
};

/// Bialgebra (optionally Hopf) structure on a presented algebra, given by
/// generator tables and extended multiplicatively (anti-multiplicatively
/// for the antipode).
class HopfStructure {
public:
    struct Config {
        PresentationPtr presentation;
        // Per generator: coproduct as (left word, right word, coefficient)
        // triples, counit scalar, optional antipode element.
        std::vector<std::vector<std::tuple<Word, Word, QRational>>> coproducts;
        std::vector<QRational> counits;
        std::optional<std::vector<AlgebraElement>> antipodes;
    };

    explicit HopfStructure(Config config);

    const PresentationPtr& presentation() const { return pres_; }
    bool has_antipode() const { return antipode_of_gen_.has_value(); }

    TensorElement coproduct(const AlgebraElement& x) const;
    /// Coproduct applied inside one slot of a tensor; arity grows by one.
    TensorElement coproduct_slot(const TensorElement& t, size_t slot) const;

    QRational counit(const AlgebraElement& x) const;
    /// Counit applied to one slot; the slot is removed.
    TensorElement counit_slot(const TensorElement& t, size_t slot) const;

    AlgebraElement antipode(const AlgebraElement& x) const;
    TensorElement antipode_slot(const TensorElement& t, size_t slot) const;

private:
    AlgebraElement antipode_word(const Word& word) const;

    PresentationPtr pres_;
    std::vector<TensorElement> coproduct_of_gen_;
    std::vector<QRational> counit_of_gen_;
    std::optional<std::vector<AlgebraElement>> antipode_of_gen_;
};

/// Bialgebra structure of the quantum 2x2 matrix family on a mat2- or
/// vinberg-style presentation (generators in the roles a, b, c, d):
/// Delta(a) = a(x)a + b(x)c, Delta(b) = a(x)b + b(x)d,
/// Delta(c) = c(x)a + d(x)c, Delta(d) = c(x)b + d(x)d;
/// counit = identity matrix. No antipode.
HopfStructure make_matrix_bialgebra(const PresentationPtr& presentation);

/// Hopf structure on the sl2-style presentation: the matrix bialgebra
/// plus the antipode S(a) = d, S(b) = -q^-1 b, S(c) = -q c, S(d) = a.
HopfStructure make_sl2_hopf(const PresentationPtr& sl2, const QRational& q);

}  // namespace qwonder
