#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwonder/lattice.hpp"
#include "qwonder/rational.hpp"

namespace qwonder {

/// A word in the generators, stored as a byte string of generator indices.
using Word = std::string;

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Element of an algebra given by a confluent rewriting presentation:
/// a sparse map from normal-form words to scalars.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(PresentationPtr presentation) : pres_(std::move(presentation)) {}

    const PresentationPtr& presentation() const { return pres_; }
    const std::map<Word, QRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& word, const QRational& coeff);
    QRational coefficient(const Word& word) const;

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement operator*(const QRational& scalar) const;
    /// Normal form of the concatenation-bilinear product.
    AlgebraElement operator*(const AlgebraElement& other) const;

    bool operator==(const AlgebraElement& other) const;
    bool operator!=(const AlgebraElement& other) const { return !(*this == other); }
    bool operator<(const AlgebraElement& other) const;  // for use as map key

    /// Maximum word length over the terms (zero element: 0).
    size_t max_word_length() const;

    std::string to_string() const;

private:
    friend class Presentation;
    PresentationPtr pres_;
    std::map<Word, QRational> terms_;
};

inline AlgebraElement operator*(const QRational& scalar, const AlgebraElement& x) { return x * scalar; }

struct Rule {
    Word lhs;
    // Right-hand side as (word, coefficient) pairs; words need not be
    // normal, the rewriter keeps going.
    std::vector<std::pair<Word, QRational>> rhs;
};

/// An unresolved overlap ambiguity found by the confluence checker.
struct OverlapAmbiguity {
    Word word;
    size_t rule_a = 0;
    size_t rule_b = 0;
    AlgebraElement reduced_a;
    AlgebraElement reduced_b;
};

struct VeroneseLevel {
    Weight degree;
    std::vector<Word> basis_words;
};

/// Rewriting budget shared by all normal-form computations. Initialized
/// from the environment variable QWONDER_STEP_BUDGET, default 10^6.
long rewrite_step_budget();
void set_rewrite_step_budget(long budget);

/// A finitely presented algebra with a terminating rewriting system.
/// The monomial order is weighted degree (per-generator positive
/// weights, default 1), then word length, then lexicographic in the
/// generator order. Construction validates that every rule strictly
/// decreases this order and that left-hand sides are pairwise
/// non-nested.
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    struct Config {
        std::string name;
        std::vector<std::string> generators;
        std::vector<Rule> rules;
        std::vector<long> order_weights;            // empty = all 1
        std::optional<std::vector<Weight>> grading;  // degree per generator
    };

    static PresentationPtr make(Config config);

    const std::string& name() const { return name_; }
    size_t generator_count() const { return generators_.size(); }
    const std::vector<std::string>& generator_names() const { return generators_; }
    const std::vector<Rule>& rules() const { return rules_; }
    bool is_graded() const { return grading_.has_value(); }
    const std::vector<Weight>& generator_degrees() const;

    int generator_index(const std::string& symbol) const;  // -1 if unknown

    /// Weighted-deg-lex comparison; true when a < b.
    bool word_less(const Word& a, const Word& b) const;

    AlgebraElement zero() const;
    AlgebraElement unit() const;
    AlgebraElement generator(size_t index) const;
    AlgebraElement element(const Word& word, const QRational& coeff = 1) const;

    /// Fixed point of exhaustive leftmost-innermost rewriting, applied
    /// termwise to a linear combination of arbitrary words.
    AlgebraElement normal_form(const std::vector<std::pair<Word, QRational>>& combination) const;
    AlgebraElement normal_form(const Word& word) const { return normal_form({{word, QRational(1)}}); }

    bool word_is_normal(const Word& word) const;

    /// Degree of a word under the grading; requires a graded presentation.
    Weight word_degree(const Word& word) const;
    /// Common degree of a homogeneous element; nullopt for 0 or mixed.
    std::optional<Weight> element_degree(const AlgebraElement& x) const;

    /// All normal-form words of the exact given length.
    std::vector<Word> normal_words_of_length(size_t length) const;
    /// All normal-form words of the exact given degree; requires grading
    /// with componentwise-nonnegative generator degrees. Throws when words
    /// longer than max_length could still reach the degree.
    std::vector<Word> normal_words_of_degree(const Weight& degree, size_t max_length) const;

    /// Resolves every overlap of two rule left-hand sides both ways and
    /// returns the overlaps whose normal forms differ. Empty result
    /// certifies local confluence, hence (with termination from the
    /// order check) that normal words form a basis.
    std::vector<OverlapAmbiguity> check_local_confluence() const;

    bool is_central(const AlgebraElement& x) const;

    /// Graded dimension: number of normal words of the given degree.
    size_t dimension_of_graded_piece(const Weight& degree, size_t horizon) const;

    /// Per-level bases of the Veronese subalgebra along lambda.
    std::vector<VeroneseLevel> veronese(const Weight& lambda, long max_n, size_t horizon) const;

    std::string word_to_string(const Word& word) const;

private:
    Presentation() = default;
    long word_weight(const Word& word) const;

    std::string name_;
    std::vector<std::string> generators_;
    std::vector<Rule> rules_;
    std::vector<long> order_weights_;
    std::optional<std::vector<Weight>> grading_;
    std::vector<std::vector<size_t>> rules_by_first_;  // generator -> rule indices
};

/// Sum of the terms of x whose word degree equals lambda.
AlgebraElement graded_component(const AlgebraElement& x, const Weight& lambda);

/// Localization of a graded algebra at a central homogeneous element.
/// Elements are pairs x * r^(-k), canonicalized by exact division by r.
class CentralLocalization {
public:
    CentralLocalization(PresentationPtr base, AlgebraElement inverted);

    const PresentationPtr& base() const { return base_; }
    const AlgebraElement& inverted() const { return inverted_; }
    const Weight& inverted_degree() const { return inverted_degree_; }
    bool inverted_is_unit() const { return unit_scalar_.has_value(); }

    struct Element {
        AlgebraElement numerator;
        long inverse_power = 0;

        bool operator==(const Element& other) const {
            return inverse_power == other.inverse_power && numerator == other.numerator;
        }
    };

    Element make(const AlgebraElement& numerator, long inverse_power) const;
    Element multiply(const Element& x, const Element& y) const;

    struct Stratum {
        long word_length = 0;
        size_t piece_dimension = 0;   // dim of the graded piece feeding the stratum
        size_t image_dimension = 0;   // dim of the previous stratum's image
        size_t new_dimension = 0;     // piece_dimension - image_dimension
        std::vector<Word> new_words;  // representatives of the new classes
    };

    /// Degree-0 part of the localization, stratified by word length up
    /// to the horizon. Stratum s holds elements x * r^(-k) with x of
    /// degree s = k * deg(r); consecutive strata are compared through
    /// multiplication by r.
    std::vector<Stratum> degree_zero_strata(size_t horizon) const;

private:
    PresentationPtr base_;
    AlgebraElement inverted_;
    Weight inverted_degree_;
    std::optional<QRational> unit_scalar_;
};

/// Exact division by a central element: returns y with x = r * y, or
/// nullopt when x is not a multiple of r.
std::optional<AlgebraElement> divide_by_central(const AlgebraElement& x, const AlgebraElement& r);

/// Parse a presentation from the declarative text format:
///   name: <identifier>
///   generators: g1 g2 ...
///   weights: w1 w2 ...          (optional)
///   grading: d1 d2 ...          (optional; entries like 1 or (1,0))
///   rule: <word> -> <element>
/// Words are juxtaposed generator names; elements use the expression
/// grammar of the cli module.
PresentationPtr parse_presentation(const std::string& text);

}  // namespace qwonder
