#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qwonder/rational.hpp"

namespace qwonder {

/// Weight in fundamental-weight coordinates.
struct Weight {
    std::vector<long> coords;

    Weight() = default;
    explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
    static Weight of(long n) { return Weight({n}); }

    size_t rank() const { return coords.size(); }

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;
    bool operator==(const Weight& other) const { return coords == other.coords; }
    bool operator!=(const Weight& other) const { return coords != other.coords; }
    bool operator<(const Weight& other) const { return coords < other.coords; }

    bool is_dominant() const;
    std::string to_string() const;
};

/// Subset I of the simple-root index set {1..rank}.
struct RootSubset {
    std::set<int> members;

    RootSubset() = default;
    explicit RootSubset(std::set<int> m) : members(std::move(m)) {}

    bool contains(int i) const { return members.count(i) > 0; }
    bool operator==(const RootSubset& other) const { return members == other.members; }
    bool operator!=(const RootSubset& other) const { return !(*this == other); }
};

/// Weight lattice with a chosen set of simple roots, both in
/// fundamental-weight coordinates. Simple roots must be linearly
/// independent; checked at construction.
class WeightLattice {
public:
    WeightLattice(int rank, std::vector<std::vector<long>> simple_roots);

    static const WeightLattice& sl2();

    int rank() const { return rank_; }
    const std::vector<std::vector<long>>& simple_roots() const { return simple_roots_; }
    Weight simple_root(int i) const { return Weight(simple_roots_[static_cast<size_t>(i - 1)]); }
    RootSubset full_subset() const;

    /// mu <= lambda iff lambda - mu is a nonnegative-integer combination
    /// of simple roots.
    bool dominance_leq(const Weight& mu, const Weight& lambda) const;

    /// Order on Lambda/Lambda_I: lambda - mu = sum n_i alpha_i with
    /// n_i in Z for i in I and n_i >= 0 otherwise.
    bool quotient_leq(const Weight& mu, const Weight& lambda, const RootSubset& I) const;

    /// All dominant mu <= lambda. Exact for rank 1; for higher rank the
    /// subtraction coefficients are searched in [0, horizon].
    std::vector<Weight> lower_set(const Weight& lambda, long horizon) const;

    /// Canonical representative of lambda modulo the integer span of
    /// {alpha_i : i in I}, reduced through the Hermite normal form of
    /// the generator matrix.
    Weight coset_class(const Weight& lambda, const RootSubset& I) const;

private:
    // Coefficients n with lambda = sum n_i alpha_i, if they exist and
    // are integral.
    std::optional<std::vector<long>> root_coefficients(const Weight& lambda) const;

    int rank_;
    std::vector<std::vector<long>> simple_roots_;
};

struct QuotientClass {
    Weight representative;
    RootSubset subset;

    bool operator==(const QuotientClass& other) const {
        return representative == other.representative && subset == other.subset;
    }
};

/// quotient_leq on canonical classes; the subsets must agree.
bool quotient_leq(const WeightLattice& lattice, const QuotientClass& mu, const QuotientClass& lambda);

/// The canonical class of a weight.
QuotientClass coset_class_of(const WeightLattice& lattice, const Weight& lambda, const RootSubset& I);

}  // namespace qwonder
