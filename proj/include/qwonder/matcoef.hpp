#pragma once

#include <mutex>

#include "qwonder/hopf.hpp"
#include "qwonder/presentations.hpp"
#include "qwonder/uq.hpp"

namespace qwonder {

/// The symbol c^{V_n}_{i,j}: dual-basis row i and basis column j of the
/// (n+1)-dimensional irreducible.
struct MatrixCoefficient {
    long n = 0;
    long i = 0;
    long j = 0;

    bool operator<(const MatrixCoefficient& other) const {
        if (n != other.n) return n < other.n;
        if (i != other.i) return i < other.i;
        return j < other.j;
    }
    bool operator==(const MatrixCoefficient& other) const {
        return n == other.n && i == other.i && j == other.j;
    }
};

/// The SL2 tower at a fixed scalar: presentations, Hopf structure, the
/// matrix-coefficient realization of the coordinate algebra, and the
/// block data of the matrix-coefficient filtration. Quantum (formal q)
/// and classical (q = 1) instances are shared singletons; all caches are
/// write-once under a lock.
class Sl2Context {
public:
    static const Sl2Context& quantum();
    static const Sl2Context& classical();

    explicit Sl2Context(const Sl2Presentations& family);

    const QRational& q() const { return family_.q; }
    const PresentationPtr& sl2() const { return family_.sl2; }
    const PresentationPtr& mat2() const { return family_.mat2; }
    const PresentationPtr& vinberg() const { return family_.vinberg; }
    const PresentationPtr& p1p1() const { return family_.p1p1; }
    const HopfStructure& hopf() const { return sl2_hopf_; }
    const HopfStructure& matrix_bialgebra() const { return mat2_bialgebra_; }
    bool is_classical() const { return family_.q == QRational(1); }

    char gen_a() const { return a_; }
    char gen_b() const { return b_; }
    char gen_c() const { return c_; }
    char gen_d() const { return d_; }

    /// (left, right) torus weight of a normal word: the letters a, b, c, d
    /// contribute (1,1), (1,-1), (-1,1), (-1,-1).
    std::pair<long, long> word_weight(const Word& word) const;

    /// The element of the coordinate algebra realizing c^{V_n}_{i,j};
    /// computed through the chain V_n in V_{n-1} (x) V_1 and memoized.
    const AlgebraElement& coefficient_element(const MatrixCoefficient& c) const;

    /// True iff every word of x has length <= lambda and length == lambda
    /// mod 2 (for lambda < 0 only the zero element passes).
    bool level_membership(const AlgebraElement& x, long lambda) const;

    /// Per parity class of word length, the maximal normal-word length:
    /// the least filtration level containing that part. Pairs (parity,
    /// level), sorted.
    std::vector<std::pair<int, long>> pw_degree(const AlgebraElement& x) const;

    /// Decomposition of x into matrix-coefficient blocks: the map
    /// n -> component in span{ c^{V_n}_{i,j} }, with sum equal to x.
    std::map<long, AlgebraElement> pw_components(const AlgebraElement& x) const;

    /// Component of x in the span of the c^{V_n} block.
    AlgebraElement pw_component(const AlgebraElement& x, long n) const;

    /// Filtration-level dimension counted two independent ways: the
    /// number of normal words of length <= n with matching parity, and
    /// the number of matrix-coefficient symbols sum_{m<=n, m=n(2)} (m+1)^2
    /// verified linearly independent. Throws internal_error when the two
    /// disagree.
    size_t filtration_dimension_checked(long n) const;

    /// Number of normal words of length <= n and length == n mod 2.
    size_t filtration_dimension_by_words(long n) const;

private:
    struct WeightBlock {
        std::vector<Word> words;
        std::vector<MatrixCoefficient> symbols;
        QMatrix matrix;  // rows: words, cols: symbols
    };
    struct LevelData {
        std::map<std::pair<long, long>, WeightBlock> blocks;
        size_t symbol_count = 0;
    };

    const LevelData& level_data(long level) const;

    Sl2Presentations family_;
    HopfStructure sl2_hopf_;
    HopfStructure mat2_bialgebra_;
    char a_, b_, c_, d_;

    mutable std::mutex mutex_;
    mutable std::map<MatrixCoefficient, AlgebraElement> coefficient_cache_;
    mutable std::map<long, LevelData> level_cache_;
};

}  // namespace qwonder
