#include "qwonder/matcoef.hpp"

#include <algorithm>

namespace qwonder {

const Sl2Context& Sl2Context::quantum() {
    static const Sl2Context ctx(quantum_presentations());
    return ctx;
}

const Sl2Context& Sl2Context::classical() {
    static const Sl2Context ctx(classical_presentations());
    return ctx;
}

Sl2Context::Sl2Context(const Sl2Presentations& family)
    : family_(family),
      sl2_hopf_(make_sl2_hopf(family.sl2, family.q)),
      mat2_bialgebra_(make_matrix_bialgebra(family.mat2)),
      a_(static_cast<char>(family.sl2->generator_index("a"))),
      b_(static_cast<char>(family.sl2->generator_index("b"))),
      c_(static_cast<char>(family.sl2->generator_index("c"))),
      d_(static_cast<char>(family.sl2->generator_index("d"))) {}

std::pair<long, long> Sl2Context::word_weight(const Word& word) const {
    long left = 0, right = 0;
    for (char g : word) {
        if (g == a_) {
            ++left;
            ++right;
        } else if (g == b_) {
            ++left;
            --right;
        } else if (g == c_) {
            --left;
            ++right;
        } else {
            --left;
            --right;
        }
    }
    return {left, right};
}

const AlgebraElement& Sl2Context::coefficient_element(const MatrixCoefficient& c) const {
    if (c.n < 0 || c.i < 0 || c.j < 0 || c.i > c.n || c.j > c.n)
        throw user_error("matrix coefficient indices out of range");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = coefficient_cache_.find(c);
        if (it != coefficient_cache_.end()) return it->second;
    }
    AlgebraElement value(family_.sl2);
    if (c.n == 0) {
        value = family_.sl2->unit();
    } else if (c.n == 1) {
        char table[2][2] = {{a_, b_}, {c_, d_}};
        value = family_.sl2->element(Word{table[c.i][c.j]});
    } else {
        // c^{V_n}_{i,j} realized inside V_{n-1} (x) V_1: with iota the
        // inclusion and pi the projection of the top summand,
        //   c^{V_n}_{f_i, v_j} = sum pi[i][(r,s)] iota[(u,v)][j]
        //                        c^{V_{n-1}}_{r,u} c^{V_1}_{s,v}.
        auto cg = cg_decompose(family_.q, c.n - 1, 1);
        const CGSummand& top = cg->summand(c.n);
        size_t cols = 2;
        for (long r = 0; r <= c.n - 1; ++r)
            for (long s = 0; s <= 1; ++s) {
                const QRational& pi_entry =
                    top.projection[static_cast<size_t>(c.i)]
                                  [static_cast<size_t>(r) * cols + static_cast<size_t>(s)];
                if (pi_entry.is_zero()) continue;
                for (long u = 0; u <= c.n - 1; ++u)
                    for (long v = 0; v <= 1; ++v) {
                        const QRational& iota_entry =
                            top.inclusion[static_cast<size_t>(u) * cols + static_cast<size_t>(v)]
                                         [static_cast<size_t>(c.j)];
                        if (iota_entry.is_zero()) continue;
                        value += (coefficient_element({c.n - 1, r, u}) *
                                  coefficient_element({1, s, v})) *
                                 (pi_entry * iota_entry);
                    }
            }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = coefficient_cache_.emplace(c, std::move(value));
    return it->second;
}

bool Sl2Context::level_membership(const AlgebraElement& x, long lambda) const {
    for (const auto& [w, c] : x.terms()) {
        long len = static_cast<long>(w.size());
        if (len > lambda) return false;
        if ((lambda - len) % 2 != 0) return false;
    }
    return true;
}

std::vector<std::pair<int, long>> Sl2Context::pw_degree(const AlgebraElement& x) const {
    long max_len[2] = {-1, -1};
    for (const auto& [w, c] : x.terms()) {
        int parity = static_cast<int>(w.size() % 2);
        max_len[parity] = std::max(max_len[parity], static_cast<long>(w.size()));
    }
    std::vector<std::pair<int, long>> out;
    for (int parity = 0; parity < 2; ++parity)
        if (max_len[parity] >= 0) out.emplace_back(parity, max_len[parity]);
    return out;
}

const Sl2Context::LevelData& Sl2Context::level_data(long level) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = level_cache_.find(level);
        if (it != level_cache_.end()) return it->second;
    }
    LevelData data;
    // Words of length <= level with matching parity, grouped by weight.
    for (long len = level % 2; len <= level; len += 2)
        for (const Word& w : family_.sl2->normal_words_of_length(static_cast<size_t>(len)))
            data.blocks[word_weight(w)].words.push_back(w);
    // Matrix-coefficient symbols of the same levels.
    for (long m = level % 2; m <= level; m += 2)
        for (long i = 0; i <= m; ++i)
            for (long j = 0; j <= m; ++j) {
                MatrixCoefficient c{m, i, j};
                data.blocks[{m - 2 * i, m - 2 * j}].symbols.push_back(c);
                ++data.symbol_count;
            }
    for (auto& [weight, block] : data.blocks) {
        if (block.words.size() != block.symbols.size())
            throw internal_error("matrix-coefficient block size mismatch at level " +
                                 std::to_string(level));
        std::map<Word, size_t> index;
        for (size_t r = 0; r < block.words.size(); ++r) index[block.words[r]] = r;
        block.matrix.assign(block.words.size(), QVector(block.symbols.size(), QRational(0)));
        for (size_t col = 0; col < block.symbols.size(); ++col) {
            const AlgebraElement& element = coefficient_element(block.symbols[col]);
            for (const auto& [w, c] : element.terms()) {
                auto it = index.find(w);
                if (it == index.end())
                    throw internal_error("matrix coefficient leaves its expected level");
                block.matrix[it->second][col] = c;
            }
        }
        if (qmat_rank(block.matrix) != block.symbols.size())
            throw internal_error("matrix-coefficient block is rank-deficient at level " +
                                 std::to_string(level));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = level_cache_.emplace(level, std::move(data));
    return it->second;
}

std::map<long, AlgebraElement> Sl2Context::pw_components(const AlgebraElement& x) const {
    if (x.presentation() != family_.sl2) throw user_error("presentation mismatch");
    std::map<long, AlgebraElement> out;
    for (const auto& [parity, level] : pw_degree(x)) {
        const LevelData& data = level_data(level);
        // Split this parity part by weight and solve blockwise.
        std::map<std::pair<long, long>, std::map<Word, QRational>> parts;
        for (const auto& [w, c] : x.terms())
            if (static_cast<int>(w.size() % 2) == parity) parts[word_weight(w)][w] = c;
        for (const auto& [weight, part] : parts) {
            auto bit = data.blocks.find(weight);
            if (bit == data.blocks.end())
                throw internal_error("element weight outside every block");
            const WeightBlock& block = bit->second;
            QVector rhs(block.words.size(), QRational(0));
            std::map<Word, size_t> index;
            for (size_t r = 0; r < block.words.size(); ++r) index[block.words[r]] = r;
            for (const auto& [w, c] : part) rhs[index.at(w)] = c;
            auto solution = qmat_solve(block.matrix, rhs);
            if (!solution) throw internal_error("element outside the matrix-coefficient span");
            for (size_t col = 0; col < block.symbols.size(); ++col) {
                if ((*solution)[col].is_zero()) continue;
                const MatrixCoefficient& sym = block.symbols[col];
                auto [oit, fresh] = out.emplace(sym.n, family_.sl2->zero());
                oit->second += coefficient_element(sym) * (*solution)[col];
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

AlgebraElement Sl2Context::pw_component(const AlgebraElement& x, long n) const {
    if (n < 0) throw user_error("component level must be dominant");
    auto components = pw_components(x);
    auto it = components.find(n);
    return it == components.end() ? family_.sl2->zero() : it->second;
}

size_t Sl2Context::filtration_dimension_by_words(long n) const {
    size_t count = 0;
    for (long len = n % 2; len <= n; len += 2)
        count += family_.sl2->normal_words_of_length(static_cast<size_t>(len)).size();
    return count;
}

size_t Sl2Context::filtration_dimension_checked(long n) const {
    size_t by_words = filtration_dimension_by_words(n);
    const LevelData& data = level_data(n);  // rank-verified per block
    if (by_words != data.symbol_count)
        throw internal_error("filtration dimension mismatch at level " + std::to_string(n));
    return by_words;
}

}  // namespace qwonder
