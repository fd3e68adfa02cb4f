#include "qwonder/ncalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>

#include "qwonder/linalg.hpp"

namespace qwonder {

namespace {

std::atomic<long>& budget_storage() {
    static std::atomic<long> budget = [] {
        if (const char* env = std::getenv("QWONDER_STEP_BUDGET")) {
            long parsed = std::atol(env);
            if (parsed > 0) return parsed;
        }
        return 1000000L;
    }();
    return budget;
}

}  // namespace

long rewrite_step_budget() { return budget_storage().load(); }
void set_rewrite_step_budget(long budget) {
    if (budget <= 0) throw user_error("step budget must be positive");
    budget_storage().store(budget);
}

void AlgebraElement::add_term(const Word& word, const QRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_[word] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRational AlgebraElement::coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? QRational(0) : it->second;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    out += other;
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    if (!pres_) pres_ = other.pres_;
    if (other.pres_ && pres_ != other.pres_) throw user_error("presentation mismatch");
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) { return *this += -other; }

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    out -= other;
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

AlgebraElement AlgebraElement::operator*(const QRational& scalar) const {
    AlgebraElement out(pres_);
    if (scalar.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& [w, c] : out.terms_) c = c * scalar;
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    if (!pres_ || !other.pres_) {
        // Scalar-like empty elements multiply to zero.
        return AlgebraElement(pres_ ? pres_ : other.pres_);
    }
    if (pres_ != other.pres_) throw user_error("presentation mismatch");
    std::vector<std::pair<Word, QRational>> combination;
    combination.reserve(terms_.size() * other.terms_.size());
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : other.terms_) combination.emplace_back(w1 + w2, c1 * c2);
    return pres_->normal_form(combination);
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    return terms_ == other.terms_;
}

bool AlgebraElement::operator<(const AlgebraElement& other) const { return terms_ < other.terms_; }

size_t AlgebraElement::max_word_length() const {
    size_t n = 0;
    for (const auto& [w, c] : terms_) n = std::max(n, w.size());
    return n;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.to_string();
        bool minus = false;
        if (cs.find(' ') != std::string::npos) {
            cs = "(" + cs + ")";
        } else if (!cs.empty() && cs[0] == '-') {
            minus = true;
            cs = cs.substr(1);
        }
        os << (first ? (minus ? "-" : "") : (minus ? " - " : " + "));
        first = false;
        if (w.empty()) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "*";
        os << (pres_ ? pres_->word_to_string(w) : w);
    }
    return os.str();
}

PresentationPtr Presentation::make(Config config) {
    auto p = std::shared_ptr<Presentation>(new Presentation());
    p->name_ = std::move(config.name);
    p->generators_ = std::move(config.generators);
    p->rules_ = std::move(config.rules);
    p->grading_ = std::move(config.grading);
    if (p->generators_.empty()) throw user_error("presentation needs generators");
    if (p->generators_.size() > 200) throw user_error("too many generators");
    p->order_weights_ = config.order_weights.empty()
                            ? std::vector<long>(p->generators_.size(), 1)
                            : std::move(config.order_weights);
    if (p->order_weights_.size() != p->generators_.size())
        throw user_error("order weight count mismatch");
    for (long w : p->order_weights_)
        if (w <= 0) throw user_error("order weights must be positive");
    if (p->grading_ && p->grading_->size() != p->generators_.size())
        throw user_error("grading size mismatch");

    p->rules_by_first_.assign(p->generators_.size(), {});
    for (size_t i = 0; i < p->rules_.size(); ++i) {
        const Rule& rule = p->rules_[i];
        if (rule.lhs.empty()) throw user_error("empty rule left-hand side");
        for (char g : rule.lhs)
            if (static_cast<size_t>(g) >= p->generators_.size())
                throw user_error("rule uses unknown generator");
        for (const auto& [w, c] : rule.rhs) {
            for (char g : w)
                if (static_cast<size_t>(g) >= p->generators_.size())
                    throw user_error("rule uses unknown generator");
            if (!p->word_less(w, rule.lhs))
                throw user_error("rule does not decrease the monomial order: " +
                                 p->word_to_string(rule.lhs));
        }
        p->rules_by_first_[static_cast<size_t>(rule.lhs[0])].push_back(i);
    }
    // Left-hand sides must be pairwise non-nested (no lhs a proper factor
    // of another); equal left-hand sides are permitted and show up as
    // ambiguities in the confluence check.
    for (size_t i = 0; i < p->rules_.size(); ++i)
        for (size_t j = 0; j < p->rules_.size(); ++j) {
            if (i == j) continue;
            const Word& a = p->rules_[i].lhs;
            const Word& b = p->rules_[j].lhs;
            if (a.size() < b.size() && b.find(a) != Word::npos)
                throw user_error("nested rule left-hand sides: " + p->word_to_string(a) +
                                 " inside " + p->word_to_string(b));
        }
    return p;
}

const std::vector<Weight>& Presentation::generator_degrees() const {
    if (!grading_) throw user_error("presentation is not graded: " + name_);
    return *grading_;
}

int Presentation::generator_index(const std::string& symbol) const {
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i] == symbol) return static_cast<int>(i);
    return -1;
}

long Presentation::word_weight(const Word& word) const {
    long w = 0;
    for (char g : word) w += order_weights_[static_cast<size_t>(g)];
    return w;
}

bool Presentation::word_less(const Word& a, const Word& b) const {
    long wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

AlgebraElement Presentation::zero() const { return AlgebraElement(shared_from_this()); }

AlgebraElement Presentation::unit() const {
    AlgebraElement out(shared_from_this());
    out.add_term(Word(), 1);
    return out;
}

AlgebraElement Presentation::generator(size_t index) const {
    if (index >= generators_.size()) throw user_error("generator index out of range");
    return normal_form(Word(1, static_cast<char>(index)));
}

AlgebraElement Presentation::element(const Word& word, const QRational& coeff) const {
    return normal_form({{word, coeff}});
}

bool Presentation::word_is_normal(const Word& word) const {
    for (size_t pos = 0; pos < word.size(); ++pos)
        for (size_t ri : rules_by_first_[static_cast<size_t>(word[pos])]) {
            const Word& lhs = rules_[ri].lhs;
            if (word.compare(pos, lhs.size(), lhs) == 0) return false;
        }
    return true;
}

AlgebraElement Presentation::normal_form(const std::vector<std::pair<Word, QRational>>& combination) const {
    AlgebraElement result(shared_from_this());
    std::map<Word, QRational> agenda;
    for (const auto& [w, c] : combination) {
        for (char g : w)
            if (static_cast<size_t>(g) >= generators_.size()) throw user_error("unknown symbol in word");
        if (c.is_zero()) continue;
        auto [it, fresh] = agenda.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) agenda.erase(it);
        }
    }
    long budget = rewrite_step_budget();
    while (!agenda.empty()) {
        auto front = agenda.begin();
        Word word = front->first;
        QRational coeff = front->second;
        agenda.erase(front);
        // Leftmost redex; ties at a position go to the shortest left-hand
        // side, then to rule order.
        size_t best_rule = rules_.size();
        size_t best_pos = 0;
        for (size_t pos = 0; pos < word.size() && best_rule == rules_.size(); ++pos) {
            for (size_t ri : rules_by_first_[static_cast<size_t>(word[pos])]) {
                const Word& lhs = rules_[ri].lhs;
                if (word.compare(pos, lhs.size(), lhs) != 0) continue;
                if (best_rule == rules_.size() || lhs.size() < rules_[best_rule].lhs.size()) {
                    best_rule = ri;
                    best_pos = pos;
                }
            }
        }
        if (best_rule == rules_.size()) {
            result.add_term(word, coeff);
            continue;
        }
        if (--budget < 0)
            throw user_error("rewriting step budget exhausted (presentation " + name_ + ")");
        const Rule& rule = rules_[best_rule];
        Word prefix = word.substr(0, best_pos);
        Word suffix = word.substr(best_pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs) {
            Word next = prefix + rw + suffix;
            QRational value = coeff * rc;
            auto [it, fresh] = agenda.emplace(std::move(next), value);
            if (!fresh) {
                it->second += value;
                if (it->second.is_zero()) agenda.erase(it);
            }
        }
    }
    return result;
}

Weight Presentation::word_degree(const Word& word) const {
    const auto& degrees = generator_degrees();
    if (degrees.empty()) throw user_error("presentation is not graded");
    Weight total(std::vector<long>(degrees[0].rank(), 0));
    for (char g : word) total = total + degrees[static_cast<size_t>(g)];
    return total;
}

std::optional<Weight> Presentation::element_degree(const AlgebraElement& x) const {
    std::optional<Weight> degree;
    for (const auto& [w, c] : x.terms()) {
        Weight d = word_degree(w);
        if (!degree)
            degree = d;
        else if (*degree != d)
            return std::nullopt;
    }
    return degree;
}

std::vector<Word> Presentation::normal_words_of_length(size_t length) const {
    std::vector<Word> out;
    Word current;
    auto dfs = [&](auto&& self) -> void {
        if (current.size() == length) {
            out.push_back(current);
            return;
        }
        for (size_t g = 0; g < generators_.size(); ++g) {
            current.push_back(static_cast<char>(g));
            // Only the new suffix can create a redex.
            bool normal = true;
            for (size_t ri = 0; ri < rules_.size() && normal; ++ri) {
                const Word& lhs = rules_[ri].lhs;
                if (current.size() >= lhs.size() &&
                    current.compare(current.size() - lhs.size(), lhs.size(), lhs) == 0)
                    normal = false;
            }
            if (normal) self(self);
            current.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

std::vector<Word> Presentation::normal_words_of_degree(const Weight& degree, size_t max_length) const {
    const auto& degrees = generator_degrees();
    for (const Weight& d : degrees) {
        if (d.rank() != degree.rank()) throw user_error("degree rank mismatch");
        for (long c : d.coords)
            if (c < 0) throw user_error("degree enumeration needs nonnegative generator degrees");
    }
    std::vector<Word> out;
    Word current;
    Weight acc(std::vector<long>(degree.rank(), 0));
    auto fits = [&](const Weight& total) {
        for (size_t i = 0; i < degree.rank(); ++i)
            if (total.coords[i] > degree.coords[i]) return false;
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (acc == degree) {
            out.push_back(current);
            return;
        }
        if (current.size() >= max_length)
            throw user_error("horizon exceeded while enumerating degree " + degree.to_string());
        for (size_t g = 0; g < generators_.size(); ++g) {
            Weight next = acc + degrees[g];
            if (!fits(next)) continue;
            current.push_back(static_cast<char>(g));
            bool normal = true;
            for (size_t ri = 0; ri < rules_.size() && normal; ++ri) {
                const Word& lhs = rules_[ri].lhs;
                if (current.size() >= lhs.size() &&
                    current.compare(current.size() - lhs.size(), lhs.size(), lhs) == 0)
                    normal = false;
            }
            if (normal) {
                Weight saved = acc;
                acc = next;
                self(self);
                acc = saved;
            }
            current.pop_back();
        }
    };
    // Degree-zero generators would make the enumeration infinite.
    for (const Weight& d : degrees)
        if (std::all_of(d.coords.begin(), d.coords.end(), [](long c) { return c == 0; }))
            throw user_error("degree enumeration needs nonzero generator degrees");
    dfs(dfs);
    return out;
}

std::vector<OverlapAmbiguity> Presentation::check_local_confluence() const {
    std::vector<OverlapAmbiguity> bad;
    auto resolve = [&](const Word& word, size_t ri, size_t pos_i, size_t rj, size_t pos_j) {
        auto apply = [&](size_t rule_index, size_t pos) {
            const Rule& rule = rules_[rule_index];
            std::vector<std::pair<Word, QRational>> terms;
            Word prefix = word.substr(0, pos);
            Word suffix = word.substr(pos + rule.lhs.size());
            for (const auto& [rw, rc] : rule.rhs) terms.emplace_back(prefix + rw + suffix, rc);
            return normal_form(terms);
        };
        AlgebraElement a = apply(ri, pos_i);
        AlgebraElement b = apply(rj, pos_j);
        if (a != b) bad.push_back({word, ri, rj, a, b});
    };
    for (size_t i = 0; i < rules_.size(); ++i)
        for (size_t j = 0; j < rules_.size(); ++j) {
            const Word& li = rules_[i].lhs;
            const Word& lj = rules_[j].lhs;
            if (i < j && li == lj) resolve(li, i, 0, j, 0);
            // Proper overlaps: a suffix of li equals a prefix of lj.
            size_t max_o = std::min(li.size(), lj.size()) - 1;
            for (size_t o = 1; o <= max_o; ++o) {
                if (li.compare(li.size() - o, o, lj, 0, o) != 0) continue;
                Word word = li + lj.substr(o);
                resolve(word, i, 0, j, li.size() - o);
            }
        }
    return bad;
}

bool Presentation::is_central(const AlgebraElement& x) const {
    for (size_t g = 0; g < generators_.size(); ++g) {
        AlgebraElement gen = generator(g);
        if (x * gen != gen * x) return false;
    }
    return true;
}

size_t Presentation::dimension_of_graded_piece(const Weight& degree, size_t horizon) const {
    return normal_words_of_degree(degree, horizon).size();
}

std::vector<VeroneseLevel> Presentation::veronese(const Weight& lambda, long max_n, size_t horizon) const {
    std::vector<VeroneseLevel> out;
    for (long n = 0; n <= max_n; ++n) {
        Weight degree(std::vector<long>(lambda.rank(), 0));
        for (size_t i = 0; i < lambda.rank(); ++i) degree.coords[i] = n * lambda.coords[i];
        out.push_back({degree, normal_words_of_degree(degree, horizon)});
    }
    return out;
}

std::string Presentation::word_to_string(const Word& word) const {
    if (word.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < word.size()) {
        size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!first) os << "*";
        first = false;
        os << generators_[static_cast<size_t>(word[i])];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

AlgebraElement graded_component(const AlgebraElement& x, const Weight& lambda) {
    if (!x.presentation()) return x;
    const Presentation& p = *x.presentation();
    AlgebraElement out(x.presentation());
    for (const auto& [w, c] : x.terms())
        if (p.word_degree(w) == lambda) out.add_term(w, c);
    return out;
}

std::optional<AlgebraElement> divide_by_central(const AlgebraElement& x, const AlgebraElement& r) {
    if (r.is_zero()) throw user_error("division by zero element");
    const Presentation& p = *r.presentation();
    auto leading = [&](const AlgebraElement& e) {
        auto best = e.terms().begin();
        for (auto it = e.terms().begin(); it != e.terms().end(); ++it)
            if (p.word_less(best->first, it->first)) best = it;
        return best;
    };
    auto lead_r = leading(r);
    // Exponent profile of the leading word; leading words of products
    // multiply exponentwise for these orderings.
    auto profile = [&](const Word& w) {
        std::vector<long> counts(p.generator_count(), 0);
        for (char g : w) ++counts[static_cast<size_t>(g)];
        return counts;
    };
    std::vector<long> rp = profile(lead_r->first);
    AlgebraElement remainder = x;
    AlgebraElement quotient(x.presentation());
    while (!remainder.is_zero()) {
        auto lead = leading(remainder);
        std::vector<long> wp = profile(lead->first);
        Word quotient_word;
        bool divisible = true;
        for (size_t g = 0; g < wp.size() && divisible; ++g) {
            if (wp[g] < rp[g]) divisible = false;
            for (long k = 0; k < wp[g] - rp[g]; ++k) quotient_word.push_back(static_cast<char>(g));
        }
        if (!divisible) return std::nullopt;
        AlgebraElement candidate = r * p.element(quotient_word);
        auto lead_c = leading(candidate);
        if (lead_c->first != lead->first) return std::nullopt;
        QRational factor = lead->second / lead_c->second;
        remainder -= candidate * factor;
        quotient.add_term(quotient_word, factor);
    }
    return quotient;
}

CentralLocalization::CentralLocalization(PresentationPtr base, AlgebraElement inverted)
    : base_(std::move(base)), inverted_(std::move(inverted)) {
    if (inverted_.is_zero()) throw user_error("cannot invert zero");
    if (!base_->is_central(inverted_)) throw user_error("inverted element is not central");
    auto degree = base_->element_degree(inverted_);
    if (!degree) throw user_error("inverted element is not homogeneous");
    inverted_degree_ = *degree;
    bool degree_zero =
        std::all_of(inverted_degree_.coords.begin(), inverted_degree_.coords.end(),
                    [](long c) { return c == 0; });
    if (degree_zero) {
        // Only invertible scalars are allowed in degree zero.
        if (inverted_.term_count() == 1 && inverted_.terms().begin()->first.empty())
            unit_scalar_ = inverted_.terms().begin()->second;
        else
            throw user_error("inverted element must be homogeneous of nonzero degree");
    }
}

CentralLocalization::Element CentralLocalization::make(const AlgebraElement& numerator,
                                                       long inverse_power) const {
    if (inverse_power < 0) throw user_error("negative inverse power");
    Element e{numerator, inverse_power};
    if (unit_scalar_) {
        // r is a unit: clear the power immediately.
        QRational factor = unit_scalar_->inverse();
        QRational scale(1);
        for (long k = 0; k < e.inverse_power; ++k) scale = scale * factor;
        e.numerator = e.numerator * scale;
        e.inverse_power = 0;
        return e;
    }
    while (e.inverse_power > 0) {
        auto quotient = divide_by_central(e.numerator, inverted_);
        if (!quotient) break;
        e.numerator = *quotient;
        --e.inverse_power;
    }
    return e;
}

CentralLocalization::Element CentralLocalization::multiply(const Element& x, const Element& y) const {
    return make(x.numerator * y.numerator, x.inverse_power + y.inverse_power);
}

std::vector<CentralLocalization::Stratum> CentralLocalization::degree_zero_strata(size_t horizon) const {
    std::vector<Stratum> out;
    if (unit_scalar_) {
        Stratum s;
        s.word_length = 0;
        s.piece_dimension = base_->dimension_of_graded_piece(
            Weight(std::vector<long>(inverted_degree_.rank(), 0)), horizon);
        s.new_dimension = s.piece_dimension;
        s.new_words = base_->normal_words_of_degree(
            Weight(std::vector<long>(inverted_degree_.rank(), 0)), horizon);
        out.push_back(std::move(s));
        return out;
    }
    // Assumes a Z-grading by word length (all generator degrees equal);
    // checked by requiring rank 1.
    if (inverted_degree_.rank() != 1)
        throw user_error("degree-zero strata need a rank-1 grading");
    long d = inverted_degree_.coords[0];
    for (long s = 0; static_cast<size_t>(s) <= horizon; ++s) {
        Stratum st;
        st.word_length = s;
        if (s % d != 0) {
            out.push_back(std::move(st));
            continue;
        }
        auto words = base_->normal_words_of_degree(Weight::of(s), horizon + 1);
        st.piece_dimension = words.size();
        if (s == 0) {
            st.new_dimension = words.size();
            st.new_words = words;
            out.push_back(std::move(st));
            continue;
        }
        std::map<Word, size_t> index;
        for (size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
        auto lower = base_->normal_words_of_degree(Weight::of(s - d), horizon + 1);
        QMatrix image;
        for (const Word& w : lower) {
            AlgebraElement shifted = inverted_ * base_->element(w);
            QVector row(words.size(), QRational(0));
            for (const auto& [word, coeff] : shifted.terms()) row[index.at(word)] = coeff;
            image.push_back(std::move(row));
        }
        // New classes: words outside the span of the image of the
        // previous stratum under multiplication by r.
        QMatrix work = image;
        auto pivots = qmat_rref(work);
        st.image_dimension = pivots.size();
        std::vector<bool> is_pivot(words.size(), false);
        for (size_t p2 : pivots) is_pivot[p2] = true;
        // Extend the echelon basis by standard vectors greedily.
        QMatrix extended = work;
        extended.resize(pivots.size());
        for (size_t i = 0; i < words.size() && extended.size() < words.size(); ++i) {
            QVector v(words.size(), QRational(0));
            v[i] = QRational(1);
            QMatrix probe = extended;
            probe.push_back(v);
            if (qmat_rank(probe) > extended.size()) {
                extended.push_back(std::move(v));
                st.new_words.push_back(words[i]);
            }
        }
        st.new_dimension = st.new_words.size();
        out.push_back(std::move(st));
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Scalar literal: '*'-separated factors, each a q-power (q, q^k) or a
// rational (3, 3/2). Kept deliberately small; the full grammar lives in
// the cli module.
QRational parse_scalar_literal(const std::string& text) {
    QRational value(1);
    std::string current;
    auto flush = [&](const std::string& t) {
        if (t.empty()) return;
        if (t[0] == 'q') {
            long e = 1;
            if (t.size() > 1) {
                if (t[1] != '^') throw user_error("bad scalar token: " + t);
                e = std::stol(t.substr(2));
            }
            value = value * QRational::q_power(e);
        } else {
            Rational r(t);
            r.canonicalize();
            value = value * QRational(r);
        }
    };
    for (char c : text) {
        if (c == '*') {
            flush(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    flush(current);
    return value;
}

}  // namespace

PresentationPtr parse_presentation(const std::string& text) {
    Presentation::Config config;
    std::istringstream stream(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> rule_lines;
    std::vector<std::string> weight_tokens, grading_tokens;
    while (std::getline(stream, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw user_error("presentation line needs 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "name") {
            config.name = value;
        } else if (key == "generators") {
            config.generators = split_ws(value);
        } else if (key == "weights") {
            weight_tokens = split_ws(value);
        } else if (key == "grading") {
            grading_tokens = split_ws(value);
        } else if (key == "rule") {
            size_t arrow = value.find("->");
            if (arrow == std::string::npos) throw user_error("rule needs '->'");
            rule_lines.emplace_back(trim(value.substr(0, arrow)), trim(value.substr(arrow + 2)));
        } else {
            throw user_error("unknown presentation key: " + key);
        }
    }
    if (config.generators.empty()) throw user_error("presentation needs a generators line");
    auto gen_index = [&](const std::string& s) {
        for (size_t i = 0; i < config.generators.size(); ++i)
            if (config.generators[i] == s) return static_cast<int>(i);
        throw user_error("unknown generator: " + s);
    };
    for (const std::string& t : weight_tokens) config.order_weights.push_back(std::stol(t));
    if (!grading_tokens.empty()) {
        std::vector<Weight> grading;
        for (const std::string& t : grading_tokens) {
            std::vector<long> coords;
            std::string inner = t;
            if (!inner.empty() && inner.front() == '(') inner = inner.substr(1, inner.size() - 2);
            std::istringstream cs(inner);
            std::string c;
            while (std::getline(cs, c, ',')) coords.push_back(std::stol(c));
            grading.emplace_back(coords);
        }
        config.grading = std::move(grading);
    }
    for (const auto& [lhs_text, rhs_text] : rule_lines) {
        Rule rule;
        for (const std::string& g : split_ws(lhs_text))
            rule.lhs.push_back(static_cast<char>(gen_index(g)));
        // rhs: terms separated by + / -, each "scalar" or "scalar word"
        // or "word"; word letters are whitespace-separated generators.
        std::string rhs = rhs_text;
        size_t pos = 0;
        int sign = 1;
        std::string term;
        auto flush_term = [&]() {
            term = trim(term);
            if (term.empty()) return;
            // Split into factor tokens; generator names become letters,
            // everything else multiplies into the coefficient.
            QRational coeff(sign);
            Word word;
            for (const std::string& tok : split_ws(term)) {
                bool is_gen = false;
                for (size_t i = 0; i < config.generators.size(); ++i)
                    if (config.generators[i] == tok) {
                        word.push_back(static_cast<char>(i));
                        is_gen = true;
                        break;
                    }
                if (!is_gen) coeff = coeff * parse_scalar_literal(tok);
            }
            rule.rhs.emplace_back(word, coeff);
            term.clear();
        };
        while (pos < rhs.size()) {
            char c = rhs[pos];
            if ((c == '+' || c == '-') && (pos == 0 || rhs[pos - 1] != '^')) {
                flush_term();
                sign = (c == '-') ? -1 : 1;
            } else {
                term.push_back(c);
            }
            ++pos;
        }
        flush_term();
        config.rules.push_back(std::move(rule));
    }
    return Presentation::make(std::move(config));
}

}  // namespace qwonder
