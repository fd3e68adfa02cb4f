#include "qwonder/hopf.hpp"

#include <sstream>

namespace qwonder {

TensorElement TensorElement::lift(const AlgebraElement& x) {
    TensorElement out(x.presentation(), 1);
    for (const auto& [w, c] : x.terms()) out.terms_[{w}] = c;
    return out;
}

TensorElement TensorElement::tensor(const TensorElement& a, const TensorElement& b) {
    if (a.pres_ != b.pres_) throw user_error("presentation mismatch");
    TensorElement out(a.pres_, a.arity_ + b.arity_);
    for (const auto& [sa, ca] : a.terms_)
        for (const auto& [sb, cb] : b.terms_) {
            std::vector<Word> slots = sa;
            slots.insert(slots.end(), sb.begin(), sb.end());
            out.add_term(slots, ca * cb);
        }
    return out;
}

TensorElement TensorElement::tensor(const AlgebraElement& a, const AlgebraElement& b) {
    return tensor(lift(a), lift(b));
}

void TensorElement::add_term(const std::vector<Word>& slots, const QRational& coeff) {
    if (coeff.is_zero()) return;
    if (slots.size() != arity_) throw internal_error("tensor arity mismatch");
    auto it = terms_.find(slots);
    if (it == terms_.end()) {
        terms_[slots] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
    if (arity_ != other.arity_) throw user_error("tensor arity mismatch");
    TensorElement out = *this;
    for (const auto& [s, c] : other.terms_) out.add_term(s, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
    return *this + other * QRational(-1);
}

TensorElement TensorElement::operator*(const QRational& scalar) const {
    TensorElement out(pres_, arity_);
    if (scalar.is_zero()) return out;
    for (const auto& [s, c] : terms_) out.terms_[s] = c * scalar;
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
    if (arity_ != other.arity_) throw user_error("tensor arity mismatch");
    if (pres_ != other.pres_) throw user_error("presentation mismatch");
    TensorElement out(pres_, arity_);
    for (const auto& [sa, ca] : terms_)
        for (const auto& [sb, cb] : other.terms_) {
            // Multiply slotwise, then distribute over the normal forms.
            std::vector<AlgebraElement> products;
            products.reserve(arity_);
            for (size_t i = 0; i < arity_; ++i)
                products.push_back(pres_->normal_form({{sa[i] + sb[i], QRational(1)}}));
            std::vector<Word> slots(arity_);
            QRational scale = ca * cb;
            auto emit = [&](auto&& self, size_t slot, const QRational& acc) -> void {
                if (slot == arity_) {
                    out.add_term(slots, acc);
                    return;
                }
                for (const auto& [w, c] : products[slot].terms()) {
                    slots[slot] = w;
                    self(self, slot + 1, acc * c);
                }
            };
            emit(emit, 0, scale);
        }
    return out;
}

AlgebraElement TensorElement::to_element() const {
    if (arity_ != 1) throw internal_error("to_element needs arity 1");
    AlgebraElement out(pres_);
    for (const auto& [s, c] : terms_) out.add_term(s[0], c);
    return out;
}

AlgebraElement TensorElement::multiply_out() const {
    AlgebraElement out(pres_);
    for (const auto& [slots, c] : terms_) {
        Word joined;
        for (const Word& w : slots) joined += w;
        out += pres_->element(joined, c);
    }
    return out;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [slots, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        if (!c.is_one()) os << cs << "*";
        for (size_t i = 0; i < slots.size(); ++i) {
            if (i) os << " (x) ";
            os << pres_->word_to_string(slots[i]);
        }
    }
    return os.str();
}

HopfStructure::HopfStructure(Config config) : pres_(std::move(config.presentation)) {
    size_t n = pres_->generator_count();
    if (config.coproducts.size() != n || config.counits.size() != n)
        throw user_error("hopf tables must cover every generator");
    for (size_t g = 0; g < n; ++g) {
        TensorElement delta(pres_, 2);
        for (const auto& [lw, rw, c] : config.coproducts[g]) {
            // Each side normalized separately.
            AlgebraElement left = pres_->element(lw);
            AlgebraElement right = pres_->element(rw);
            for (const auto& [wl, cl] : left.terms())
                for (const auto& [wr, cr] : right.terms()) delta.add_term({wl, wr}, c * cl * cr);
        }
        coproduct_of_gen_.push_back(std::move(delta));
    }
    counit_of_gen_ = std::move(config.counits);
    antipode_of_gen_ = std::move(config.antipodes);
    if (antipode_of_gen_ && antipode_of_gen_->size() != n)
        throw user_error("antipode table must cover every generator");
}

TensorElement HopfStructure::coproduct(const AlgebraElement& x) const {
    if (x.presentation() != pres_) throw user_error("presentation mismatch");
    TensorElement out(pres_, 2);
    for (const auto& [w, c] : x.terms()) {
        TensorElement acc(pres_, 2);
        acc.add_term({Word(), Word()}, 1);
        for (char g : w) acc = acc * coproduct_of_gen_[static_cast<size_t>(g)];
        out = out + acc * c;
    }
    return out;
}

TensorElement HopfStructure::coproduct_slot(const TensorElement& t, size_t slot) const {
    if (slot >= t.arity()) throw user_error("slot out of range");
    TensorElement out(pres_, t.arity() + 1);
    for (const auto& [slots, c] : t.terms()) {
        TensorElement piece = coproduct(pres_->element(slots[slot]));
        for (const auto& [pair, pc] : piece.terms()) {
            std::vector<Word> next;
            next.reserve(t.arity() + 1);
            for (size_t i = 0; i < slot; ++i) next.push_back(slots[i]);
            next.push_back(pair[0]);
            next.push_back(pair[1]);
            for (size_t i = slot + 1; i < t.arity(); ++i) next.push_back(slots[i]);
            out.add_term(next, c * pc);
        }
    }
    return out;
}

QRational HopfStructure::counit(const AlgebraElement& x) const {
    if (x.presentation() != pres_) throw user_error("presentation mismatch");
    QRational out(0);
    for (const auto& [w, c] : x.terms()) {
        QRational value = c;
        for (char g : w) value = value * counit_of_gen_[static_cast<size_t>(g)];
        out += value;
    }
    return out;
}

TensorElement HopfStructure::counit_slot(const TensorElement& t, size_t slot) const {
    if (slot >= t.arity()) throw user_error("slot out of range");
    if (t.arity() == 1) throw user_error("cannot drop the only slot");
    TensorElement out(pres_, t.arity() - 1);
    for (const auto& [slots, c] : t.terms()) {
        QRational value = counit(pres_->element(slots[slot]));
        if (value.is_zero()) continue;
        std::vector<Word> next;
        for (size_t i = 0; i < t.arity(); ++i)
            if (i != slot) next.push_back(slots[i]);
        out.add_term(next, c * value);
    }
    return out;
}

AlgebraElement HopfStructure::antipode_word(const Word& word) const {
    const auto& table = *antipode_of_gen_;
    AlgebraElement acc = pres_->unit();
    // Anti-multiplicative: S(g1...gk) = S(gk)...S(g1).
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = acc * table[static_cast<size_t>(*it)];
    return acc;
}

AlgebraElement HopfStructure::antipode(const AlgebraElement& x) const {
    if (!antipode_of_gen_)
        throw user_error("no antipode on " + pres_->name());
    if (x.presentation() != pres_) throw user_error("presentation mismatch");
    AlgebraElement out(pres_);
    for (const auto& [w, c] : x.terms()) out += antipode_word(w) * c;
    return out;
}

TensorElement HopfStructure::antipode_slot(const TensorElement& t, size_t slot) const {
    if (!antipode_of_gen_) throw user_error("no antipode on " + pres_->name());
    if (slot >= t.arity()) throw user_error("slot out of range");
    TensorElement out(pres_, t.arity());
    for (const auto& [slots, c] : t.terms()) {
        AlgebraElement value = antipode_word(slots[slot]);
        for (const auto& [w, wc] : value.terms()) {
            std::vector<Word> next = slots;
            next[slot] = w;
            out.add_term(next, c * wc);
        }
    }
    return out;
}

namespace {

HopfStructure::Config matrix_tables(const PresentationPtr& p) {
    auto idx = [&](const char* name) {
        int i = p->generator_index(name);
        if (i < 0) {
            // vinberg-style naming
            std::string alt = std::string(name) + "z";
            i = p->generator_index(alt);
        }
        if (i < 0) throw user_error("presentation lacks a generator in the role " + std::string(name));
        return static_cast<char>(i);
    };
    char a = idx("a"), b = idx("b"), c = idx("c"), d = idx("d");
    HopfStructure::Config config;
    config.presentation = p;
    config.coproducts.resize(p->generator_count());
    config.counits.assign(p->generator_count(), QRational(0));
    auto set = [&](char g, std::vector<std::tuple<Word, Word, QRational>> delta, QRational eps) {
        config.coproducts[static_cast<size_t>(g)] = std::move(delta);
        config.counits[static_cast<size_t>(g)] = std::move(eps);
    };
    set(a, {{Word{a}, Word{a}, QRational(1)}, {Word{b}, Word{c}, QRational(1)}}, QRational(1));
    set(b, {{Word{a}, Word{b}, QRational(1)}, {Word{b}, Word{d}, QRational(1)}}, QRational(0));
    set(c, {{Word{c}, Word{a}, QRational(1)}, {Word{d}, Word{c}, QRational(1)}}, QRational(0));
    set(d, {{Word{c}, Word{b}, QRational(1)}, {Word{d}, Word{d}, QRational(1)}}, QRational(1));
    return config;
}

}  // namespace

HopfStructure make_matrix_bialgebra(const PresentationPtr& presentation) {
    return HopfStructure(matrix_tables(presentation));
}

HopfStructure make_sl2_hopf(const PresentationPtr& sl2, const QRational& q) {
    auto config = matrix_tables(sl2);
    char a = static_cast<char>(sl2->generator_index("a"));
    char b = static_cast<char>(sl2->generator_index("b"));
    char c = static_cast<char>(sl2->generator_index("c"));
    char d = static_cast<char>(sl2->generator_index("d"));
    std::vector<AlgebraElement> antipodes(sl2->generator_count(), sl2->zero());
    antipodes[static_cast<size_t>(a)] = sl2->element(Word{d});
    antipodes[static_cast<size_t>(b)] = sl2->element(Word{b}, -q.inverse());
    antipodes[static_cast<size_t>(c)] = sl2->element(Word{c}, -q);
    antipodes[static_cast<size_t>(d)] = sl2->element(Word{a});
    config.antipodes = std::move(antipodes);
    return HopfStructure(std::move(config));
}

}  // namespace qwonder
