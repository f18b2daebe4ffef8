#include "coxdescent/polynomial.hpp"

#include "coxdescent/errors.hpp"

#include <algorithm>
#include <cctype>

namespace coxdescent {

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw RingError("null ring");
}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    const PolyRing& R = *ring;
    const FieldTower& F = R.field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        F.check(t.coeff);
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = F.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
            out.push_back(t);
        }
    }
    if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(PolyRingPtr ring, const FieldElement& c) {
    return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
    if (index < 0 || index >= ring->num_vars()) throw RingError("variable index out of range");
    Monomial m;
    m.exp[index] = 1;
    const FieldElement one = ring->field().one();
    return monomial(std::move(ring), m, one);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const FieldElement& c) {
    ring->field().check(c);
    std::vector<Term> t;
    if (!ring->field().is_zero(c)) t.push_back({m, c});
    return Polynomial(std::move(ring), std::move(t));
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw RingError("zero polynomial has no leading monomial");
    return terms_.front().mono;
}

const FieldElement& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw RingError("zero polynomial has no leading coefficient");
    return terms_.front().coeff;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (!same_ring(*ring_, *other.ring_)) throw RingError("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff = ring_->field().neg(term.coeff);
    return Polynomial(ring_, std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other);
    sub_mul_term(ring_->field().from_int(-1), Monomial{}, other);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other);
    sub_mul_term(ring_->field().one(), Monomial{}, other);
    return *this;
}

void Polynomial::sub_mul_term(const FieldElement& c, const Monomial& m, const Polynomial& g) {
    const PolyRing& R = *ring_;
    const FieldTower& F = R.field();
    if (F.is_zero(c) || g.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    const bool unit_shift = m.is_one();
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end()) {
            out.push_back(*a++);
            continue;
        }
        const Monomial bm = unit_shift ? b->mono : b->mono * m;
        if (a == terms_.end()) {
            out.push_back({bm, F.neg(F.mul(c, b->coeff))});
            ++b;
            continue;
        }
        const int cmp = R.compare(a->mono, bm);
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            out.push_back({bm, F.neg(F.mul(c, b->coeff))});
            ++b;
        } else {
            FieldElement v = F.sub(a->coeff, F.mul(c, b->coeff));
            if (!F.is_zero(v)) out.push_back({bm, v});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial acc(a.ring_);
    const FieldTower& F = a.ring_->field();
    // Multiply by the shorter operand term by term.
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& big = a.size() <= b.size() ? b : a;
    for (const Term& t : small.terms_) acc.sub_mul_term(F.neg(t.coeff), t.mono, big);
    return acc;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    const FieldTower& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff = F.mul(term.coeff, c);
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
    const FieldTower& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    std::vector<Term> t = terms_;
    for (auto& term : t) {
        term.mono = term.mono * m;
        term.coeff = F.mul(term.coeff, c);
    }
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = constant(ring_, ring_->field().one());
    Polynomial b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field().inv(terms_.front().coeff));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const Multidegree d0 = ring_->degree(terms_.front().mono);
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (ring_->degree(terms_[i].mono) != d0) return false;
    }
    return true;
}

Multidegree Polynomial::multidegree() const {
    if (terms_.empty()) throw IdealError("the zero polynomial has no multidegree");
    const Multidegree d0 = ring_->degree(terms_.front().mono);
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (ring_->degree(terms_[i].mono) != d0) {
            throw InhomogeneousError(ring_->format(terms_.front().mono), ring_->format(terms_[i].mono));
        }
    }
    return d0;
}

Polynomial Polynomial::shift_to(PolyRingPtr target, int offset) const {
    if (target->num_vars() != ring_->num_vars() + offset) throw RingError("shift does not match target ring");
    if (!(target->field() == ring_->field())) throw RingError("shift changes the coefficient field");
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const Term& term : terms_) {
        Monomial m;
        for (int i = 0; i < ring_->num_vars(); ++i) {
            const int j = i + offset;
            if (j < 0) {
                if (term.mono.exp[i]) throw RingError("projection drops a variable that occurs");
                continue;
            }
            m.exp[j] = term.mono.exp[i];
        }
        FieldElement c = term.coeff;
        c.tower_id = target->field().id();
        t.push_back({m, c});
    }
    return from_terms(std::move(target), std::move(t));
}

bool Polynomial::uses_variable(int index) const noexcept {
    for (const Term& t : terms_) {
        if (t.mono.exp[index]) return true;
    }
    return false;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    const FieldTower& F = ring_->field();
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += '+';
        const bool unit_mono = t.mono.is_one();
        std::string c = F.format(t.coeff);
        if (unit_mono) {
            out += (c.find('+') != std::string::npos) ? "(" + c + ")" : c;
            continue;
        }
        if (!F.is_one(t.coeff)) {
            out += (c.find('+') != std::string::npos) ? "(" + c + ")" : c;
            out += '*';
        }
        out += ring_->format(t.mono);
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(*a.ring_, *b.ring_) && a.terms_ == b.terms_;
}

std::string format_degree(const Multidegree& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ")";
}

namespace {

class PolyParser {
public:
    PolyParser(PolyRingPtr ring, std::string_view s) : ring_(std::move(ring)), s_(s) {}

    Polynomial run() {
        Polynomial v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad polynomial '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
    }
    unsigned number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > 1'000'000'000ULL) fail("number too large");
        }
        return static_cast<unsigned>(v);
    }
    Polynomial expr() {
        Polynomial acc(ring_);
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        for (;;) {
            Polynomial t = term();
            if (negate) acc -= t;
            else acc += t;
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return acc;
    }
    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    Polynomial factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        Polynomial base(ring_);
        const char c = s_[pos_];
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned n = number();
            base = Polynomial::constant(ring_, ring_->field().from_int(n % ring_->field().characteristic()));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name == "t") {
                if (ring_->field().degree() == 1) fail("'t' is not defined over a prime field");
                base = Polynomial::constant(ring_, ring_->field().generator());
            } else {
                const int idx = ring_->var_index(name);
                if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
                base = Polynomial::variable(ring_, idx);
            }
        } else {
            fail(std::string("unexpected '") + c + "'");
        }
        if (eat('^')) base = base.pow(number());
        return base;
    }

    PolyRingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(PolyRingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).run(); }

} // namespace coxdescent
