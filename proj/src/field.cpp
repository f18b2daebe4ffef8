#include "coxdescent/field.hpp"

#include "coxdescent/errors.hpp"

#include <cctype>
#include <limits>

namespace coxdescent {

namespace {

using UPoly = std::vector<std::uint32_t>; // coefficients low to high, trimmed

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero).
UPoly upoly_rem(UPoly f, const UPoly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = invmod(g.back(), p);
    while (f.size() > dg) {
        const std::uint32_t c = mulmod(f.back(), lead_inv, p);
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
        }
        trim(f);
    }
    return f;
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = upoly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ULL;
    }
    return h;
}

// Tiny recursive-descent parser for element text in `t`.
class ElementParser {
public:
    ElementParser(const FieldTower& f, std::string_view s) : f_(f), s_(s) {}

    FieldElement run() {
        FieldElement v = expr();
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
    [[noreturn]] void fail(const char* why) const {
        throw ParseError("bad field element '" + std::string(s_) + "': " + why);
    }
    std::uint64_t number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail("number too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        }
        return v;
    }
    FieldElement expr() {
        FieldElement acc = f_.zero();
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        for (;;) {
            FieldElement t = term();
            acc = negate ? f_.sub(acc, t) : f_.add(acc, t);
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return acc;
    }
    FieldElement term() {
        FieldElement acc = factor();
        while (eat('*')) acc = f_.mul(acc, factor());
        return acc;
    }
    FieldElement factor() {
        skip();
        FieldElement base;
        if (eat('(')) {
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (pos_ < s_.size() && s_[pos_] == 't') {
            ++pos_;
            if (f_.degree() == 1) fail("'t' is not defined over a prime field");
            base = f_.generator();
        } else {
            const std::uint64_t n = number();
            base = f_.from_int(static_cast<std::int64_t>(n % f_.characteristic()));
        }
        if (eat('^')) base = f_.pow(base, number());
        return base;
    }

    const FieldTower& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string format_upoly(std::span<const std::uint32_t> c, int d) {
    std::string out;
    for (int k = d; k >= 0; --k) {
        const std::uint32_t v = c[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(v);
            continue;
        }
        if (v != 1) out += std::to_string(v) + "*";
        out += 't';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

FieldTower::FieldTower(std::uint32_t p, int d) : p_(p), d_(d) {
    if (!is_prime(p) || p >= (1u << 31)) throw FieldError("characteristic must be a prime below 2^31");
    if (d < 1 || d > kMaxExtensionDegree) throw FieldError("extension degree out of range");
    if (d == 1) {
        min_poly_ = {0, 1};
        init();
        return;
    }
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t n = 0; n < total; ++n) {
        std::vector<std::uint32_t> cand(static_cast<std::size_t>(d) + 1, 0);
        std::uint64_t rest = n;
        for (int i = 0; i < d; ++i) {
            cand[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        cand[static_cast<std::size_t>(d)] = 1;
        if (cand[0] == 0) continue;
        min_poly_ = std::move(cand);
        try {
            init();
            return;
        } catch (const FieldError&) {
        }
    }
    throw FieldError("no irreducible polynomial found");
}

FieldTower::FieldTower(std::uint32_t p, std::vector<std::uint32_t> min_poly)
    : p_(p), d_(static_cast<int>(min_poly.size()) - 1), min_poly_(std::move(min_poly)) {
    if (!is_prime(p) || p >= (1u << 31)) throw FieldError("characteristic must be a prime below 2^31");
    if (d_ < 1 || d_ > kMaxExtensionDegree) throw FieldError("extension degree out of range");
    for (auto& c : min_poly_) c %= p_;
    if (min_poly_.back() != 1) throw FieldError("minimal polynomial must be monic");
    init();
}

FieldTower::FieldTower(std::uint32_t p, int d, std::string_view text) : p_(p), d_(d) {
    if (!is_prime(p) || p >= (1u << 31)) throw FieldError("characteristic must be a prime below 2^31");
    if (d < 1 || d > kMaxExtensionDegree) throw FieldError("extension degree out of range");
    // Parse the modulus as a polynomial in t with degree <= d using a
    // throwaway tower of degree d+1 where t^d is not yet reduced.
    if (d + 1 > kMaxExtensionDegree) {
        throw FieldError("extension degree too large for textual modulus");
    }
    // Any irreducible of degree d+1 works as scratch modulus: expressions
    // of degree <= d are never reduced by it.
    FieldTower scratch(p, d + 1);
    FieldElement m = scratch.parse(text);
    min_poly_.assign(m.coords.begin(), m.coords.begin() + d + 1);
    if (min_poly_.back() != 1) throw FieldError("minimal polynomial must be monic of the given degree");
    init();
}

void FieldTower::init() {
    size_ = 1;
    for (int i = 0; i < d_; ++i) size_ *= p_;
    id_ = 1469598103934665603ULL;
    id_ = fnv1a(id_, p_);
    for (auto c : min_poly_) id_ = fnv1a(id_, c);

    frobenius_matrix_.clear();
    if (d_ > 1) {
        // t^p, then its powers.
        FieldElement tp = pow(generator(), p_);
        FieldElement cur = one();
        for (int j = 0; j < d_; ++j) {
            frobenius_matrix_.push_back(cur.coords);
            cur = mul(cur, tp);
        }
        // Irreducibility: gcd(t^{p^i} - t, m) = 1 for 1 <= i <= d/2.
        FieldElement x = generator();
        for (int i = 1; i <= d_ / 2; ++i) {
            x = frobenius_once(x);
            UPoly diff(x.coords.begin(), x.coords.begin() + d_);
            diff.resize(std::max<std::size_t>(diff.size(), 2));
            diff[1] = (diff[1] + p_ - 1) % p_;
            UPoly g = upoly_gcd(min_poly_, diff, p_);
            if (g.size() != 1) throw FieldError("minimal polynomial " + format_min_poly() + " is reducible");
        }
    }
}

FieldElement FieldTower::make() const {
    FieldElement e;
    e.tower_id = id_;
    return e;
}

FieldElement FieldTower::zero() const { return make(); }

FieldElement FieldTower::one() const {
    FieldElement e = make();
    e.coords[0] = 1;
    return e;
}

FieldElement FieldTower::generator() const {
    FieldElement e = make();
    if (d_ == 1) {
        e.coords[0] = (p_ - min_poly_[0]) % p_;
    } else {
        e.coords[1] = 1;
    }
    return e;
}

FieldElement FieldTower::from_int(std::int64_t v) const {
    FieldElement e = make();
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    e.coords[0] = static_cast<std::uint32_t>(r);
    return e;
}

FieldElement FieldTower::from_coords(std::span<const std::int64_t> coords) const {
    if (coords.size() > static_cast<std::size_t>(d_)) throw FieldError("too many coordinates");
    FieldElement e = make();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        std::int64_t r = coords[i] % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        e.coords[i] = static_cast<std::uint32_t>(r);
    }
    return e;
}

void FieldTower::check(const FieldElement& a) const {
    if (a.tower_id != id_) throw FieldError("field element belongs to a different tower");
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = make();
    for (int i = 0; i < d_; ++i) {
        std::uint32_t s = a.coords[i] + b.coords[i];
        r.coords[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = make();
    for (int i = 0; i < d_; ++i) {
        r.coords[i] = a.coords[i] >= b.coords[i] ? a.coords[i] - b.coords[i] : a.coords[i] + p_ - b.coords[i];
    }
    return r;
}

FieldElement FieldTower::neg(const FieldElement& a) const {
    check(a);
    FieldElement r = make();
    for (int i = 0; i < d_; ++i) r.coords[i] = a.coords[i] == 0 ? 0 : p_ - a.coords[i];
    return r;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r = make();
    if (d_ == 1) {
        r.coords[0] = mulmod(a.coords[0], b.coords[0], p_);
        return r;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (int i = 0; i < d_; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.coords[i]) * b.coords[j]) % p_;
        }
    }
    // t^d = -(m_0 + ... + m_{d-1} t^{d-1})
    for (int k = 2 * d_ - 2; k >= d_; --k) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < d_; ++i) {
            const std::uint64_t sub = c * min_poly_[static_cast<std::size_t>(i)] % p_;
            prod[k - d_ + i] = (prod[k - d_ + i] + p_ - sub) % p_;
        }
    }
    for (int i = 0; i < d_; ++i) r.coords[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FieldElement FieldTower::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement r = one();
    FieldElement b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement FieldTower::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw FieldError("division by zero");
    FieldElement r = make();
    if (d_ == 1) {
        r.coords[0] = invmod(a.coords[0], p_);
        return r;
    }
    // Extended Euclid on (m, a): track s with s*a = rem (mod m).
    UPoly r0 = min_poly_, r1(a.coords.begin(), a.coords.begin() + d_);
    trim(r1);
    UPoly s0, s1 = {1};
    while (r1.size() > 1) {
        // q = r0 / r1
        UPoly rem = r0;
        UPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        const std::uint32_t li = invmod(r1.back(), p_);
        while (rem.size() >= r1.size()) {
            const std::uint32_t c = mulmod(rem.back(), li, p_);
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[shift + i] = (rem[shift + i] + p_ - mulmod(c, r1[i], p_)) % p_;
            }
            trim(rem);
        }
        // s2 = s0 - q*s1
        UPoly qs(q.size() + s1.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = (qs[i + j] + mulmod(q[i], s1[j], p_)) % p_;
        }
        UPoly s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            const std::uint32_t x = i < s0.size() ? s0[i] : 0;
            const std::uint32_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p_ - y) % p_;
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c with s1*a = c.
    const std::uint32_t ci = invmod(r1[0], p_);
    s1 = upoly_rem(s1, min_poly_, p_);
    for (std::size_t i = 0; i < s1.size(); ++i) r.coords[i] = mulmod(s1[i], ci, p_);
    return r;
}

FieldElement FieldTower::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldTower::frobenius_once(const FieldElement& a) const {
    FieldElement r = make();
    for (int j = 0; j < d_; ++j) {
        const std::uint64_t c = a.coords[j];
        if (c == 0) continue;
        const auto& col = frobenius_matrix_[static_cast<std::size_t>(j)];
        for (int i = 0; i < d_; ++i) {
            r.coords[i] = static_cast<std::uint32_t>((r.coords[i] + c * col[i]) % p_);
        }
    }
    return r;
}

FieldElement FieldTower::frobenius(const FieldElement& a, std::int64_t i) const {
    check(a);
    if (d_ == 1) return a;
    std::int64_t k = i % d_;
    if (k < 0) k += d_;
    FieldElement r = a;
    for (std::int64_t j = 0; j < k; ++j) r = frobenius_once(r);
    return r;
}

bool FieldTower::is_zero(const FieldElement& a) const {
    check(a);
    for (int i = 0; i < d_; ++i) {
        if (a.coords[i] != 0) return false;
    }
    return true;
}

bool FieldTower::is_one(const FieldElement& a) const { return a == one(); }

bool FieldTower::in_prime_field(const FieldElement& a) const {
    check(a);
    for (int i = 1; i < d_; ++i) {
        if (a.coords[i] != 0) return false;
    }
    return true;
}

FieldElement FieldTower::element_at(std::uint64_t index) const {
    if (index >= size_) throw FieldError("element index out of range");
    FieldElement e = make();
    for (int i = 0; i < d_; ++i) {
        e.coords[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

FieldElement FieldTower::parse(std::string_view text) const { return ElementParser(*this, text).run(); }

std::string FieldTower::format(const FieldElement& a) const {
    check(a);
    return format_upoly(std::span(a.coords.data(), a.coords.size()), d_ - 1);
}

std::string FieldTower::format_min_poly() const { return format_upoly(min_poly_, d_); }

} // namespace coxdescent
