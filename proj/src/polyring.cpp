#include "coxdescent/polyring.hpp"

#include "coxdescent/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace coxdescent {

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
        const std::uint32_t s = std::uint32_t{a.exp[i]} + b.exp[i];
        if (s > std::numeric_limits<std::uint16_t>::max()) throw RingError("exponent overflow");
        r.exp[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) {
        if (b.exp[i] > a.exp[i]) throw RingError("monomial does not divide");
        r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < kMaxVariables; ++i) {
        if (a.exp[i] && b.exp[i]) return false;
    }
    return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) noexcept {
    std::uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exp[i];
        db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) noexcept {
    for (int i = lo; i < hi; ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
    }
    return 0;
}

// Looks for a small integer row combination with all entries positive.
// Returns the combination coefficients (empty if none found).
std::vector<std::int64_t> find_positive_combination(const std::vector<std::vector<std::int64_t>>& rows, int n) {
    const int r = static_cast<int>(rows.size());
    if (r == 0 || n == 0) return {};
    const int bound = r <= 4 ? 3 : 1;
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(r));
    for (int norm = 1; norm <= bound; ++norm) {
        // Enumerate all vectors in [-norm, norm]^r with max-norm exactly `norm`.
        std::vector<int> idx(static_cast<std::size_t>(r), -norm);
        for (;;) {
            int maxabs = 0;
            for (int v : idx) maxabs = std::max(maxabs, std::abs(v));
            if (maxabs == norm) {
                std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
                bool ok = true;
                for (int j = 0; j < n && ok; ++j) {
                    for (int i = 0; i < r; ++i) w[j] += idx[i] * rows[i][j];
                    ok = w[j] > 0;
                }
                if (ok) return std::vector<std::int64_t>(idx.begin(), idx.end());
            }
            int k = 0;
            while (k < r && idx[k] == norm) idx[k++] = -norm;
            if (k == r) break;
            ++idx[k];
        }
    }
    return {};
}

} // namespace

PolyRing::PolyRing(std::shared_ptr<const FieldTower> field, std::vector<std::string> names,
                   std::vector<std::vector<std::int64_t>> grading, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), grading_(std::move(grading)), order_(order) {
    if (!field_) throw RingError("ring needs a coefficient field");
    if (names_.empty()) throw RingError("ring needs at least one variable");
    if (num_vars() > kMaxVariables) throw RingError("too many variables (max 16)");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw RingError("empty variable name");
        if (names_[i] == "t") throw RingError("'t' is reserved for the field generator");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw RingError("duplicate variable " + names_[i]);
        }
    }
    for (const auto& row : grading_) {
        if (static_cast<int>(row.size()) != num_vars()) throw RingError("grading row length must equal variable count");
    }
    if (order_.elimination_block < 0 || order_.elimination_block > num_vars()) {
        throw RingError("elimination block out of range");
    }
    positive_combination_ = find_positive_combination(grading_, num_vars());
    if (!positive_combination_.empty()) {
        positive_weights_.assign(static_cast<std::size_t>(num_vars()), 0);
        for (int j = 0; j < num_vars(); ++j) {
            for (int r = 0; r < grading_rank(); ++r) positive_weights_[j] += positive_combination_[r] * grading_[r][j];
        }
    }
}

int PolyRing::var_index(std::string_view name) const {
    for (int i = 0; i < num_vars(); ++i) {
        if (names_[i] == name) return i;
    }
    return -1;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const noexcept {
    const int n = num_vars();
    const int k = order_.elimination_block;
    if (k > 0) {
        if (int c = grevlex_range(a, b, 0, k)) return c;
    }
    return order_.kind == OrderKind::grevlex ? grevlex_range(a, b, k, n) : lex_range(a, b, k, n);
}

Multidegree PolyRing::degree(const Monomial& m) const {
    Multidegree d(grading_.size(), 0);
    for (std::size_t r = 0; r < grading_.size(); ++r) {
        for (int j = 0; j < num_vars(); ++j) d[r] += grading_[r][j] * m.exp[j];
    }
    return d;
}

std::shared_ptr<const PolyRing> PolyRing::with_auxiliary(const std::vector<std::string>& aux) const {
    std::vector<std::string> names = aux;
    names.insert(names.end(), names_.begin(), names_.end());
    auto grading = grading_;
    for (auto& row : grading) row.insert(row.begin(), aux.size(), 0);
    MonomialOrder order{order_.kind, static_cast<int>(aux.size())};
    if (order_.elimination_block != 0) throw RingError("nested elimination orders are not supported");
    return std::make_shared<const PolyRing>(field_, std::move(names), std::move(grading), order);
}

std::shared_ptr<const PolyRing> PolyRing::with_order(MonomialOrder order) const {
    return std::make_shared<const PolyRing>(field_, names_, grading_, order);
}

std::string PolyRing::format(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < num_vars(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names_[i];
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out.empty() ? "1" : out;
}

bool operator==(const PolyRing& a, const PolyRing& b) noexcept {
    return *a.field_ == *b.field_ && a.names_ == b.names_ && a.grading_ == b.grading_ && a.order_ == b.order_;
}

bool same_ring(const PolyRing& a, const PolyRing& b) noexcept { return &a == &b || a == b; }

} // namespace coxdescent
