#include "coxdescent/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace coxdescent {

namespace {

struct Line {
    int no;
    std::string key;
    std::string rest;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> split_commas(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

template <class T>
T parse_int(const std::string& w, int line, const char* what) {
    T v{};
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc{} || ptr != w.data() + w.size()) {
        throw ParseError(std::string("expected ") + what + ", got '" + w + "'", line);
    }
    return v;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

// Runs `f`, attaching `line` to library errors.
template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(e.what(), line);
    } catch (const SemanticError&) {
        throw;
    } catch (const Error& e) {
        throw SemanticError(e.what(), line);
    }
}

std::vector<Polynomial> parse_list(const PolyRingPtr& ring, const std::string& text, int line, bool homogeneous) {
    std::vector<Polynomial> out;
    if (trim(text).empty()) return out;
    for (const std::string& part : split_commas(text)) {
        if (part.empty()) throw ParseError("empty polynomial in list", line);
        Polynomial f = at_line(line, [&] { return Polynomial::parse(ring, part); });
        if (homogeneous && !f.is_zero()) at_line(line, [&] { return f.multidegree(); });
        out.push_back(std::move(f));
    }
    return out;
}

const char* order_name(OrderKind k) { return k == OrderKind::lex ? "lex" : "grevlex"; }

} // namespace

std::vector<Polynomial> Problem::ideal(std::string_view name) const {
    for (const NamedIdeal& i : ideals) {
        if (i.name == name) return i.gens;
    }
    if (name == "irrelevant") return ambient.ring().irrelevant_gens();
    throw SemanticError("unknown ideal '" + std::string(name) + "'", 0);
}

Problem parse_problem(std::string_view text) {
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        int no = 0;
        for (std::string raw; std::getline(in, raw);) {
            ++no;
            if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
            std::string s = trim(raw);
            if (s.empty()) continue;
            const auto sp = s.find_first_of(" \t");
            Line l{no, s.substr(0, sp), sp == std::string::npos ? std::string() : trim(s.substr(sp))};
            static const char* keys[] = {"field", "ambient", "vars", "grading", "order",
                                         "irrelevant", "defining", "action", "ideal"};
            if (std::find(std::begin(keys), std::end(keys), l.key) == std::end(keys)) {
                throw ParseError("unknown keyword '" + l.key + "'", no);
            }
            lines.push_back(std::move(l));
        }
    }

    std::map<std::string, const Line*> single;
    std::vector<const Line*> gradings, ideal_lines;
    const Line* frob_line = nullptr;
    const Line* map_line = nullptr;
    for (const Line& l : lines) {
        if (l.key == "grading") {
            gradings.push_back(&l);
        } else if (l.key == "ideal") {
            ideal_lines.push_back(&l);
        } else if (l.key == "action") {
            const auto w = words(l.rest);
            const std::string kind = w.empty() ? "" : w[0];
            const Line** slot = kind == "frobenius" ? &frob_line : kind == "map" ? &map_line : nullptr;
            if (!slot) throw ParseError("expected 'action frobenius E' or 'action map ...'", l.no);
            if (*slot) throw ParseError("duplicate 'action " + kind + "' line", l.no);
            *slot = &l;
        } else {
            if (single.count(l.key)) throw ParseError("duplicate '" + l.key + "' line", l.no);
            single[l.key] = &l;
        }
    }
    auto get = [&](const char* key) -> const Line* {
        auto it = single.find(key);
        return it == single.end() ? nullptr : it->second;
    };

    // field
    const Line* fl = get("field");
    if (!fl) throw ParseError("missing 'field' line", 1);
    std::shared_ptr<const FieldTower> field;
    {
        const auto w = words(fl->rest);
        if (w.empty()) throw ParseError("expected 'field P [D [MINPOLY]]'", fl->no);
        const auto p = parse_int<std::uint32_t>(w[0], fl->no, "a prime");
        int d = 1;
        if (w.size() >= 2) d = parse_int<int>(w[1], fl->no, "an extension degree");
        std::string mp;
        for (std::size_t i = 2; i < w.size(); ++i) mp += w[i];
        field = at_line(fl->no, [&]() -> std::shared_ptr<const FieldTower> {
            if (mp.empty()) return std::make_shared<const FieldTower>(p, d);
            return std::make_shared<const FieldTower>(p, d, mp);
        });
    }

    // ambient
    const Line* al = get("ambient");
    if (!al) throw ParseError("missing 'ambient' line", fl->no);
    const auto aw = words(al->rest);
    if (aw.empty()) throw ParseError("expected 'ambient product|segre-p1p1|custom'", al->no);
    const Line* vl = get("vars");
    const Line* ol = get("order");
    const Line* il = get("irrelevant");
    const Line* dl = get("defining");
    OrderKind order = OrderKind::grevlex;
    if (ol) {
        if (ol->rest == "grevlex") {
            order = OrderKind::grevlex;
        } else if (ol->rest == "lex") {
            order = OrderKind::lex;
        } else {
            throw ParseError("unknown order '" + ol->rest + "'", ol->no);
        }
    }
    auto forbid = [&](const Line* l, const std::string& kind) {
        if (l) throw ParseError("'" + l->key + "' is not allowed for ambient " + kind, l->no);
    };
    std::optional<CoxAmbient> ambient;
    if (aw[0] == "product") {
        forbid(il, "product");
        forbid(dl, "product");
        if (!gradings.empty()) forbid(gradings.front(), "product");
        if (aw.size() < 2) throw ParseError("product needs at least one dimension", al->no);
        std::vector<int> dims;
        for (std::size_t i = 1; i < aw.size(); ++i) dims.push_back(parse_int<int>(aw[i], al->no, "a dimension"));
        std::vector<std::string> names;
        if (vl) names = words(vl->rest);
        ambient.emplace(at_line(vl ? vl->no : al->no, [&] { return make_product_projective(dims, field, names, order); }));
    } else if (aw[0] == "segre-p1p1") {
        if (aw.size() != 1) throw ParseError("segre-p1p1 takes no arguments", al->no);
        for (const Line* l : {vl, ol, il, dl}) forbid(l, "segre-p1p1");
        if (!gradings.empty()) forbid(gradings.front(), "segre-p1p1");
        ambient.emplace(at_line(al->no, [&] { return make_segre_p1p1(field); }));
    } else if (aw[0] == "custom") {
        if (aw.size() != 1) throw ParseError("custom takes no arguments", al->no);
        if (!vl) throw ParseError("custom ambient needs a 'vars' line", al->no);
        if (gradings.empty()) throw ParseError("custom ambient needs 'grading' lines", al->no);
        if (!il) throw ParseError("custom ambient needs an 'irrelevant' line", al->no);
        const auto names = words(vl->rest);
        std::vector<std::vector<std::int64_t>> rows;
        for (const Line* g : gradings) {
            std::vector<std::int64_t> row;
            for (const std::string& w : words(g->rest)) row.push_back(parse_int<std::int64_t>(w, g->no, "an integer"));
            if (row.size() != names.size()) throw ParseError("grading row needs one entry per variable", g->no);
            rows.push_back(std::move(row));
        }
        auto base = at_line(vl->no, [&] {
            return std::make_shared<const PolyRing>(field, names, rows, MonomialOrder{order, 0});
        });
        std::vector<Polynomial> defining;
        if (dl) defining = parse_list(base, dl->rest, dl->no, true);
        std::vector<Polynomial> irrelevant = parse_list(base, il->rest, il->no, true);
        ambient.emplace(at_line(il->no, [&] {
            auto ring = std::make_shared<const MultigradedRing>(base, defining, irrelevant);
            return CoxAmbient(ring, AmbientKind::custom);
        }));
    } else {
        throw ParseError("unknown ambient '" + aw[0] + "'", al->no);
    }
    const MultigradedRingPtr& ring = ambient->ring_ptr();
    const PolyRingPtr& base = ring->base();

    // action
    std::optional<SemilinearAction> action;
    if (frob_line || map_line) {
        int e = 0;
        if (frob_line) {
            const auto w = words(frob_line->rest);
            if (w.size() != 2) throw ParseError("expected 'action frobenius E'", frob_line->no);
            e = parse_int<int>(w[1], frob_line->no, "a Frobenius power");
        }
        const int n = base->num_vars();
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<FieldElement> scalars(static_cast<std::size_t>(n), field->one());
        if (map_line) {
            const std::string body = trim(std::string_view(map_line->rest).substr(3));
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            for (const std::string& entry : split_commas(body)) {
                const auto arrow = entry.find("->");
                if (arrow == std::string::npos) throw ParseError("expected 'VAR -> IMAGE' in map", map_line->no);
                const std::string lhs = trim(entry.substr(0, arrow));
                const std::string rhs = trim(entry.substr(arrow + 2));
                const int from = base->var_index(lhs);
                if (from < 0) throw ParseError("unknown variable '" + lhs + "' in map", map_line->no);
                if (seen[static_cast<std::size_t>(from)]) {
                    throw ParseError("variable '" + lhs + "' mapped twice", map_line->no);
                }
                seen[static_cast<std::size_t>(from)] = true;
                const Polynomial img = at_line(map_line->no, [&] { return Polynomial::parse(base, rhs); });
                if (img.size() != 1 || img.terms()[0].mono.total_degree() != 1) {
                    throw ParseError("image of '" + lhs + "' must be a scalar times a variable", map_line->no);
                }
                const Monomial& m = img.terms()[0].mono;
                int to = 0;
                while (m.exp[static_cast<std::size_t>(to)] == 0) ++to;
                perm[static_cast<std::size_t>(from)] = to;
                scalars[static_cast<std::size_t>(from)] = img.terms()[0].coeff;
            }
        }
        const int line = map_line ? map_line->no : frob_line->no;
        action.emplace(at_line(line, [&] { return SemilinearAction(ring, e, perm, scalars); }));
    }

    // ideals
    std::vector<NamedIdeal> ideals;
    for (const Line* l : ideal_lines) {
        const auto eq = l->rest.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'ideal NAME = f1, f2, ...'", l->no);
        const std::string name = trim(std::string_view(l->rest).substr(0, eq));
        if (!is_identifier(name)) throw ParseError("bad ideal name '" + name + "'", l->no);
        for (const NamedIdeal& other : ideals) {
            if (other.name == name) throw ParseError("duplicate ideal '" + name + "'", l->no);
        }
        ideals.push_back({name, parse_list(base, l->rest.substr(eq + 1), l->no, true)});
    }

    return Problem{field, std::move(*ambient), std::move(ideals), std::move(action)};
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

namespace {

std::string join(const std::vector<Polynomial>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + fs[i].to_string();
    return s;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? " " : "") + names[i];
    return s;
}

} // namespace

std::string format_problem(const Problem& problem) {
    std::ostringstream out;
    const FieldTower& k = *problem.field;
    out << "field " << k.characteristic();
    if (k.degree() > 1) out << ' ' << k.degree() << ' ' << k.format_min_poly();
    out << '\n';
    const CoxAmbient& amb = problem.ambient;
    const PolyRing& base = amb.ring().poly_ring();
    switch (amb.kind()) {
    case AmbientKind::product_projective:
        out << "ambient product";
        for (int d : amb.dims()) out << ' ' << d;
        out << "\nvars " << join_names(base.names()) << '\n';
        out << "order " << order_name(base.order().kind) << '\n';
        break;
    case AmbientKind::segre_p1p1:
        out << "ambient segre-p1p1\n";
        break;
    case AmbientKind::custom:
        out << "ambient custom\nvars " << join_names(base.names()) << '\n';
        for (const auto& row : base.grading()) {
            out << "grading";
            for (auto v : row) out << ' ' << v;
            out << '\n';
        }
        out << "order " << order_name(base.order().kind) << '\n';
        if (!amb.ring().defining_ideal().empty()) out << "defining " << join(amb.ring().defining_ideal()) << '\n';
        out << "irrelevant " << join(amb.ring().irrelevant_gens()) << '\n';
        break;
    }
    if (problem.action) {
        const SemilinearAction& a = *problem.action;
        out << "action frobenius " << a.frobenius_power() << '\n';
        std::vector<std::string> entries;
        const auto& perm = a.permutation();
        for (int j = 0; j < base.num_vars(); ++j) {
            const auto ju = static_cast<std::size_t>(j);
            if (perm[ju] == j && k.is_one(a.scalars()[ju])) continue;
            Monomial m;
            m.exp[static_cast<std::size_t>(perm[ju])] = 1;
            const Polynomial img = Polynomial::monomial(amb.ring().base(), m, a.scalars()[ju]);
            entries.push_back(base.names()[ju] + " -> " + img.to_string());
        }
        if (!entries.empty()) {
            out << "action map ";
            for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? ", " : "") << entries[i];
            out << '\n';
        }
    }
    for (const NamedIdeal& i : problem.ideals) {
        out << "ideal " << i.name << " =";
        if (!i.gens.empty()) out << ' ' << join(i.gens);
        out << '\n';
    }
    return out.str();
}

} // namespace coxdescent
