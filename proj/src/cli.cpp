#include "coxdescent/cli.hpp"

#include "coxdescent/galois.hpp"
#include "coxdescent/problem.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <optional>
#include <random>

namespace coxdescent {

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string ideal;
    std::string against = "irrelevant";
    std::optional<std::uint64_t> seed;
    int threads = 0;
};

void print_basis(std::ostream& out, const std::vector<Polynomial>& basis) {
    if (basis.empty()) {
        out << "0\n";
        return;
    }
    for (const Polynomial& g : basis) out << g << '\n';
}

// Random combinations sum c_i m_i f_i must lie in `result`.
bool self_check(std::uint64_t seed, const std::vector<Polynomial>& fs, const Ideal& result, std::ostream& err) {
    if (fs.empty()) {
        err << "self-check seed=" << seed << ": nothing to check\n";
        return true;
    }
    std::mt19937_64 rng(seed);
    const PolyRingPtr& base = result.ring().base();
    const FieldTower& k = base->field();
    const int n = base->num_vars();
    constexpr int rounds = 8;
    for (int round = 0; round < rounds; ++round) {
        Polynomial combo(base);
        for (const Polynomial& f : fs) {
            Monomial m;
            const int deg = static_cast<int>(rng() % 3);
            for (int i = 0; i < deg; ++i) ++m.exp[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))];
            const FieldElement c = k.element_at(rng() % k.size());
            combo += f.mul_term(m, c);
        }
        if (!result.contains(combo)) {
            err << "self-check seed=" << seed << ": FAILED on " << combo << '\n';
            return false;
        }
    }
    err << "self-check seed=" << seed << ": " << rounds << " random combinations verified\n";
    return true;
}

int finish_check(const Options& opt, const std::vector<Polynomial>& fs, const Ideal& result, std::ostream& err, int code) {
    if (opt.seed && !self_check(*opt.seed, fs, result, err)) return exit_code::semantic;
    return code;
}

int cmd_gb(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out, std::ostream& err) {
    const Ideal I(pb.ambient.ring_ptr(), fs);
    print_basis(out, I.reduced_basis());
    return finish_check(opt, fs, I, err, exit_code::ok);
}

int cmd_saturate(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out,
                 std::ostream& err) {
    const Ideal I(pb.ambient.ring_ptr(), fs);
    const Ideal G(pb.ambient.ring_ptr(), pb.ideal(opt.against));
    const Ideal sat = saturate(I, G);
    print_basis(out, sat.reduced_basis());
    return finish_check(opt, fs, sat, err, exit_code::ok);
}

int cmd_strict_ci(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out,
                  std::ostream& err) {
    const StrictCiVerdict v = is_strict_ci(pb.ambient, fs);
    int code = exit_code::ok;
    switch (v.kind) {
    case StrictCiVerdict::Kind::strict:
        out << "STRICT\n";
        break;
    case StrictCiVerdict::Kind::not_strict:
        out << "NOT_STRICT witness=" << *v.witness << '\n';
        code = exit_code::not_strict;
        break;
    case StrictCiVerdict::Kind::not_ci:
        out << "NOT_CI height=" << v.height << " expected=" << v.expected << '\n';
        code = exit_code::not_ci;
        break;
    }
    if (!opt.seed) return code;
    const Ideal I(pb.ambient.ring_ptr(), fs);
    return finish_check(opt, fs, subscheme_ideal(pb.ambient, I), err, code);
}

int cmd_ci(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out, std::ostream& err) {
    const Ideal I(pb.ambient.ring_ptr(), fs);
    const bool ci = is_complete_intersection(pb.ambient, fs);
    const int h = I.is_unit() ? ring_dimension(pb.ambient.ring()) + 1 : height(I);
    out << (ci ? "CI" : "NOT_CI") << " height=" << h << " expected=" << fs.size() << '\n';
    return finish_check(opt, fs, I, err, ci ? exit_code::ok : exit_code::not_ci);
}

int cmd_dim(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out, std::ostream& err) {
    const Ideal I(pb.ambient.ring_ptr(), fs);
    out << "dimension=" << dimension(I) << '\n';
    out << "height=" << height(I) << '\n';
    return finish_check(opt, fs, I, err, exit_code::ok);
}

int cmd_descend(const Options& opt, const Problem& pb, const std::vector<Polynomial>& fs, std::ostream& out,
                std::ostream& err) {
    if (!pb.action) throw SemanticError("descend needs an action block", 0);
    DescentResult r;
    try {
        r = descend(pb.ambient, *pb.action, fs);
    } catch (const DescentError& e) {
        out << e.tag() << '\n';
        err << "error: " << e.what() << '\n';
        return exit_code::descent_failed;
    }
    for (std::size_t b = 0; b + 1 < r.s_bounds.size(); ++b) {
        out << "ORBIT {";
        for (int i = r.s_bounds[b]; i < r.s_bounds[b + 1]; ++i) {
            out << (i == r.s_bounds[b] ? " " : " ; ") << r.new_gens[static_cast<std::size_t>(i)];
        }
        out << " }\n";
    }
    for (const auto& [before, after] : r.degree_log) out << format_degree(before) << " -> " << format_degree(after) << '\n';
    const Ideal before(pb.ambient.ring_ptr(), fs);
    const Ideal after(pb.ambient.ring_ptr(), r.new_gens);
    const bool equal = ideal_equal(before, after);
    out << "IDEAL_EQUAL=" << (equal ? "true" : "false") << '\n';
    if (!equal) return exit_code::descent_failed;
    return finish_check(opt, fs, after, err, exit_code::ok);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Strict complete intersection tests and Galois descent in Cox rings", "coxdescent"};
    app.add_option("command", opt.command, "gb | saturate | strict-ci | ci | dim | descend")
        ->required()
        ->check(CLI::IsMember({"gb", "saturate", "strict-ci", "ci", "dim", "descend"}));
    app.add_option("file", opt.file, "problem file")->required();
    app.add_option("--ideal", opt.ideal, "ideal to work on (default: first ideal in the file)");
    app.add_option("--against", opt.against, "saturation direction (default: irrelevant)");
    app.add_option("--seed", opt.seed, "run a randomized self-check, reported on stderr");
    app.add_option("--threads", opt.threads, "OpenMP thread count (default: runtime default)")->check(CLI::PositiveNumber);
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "usage: coxdescent <gb|saturate|strict-ci|ci|dim|descend> <file> "
            << "[--ideal NAME] [--against NAME] [--seed N] [--threads N]\n";
        return exit_code::usage;
    }
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    try {
        const Problem pb = load_problem(opt.file);
        if (opt.ideal.empty()) {
            if (pb.ideals.empty()) throw SemanticError("problem file defines no ideal", 0);
            opt.ideal = pb.ideals.front().name;
        }
        const std::vector<Polynomial> fs = pb.ideal(opt.ideal);
        if (opt.command == "gb") return cmd_gb(opt, pb, fs, out, err);
        if (opt.command == "saturate") return cmd_saturate(opt, pb, fs, out, err);
        if (opt.command == "strict-ci") return cmd_strict_ci(opt, pb, fs, out, err);
        if (opt.command == "ci") return cmd_ci(opt, pb, fs, out, err);
        if (opt.command == "dim") return cmd_dim(opt, pb, fs, out, err);
        return cmd_descend(opt, pb, fs, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::semantic;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::semantic;
    }
}

} // namespace coxdescent
