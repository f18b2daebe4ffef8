#pragma once

#include "coxdescent/coxcheck.hpp"
#include "coxdescent/galois.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxdescent {

/// A library error raised while building the objects of a problem file,
/// tagged with the offending line.
class SemanticError : public Error {
public:
    SemanticError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

struct NamedIdeal {
    std::string name;
    std::vector<Polynomial> gens;
};

/// Contents of a problem file. See docs/problem-format.md for the grammar.
struct Problem {
    std::shared_ptr<const FieldTower> field;
    CoxAmbient ambient;
    std::vector<NamedIdeal> ideals;
    std::optional<SemilinearAction> action;

    /// Generators of the named ideal; "irrelevant" names the irrelevant
    /// ideal unless the file defines an ideal of that name. Throws
    /// SemanticError for unknown names.
    std::vector<Polynomial> ideal(std::string_view name) const;
};

/// Throws ParseError for malformed text and SemanticError when the text is
/// well formed but describes invalid objects.
Problem parse_problem(std::string_view text);

/// Reads and parses a file.
Problem load_problem(const std::string& path);

/// Canonical text of a problem; parse_problem(format_problem(p)) prints
/// back to the same text.
std::string format_problem(const Problem& problem);

} // namespace coxdescent
