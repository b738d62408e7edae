#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polygem/steenrod.hpp"
#include "polygem/unstable.hpp"

namespace polygem {

/// Syntax or validation error at a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::invalid_argument("position " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A generator token such as i(2), ibar(4), iprime(3), isub(7) or w(1,2,8),
/// optionally followed by `#k` to pick the k-th factor of that name.
struct GeneratorRef {
    ModuleId module;
    Label wedge_label;  // WedgeF1 only
    int occurrence = 1;

    ModuleElement element() const;
};

/// One summand of an expression: a Steenrod word, optionally applied to a
/// generator. Words are composed left to right and Adem-reduced.
struct Term {
    std::size_t position = 0;
    SteenrodElement op;
    int op_degree = 0;
    /// Written as one admissible word (or none), hence a basis label.
    std::optional<Label> literal_label;
    std::optional<GeneratorRef> generator;
};

/// Splits "t1 + t2 + ..." into terms. "0" gives no terms.
std::vector<Term> parse_terms(std::string_view text);

/// Value of a term with a generator. A term written as one admissible word is
/// a basis label and must be valid for the module; the error names the
/// violated condition. Other words act after reduction.
ModuleElement evaluate(const Term& t);

SteenrodElement parse_steenrod(std::string_view text);
/// All terms must share one module and degree, without `#k` suffixes.
ModuleElement parse_module_element(std::string_view text);

using ParsedElement = std::variant<SteenrodElement, ModuleElement>;
/// Module element if any term names a generator, else a Steenrod element.
ParsedElement parse_element(std::string_view text);

/// "Free(4)", "ReducedFree(3)", "Prime(3)", "SubI(7)" or "WedgeF1(2)".
ModuleId parse_module_id(std::string_view text);

}  // namespace polygem
