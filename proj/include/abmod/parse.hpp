#pragma once
#include <abmod/mpoly.hpp>
#include <set>

namespace abmod {

/// Parses a polynomial expression over the named variables and the parameter.
/// Grammar: integer literals, identifiers, + - * ^, parentheses; implicit
/// multiplication is rejected. Errors carry line/column.
MPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                       const std::string& parameter, int line_offset = 1, int col_offset = 1);

struct FamilySpec {
    std::vector<std::string> variables;
    std::string parameter = "t";
    std::string f_text;
    int b_order = 8;
    std::string order = "grevlex";  // grevlex | grlex
    std::vector<Rat> samples;
    std::vector<std::string> checks;  // mu, g-equals-e, quasihom, estim:<k>, example1:<k>, example3, extension-e2
    bool checks_explicit = false;

    MPoly parse_f() const;
    MonomialOrder monomial_order() const;
    bool operator==(const FamilySpec&) const = default;
};

/// Parses the flat key-value family document (keys: variables, parameter, f,
/// b_order, order, samples, checks).
FamilySpec parse_family(const std::string& text);
std::string serialize(const FamilySpec& spec);

}  // namespace abmod
