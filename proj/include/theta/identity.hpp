// Identities between products of theta functions and their textual form.
//
// Grammar of the identity language:
//
//   identity := expr "=" expr
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := coeff | [coeff "*"] factor ("*" factor)*
//   coeff    := rational ["*" "pi"] | "pi"
//   factor   := "t" digit "(" linform ["|" ("tau"|"2tau")] ")" | "dt1(0)"
//   linform  := ["+"|"-"] part (("+"|"-") part)*
//   part     := int ["*"] var | rational | rational ["*"] "tau" | "tau" | var
//
// Example: "t1(u|tau)*t2(v|tau) = t1(u+v|2tau)*t4(u-v|2tau) + t4(u+v|2tau)*t1(u-v|2tau)".
// U+2212 (minus sign) is accepted as "-".
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace theta {

using Rational = boost::rational<std::int64_t>;

/// sum_v c_v * v + constant + tau_coeff * tau, with integer c_v.
struct LinearForm {
    std::map<std::string, std::int64_t> coeffs;  // zero coefficients are never stored
    Rational constant{0};
    Rational tau_coeff{0};

    bool is_zero() const { return coeffs.empty() && constant == Rational(0) && tau_coeff == Rational(0); }
    bool operator==(const LinearForm&) const = default;
};

struct ThetaFactor {
    enum class Kind { Theta, DTheta1 };

    Kind kind = Kind::Theta;
    int index = 1;  // 1..4; 1 for DTheta1
    LinearForm argument;
    int tau_multiplier = 1;  // the factor's modular parameter is tau_multiplier * tau

    bool operator==(const ThetaFactor&) const = default;
};

/// coefficient * pi^pi_power * prod(factors); a pure constant when factors is empty.
struct Term {
    Rational coefficient{1};
    int pi_power = 0;
    std::vector<ThetaFactor> factors;

    bool operator==(const Term&) const = default;
};

/// How the right-hand side is evaluated. Only Gauss's product formula needs
/// something other than theta series.
enum class RhsRoute { Series, GaussProduct };

struct Identity {
    std::string id;
    std::string label;  // equation label in the source collection
    std::vector<std::string> variables;  // in order of first appearance
    std::vector<Term> lhs;
    std::vector<Term> rhs;
    RhsRoute rhs_route = RhsRoute::Series;

    /// Compares the mathematical content only (sides, terms, factors, variables).
    bool structurally_equal(const Identity& other) const
    {
        return variables == other.variables && lhs == other.lhs && rhs == other.rhs;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& message);
    /// 1-based column in the input (counted in code points).
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

Identity parse_identity(std::string_view text);

std::string to_dsl(const Identity& identity);
std::string to_dsl(const ThetaFactor& factor, const std::vector<std::string>& variable_order);
std::string to_string(const Rational& value);

/// The identity as sum(lhs) - sum(rhs): a map from the sorted factor list of
/// each term (rendered as text) to its accumulated coefficient, zeros removed.
/// pi powers are folded into the key.
std::map<std::string, Rational> difference_terms(const Identity& identity);

/// True when the two identities have the same difference_terms up to an
/// overall sign, i.e. they state the same relation with sides or terms
/// rearranged.
bool equivalent(const Identity& a, const Identity& b);

/// Replaces each listed variable by a linear form in (possibly other)
/// variables; the variable list is rebuilt in order of first appearance.
Identity substitute(const Identity& identity, const std::map<std::string, LinearForm>& subs);

/// A copy with the sign of one right-hand-side term flipped; used as a
/// negative control.
Identity with_flipped_rhs_sign(const Identity& identity, std::size_t rhs_term = 0);

}  // namespace theta
