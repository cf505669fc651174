#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tanrep/rational.hpp"

namespace tanrep {

// An X-power exponent that is affine in c: constant + slope * c.
struct Affine {
    Rational constant;
    Rational slope;

    static Affine of_c() { return {Rational(0), Rational(1)}; }
    Rational at(const Rational& c) const { return constant + slope * c; }
    // "(11+3c)/15" style, reduced over the common denominator.
    std::string str() const;

    friend Affine operator+(const Affine& a, const Affine& b) {
        return {a.constant + b.constant, a.slope + b.slope};
    }
    friend Affine operator-(const Affine& a, const Affine& b) {
        return {a.constant - b.constant, a.slope - b.slope};
    }
    friend Affine operator*(const Rational& k, const Affine& a) { return {k * a.constant, k * a.slope}; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

inline Affine constant(const Rational& r) { return {r, Rational(0)}; }

// Exponent of the Graham-Kolesnik bound F^(1/(4Q-2)) N^(1-(k+2)/(4Q-2)) + N/F
// with F = X^f_exp, N = X, Q = 2^k.
Rational gk_exponent(unsigned k, const Rational& f_exp);

// First term only, for F = X^f and N = X^n with affine exponents.
Affine gk_main_term(unsigned k, const Affine& f, const Affine& n);

// (11 + 3c) / 15.
Affine minor_arc_form();
Rational minor_arc_exponent(const Rational& c);

// ((4 - 3c) / 15, (2 - c) / 3): the cutoffs H and H0 as X-exponents.
std::pair<Rational, Rational> cutoffs(const Rational& c);

struct LedgerStep {
    std::string step;
    std::string expression;
    Affine value;
};

// The full chain from the cutoffs to the admissibility bound. Logarithms and
// epsilon factors are treated as exponent 0 throughout.
std::vector<LedgerStep> exponent_chain();

// Largest c for which the minor-arc contribution stays below the main term:
// solves (67 - 9c) / 30 < 3 - c exactly.
Rational admissible_c();

// c bound for lhs(c) < rhs(c); requires lhs - rhs to be increasing in c.
Rational solve_upper_bound(const Affine& lhs, const Affine& rhs);

// Table with header step,expression,value.
void write_chain_csv(std::ostream& os, const std::vector<LedgerStep>& chain);

}  // namespace tanrep
