#include "tanrep/exponents.hpp"

#include <boost/integer/common_factor.hpp>
#include <ostream>
#include <sstream>

#include "tanrep/errors.hpp"

namespace tanrep {

std::string Affine::str() const {
    using Integer = Rational::Integer;
    const Integer den = boost::integer::lcm(constant.denominator(), slope.denominator());
    const Integer a = constant.numerator() * (den / constant.denominator());
    const Integer b = slope.numerator() * (den / slope.denominator());
    std::ostringstream os;
    if (b == 0) {
        os << Rational(a, den);
        return os.str();
    }
    std::string body;
    if (a != 0) body += a.str();
    if (b < 0)
        body += "-";
    else if (a != 0)
        body += "+";
    const Integer mag = b < 0 ? Integer(-b) : b;
    if (mag != 1) body += mag.str();
    body += "c";
    if (den == 1) return body;
    return "(" + body + ")/" + den.str();
}

Rational gk_exponent(unsigned k, const Rational& f_exp) {
    const Affine first = gk_main_term(k, constant(f_exp), constant(Rational(1)));
    return max(first.constant, Rational(1) - f_exp);
}

Affine gk_main_term(unsigned k, const Affine& f, const Affine& n) {
    if (k > 8) throw Error(ErrorKind::InvalidParameter, "gk_exponent supports k <= 8");
    const std::int64_t q = std::int64_t{1} << k;
    const Rational denom(4 * q - 2);
    const Rational f_pow = Rational(1) / denom;
    const Rational n_pow = Rational(1) - Rational(static_cast<std::int64_t>(k) + 2) / denom;
    return f_pow * f + n_pow * n;
}

Affine minor_arc_form() { return {Rational(11, 15), Rational(3, 15)}; }

Rational minor_arc_exponent(const Rational& c) {
    if (c < Rational(1) || c >= Rational(2))
        throw Error(ErrorKind::InvalidParameter, "minor_arc_exponent needs 1 <= c < 2");
    return minor_arc_form().at(c);
}

namespace {

Affine h_cutoff() { return {Rational(4, 15), Rational(-3, 15)}; }
Affine h0_cutoff() { return {Rational(2, 3), Rational(-1, 3)}; }

}  // namespace

std::pair<Rational, Rational> cutoffs(const Rational& c) {
    if (c < Rational(1) || c >= Rational(4, 3))
        throw Error(ErrorKind::InvalidParameter, "cutoffs need 1 <= c < 4/3");
    return {h_cutoff().at(c), h0_cutoff().at(c)};
}

Rational solve_upper_bound(const Affine& lhs, const Affine& rhs) {
    const Affine diff = lhs - rhs;
    if (diff.slope <= Rational(0))
        throw Error(ErrorKind::InvalidParameter, "inequality is not an upper bound on c");
    return -diff.constant / diff.slope;
}

namespace {

// Asserts a <= b at both ends of [lo, hi]; affine forms need nothing more.
void require_dominated(const Affine& a, const Affine& b, const Rational& lo, const Rational& hi,
                       const std::string& what) {
    if (a.at(lo) > b.at(lo) || a.at(hi) > b.at(hi))
        throw Error(ErrorKind::DomainError, "exponent chain broken: " + what);
}

struct ChainValues {
    std::vector<LedgerStep> steps;
    Rational bound;
};

ChainValues build_chain() {
    const Affine c = Affine::of_c();
    const Affine one = constant(Rational(1));
    const Affine h = h_cutoff();
    const Affine h0 = h0_cutoff();
    std::vector<LedgerStep> st;
    auto add = [&](std::string name, std::string expr, Affine v) {
        st.push_back({std::move(name), std::move(expr), v});
        return v;
    };

    add("cutoff_H", "(4-3c)/15", h);

    // Minor-arc components of S(alpha).
    const Affine tail = add("expansion_tail", "1 - H", one - h);
    const Affine vdc = add("vdc_k0_sum", "GK(k=0, F=H+c, N=1)", gk_main_term(0, h + c, one));
    const Affine l_type1 = constant(Rational(22, 45));
    const Affine m_type1 = one - l_type1;
    const Affine type1 = add("type_I", "M + GK(k=1, F=H+c, N=L), L=22/45",
                             m_type1 + gk_main_term(1, h + c, l_type1));
    const Affine q_exp = constant(Rational(8, 15)) - Rational(6, 15) * c;
    const Affine type2_diag = add("type_II_diagonal", "(2 - Q)/2, Q=(8-6c)/15",
                                  Rational(1, 2) * (constant(Rational(2)) - q_exp));
    const Affine l_type2 = constant(Rational(1, 3));
    const Affine type2_off = add("type_II_offdiagonal", "(1 + L + GK(k=0, F=H+c, N=M))/2, L=1/3",
                                 Rational(1, 2) * (one + l_type2 + gk_main_term(0, h + c, one - l_type2)));
    const Affine minor = add("minor_arc", "max(tail, vdc, type_I, type_II)", minor_arc_form());

    // A(alpha) bound.
    add("cutoff_H0", "(2-c)/3", h0);
    const Affine a_tail = one - h0;
    const Affine a_vdc = gk_main_term(0, h0 + c, one);
    const Affine a_bound = add("A_bound", "max(1 - H0, GK(k=0, F=H0+c, N=1))", Rational(1, 3) * (one + c));

    // Integral of |S|^2 |A| over the minor arcs.
    const Affine term1 = add("int_S2A_sup", "1 - c + 2 minor_arc", one - c + Rational(2) * minor);
    const Affine term2 = add("int_S2A_mean", "A_bound + 1", a_bound + one);
    const Affine int_s2a = add("int_S2A", "max(int_S2A_sup, int_S2A_mean)", term1);

    const Affine gamma2_sq = add("gamma2_squared", "1 + 1 + int_S2A", one + one + int_s2a);
    const Affine gamma2 = add("gamma2", "gamma2_squared / 2", Rational(1, 2) * gamma2_sq);
    const Affine target = add("main_error", "3 - c", constant(Rational(3)) - c);

    const Rational bound = solve_upper_bound(gamma2, target);
    add("admissible_c", "gamma2 < main_error", constant(bound));

    // Every max() above must be attained by the claimed branch on [1, bound].
    const Rational lo(1);
    require_dominated(tail, minor, lo, bound, "expansion_tail");
    require_dominated(vdc, minor, lo, bound, "vdc_k0_sum");
    require_dominated(type1, minor, lo, bound, "type_I");
    require_dominated(type2_diag, minor, lo, bound, "type_II_diagonal");
    require_dominated(type2_off, minor, lo, bound, "type_II_offdiagonal");
    if (!(tail == minor)) throw Error(ErrorKind::DomainError, "minor arc exponent not attained");
    require_dominated(a_tail, a_bound, lo, bound, "A tail");
    require_dominated(a_vdc, a_bound, lo, bound, "A vdc");
    require_dominated(term2, term1, lo, bound, "int_S2A_mean");
    return {std::move(st), bound};
}

}  // namespace

std::vector<LedgerStep> exponent_chain() { return build_chain().steps; }

Rational admissible_c() { return build_chain().bound; }

void write_chain_csv(std::ostream& os, const std::vector<LedgerStep>& chain) {
    os << "step,expression,value\n";
    for (const auto& s : chain) os << s.step << ",\"" << s.expression << "\"," << s.value.str() << '\n';
}

}  // namespace tanrep
