#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symforge/errors.hpp"

namespace symforge {

using Integer = mpz_class;

enum class AtomKind : std::uint8_t { feyn = 0, leg = 1, dot = 2, mass = 3 };

/// A polynomial variable: Feynman parameter x_i, leg variable z_j, scalar
/// product p_i.p_j (stored with i <= j) or squared mass m_i^2.
///
/// Atoms order by kind (feyn < leg < dot < mass), then by indices.
struct Atom {
    AtomKind kind = AtomKind::feyn;
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    static constexpr Atom feyn(std::uint32_t i) { return {AtomKind::feyn, i, 0}; }
    static constexpr Atom leg(std::uint32_t j) { return {AtomKind::leg, j, 0}; }
    static constexpr Atom dot(std::uint32_t i, std::uint32_t j)
    {
        return i <= j ? Atom{AtomKind::dot, i, j} : Atom{AtomKind::dot, j, i};
    }
    static constexpr Atom mass(std::uint32_t i) { return {AtomKind::mass, i, 0}; }

    bool is_feyn() const { return kind == AtomKind::feyn; }
    bool is_leg() const { return kind == AtomKind::leg; }

    std::string to_string() const;

    friend constexpr auto operator<=>(const Atom&, const Atom&) = default;
};

/// Product of atom powers. Factors are kept sorted by atom with positive
/// exponents, so equal monomials have equal representations.
class Monomial {
public:
    using Factor = std::pair<Atom, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Atom a, std::uint32_t power = 1);
    /// Sorts, merges repeated atoms and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    std::span<const Factor> factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t degree_in(AtomKind kind) const;
    std::uint32_t exponent(Atom a) const;

    /// Splits into (Feynman part, everything else).
    std::pair<Monomial, Monomial> split_feyn() const;

    /// Quotient if `divisor` divides this monomial.
    std::optional<Monomial> divide(const Monomial& divisor) const;

    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Structural order (not the canonical term order); for use as a set key.
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Canonical term order: graded lexicographic over the atom order, highest
/// term first. `operator()(a, b)` is true when `a` is printed before `b`.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No stored coefficient is zero; the zero polynomial has no
/// terms.
class Poly {
public:
    using Terms = std::map<Monomial, Integer, TermOrder>;

    Poly() = default;
    explicit Poly(long c);
    explicit Poly(const Integer& c);
    explicit Poly(Atom a);
    Poly(const Monomial& m, const Integer& c);
    explicit Poly(Terms terms);

    static Poly x(std::uint32_t i) { return Poly(Atom::feyn(i)); }
    static Poly z(std::uint32_t j) { return Poly(Atom::leg(j)); }
    static Poly sp(std::uint32_t i, std::uint32_t j) { return Poly(Atom::dot(i, j)); }
    static Poly msq(std::uint32_t i) { return Poly(Atom::mass(i)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Highest term in the canonical order. Requires a nonzero polynomial.
    const Terms::value_type& leading_term() const { return *terms_.begin(); }
    /// Largest total degree over all atoms; 0 for constants and for zero.
    std::uint32_t degree() const;

    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Integer& c, const Poly& p);
    friend Poly operator-(const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Canonical text: "2*x1*x2 - x3^2 + sp(1,2)*msq4", "0" for zero.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void add_term(const Monomial& m, const Integer& c);

    Terms terms_;
};

/// q with q*b == a; throws NotDivisible when b does not divide a exactly.
Poly exact_div(const Poly& a, const Poly& b);

/// Hook used by the templated determinant routines.
inline Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }

/// [w0, w1, ...] with w = sum(wk), wk homogeneous of degree k in the leg atoms.
std::vector<Poly> grade_by_leg_degree(const Poly& w);

/// x_1...x_n * p(1/x_1, ..., 1/x_n) over the given Feynman indices. Atoms of
/// other kinds ride along as coefficients.
Poly reciprocal_transform(const Poly& p, std::span<const std::uint32_t> vars);

bool is_multilinear(const Poly& p, std::span<const std::uint32_t> vars);
bool is_homogeneous(const Poly& p, std::span<const std::uint32_t> vars, std::uint32_t degree);

/// Feynman indices appearing anywhere in p, ascending.
std::vector<std::uint32_t> feyn_variables(const Poly& p);

/// Replaces every occurrence of `a` by `value`.
Poly substitute(const Poly& p, Atom a, const Poly& value);

/// Bijection on Feynman indices: x_i is renamed to x_{sigma[i]}.
using VariableMap = std::map<std::uint32_t, std::uint32_t>;

/// p with every x_i renamed to x_{sigma(i)}; indices missing from sigma stay.
Poly rename_variables(const Poly& p, const VariableMap& sigma);

/// Lexicographically least sigma with rename_variables(p, sigma) == q, if any.
std::optional<VariableMap> find_variable_isomorphism(const Poly& p, const Poly& q);

std::string to_string(const VariableMap& sigma);

}  // namespace symforge
