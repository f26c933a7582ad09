#pragma once

#include "snfpart/partition.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace snfpart {

using Integer = mpz_class;

// Power of a single cell variable x_{row,col}.
struct Factor {
    Cell cell;
    std::uint32_t exponent = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/**
 * Product of cell variables. Factors are kept sorted by cell with positive
 * exponents; the empty product is the monomial 1.
 */
class Monomial {
public:
    Monomial() = default;
    // Accepts factors in any order; merges repeated cells and drops zero exponents.
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(Cell c) { return Monomial({Factor{c, 1}}); }
    // Product of the given cells, each to the first power.
    static Monomial product_of(const std::vector<Cell>& cells);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint64_t degree() const noexcept;
    std::uint32_t max_exponent() const noexcept;
    std::uint32_t exponent_of(Cell c) const noexcept;

    Monomial operator*(const Monomial& other) const;
    Monomial shifted(int drow, int dcol) const;
    Monomial transposed() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/**
 * Canonical term order: higher total degree first, then lexicographic with
 * x_{1,1} > x_{1,2} > ... > x_{2,1} > ... (row-major cell order).
 * Returns <0, 0, >0 as a sorts before, equal to, or after b.
 */
int compare_monomials(const Monomial& a, const Monomial& b) noexcept;

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        return compare_monomials(a, b) < 0;
    }
};

struct Term {
    Monomial monomial;
    Integer coeff;
};

/**
 * Element of Z[x_ij]. Terms are stored in canonical order with nonzero
 * coefficients, so structural equality is ring equality.
 */
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long value); // NOLINT(google-explicit-constructor)
    explicit Polynomial(const Integer& value);
    explicit Polynomial(Monomial m, Integer coeff = 1);

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(1L); }
    static Polynomial variable(Cell c) { return Polynomial(Monomial::variable(c)); }
    // Builds from arbitrary terms: combines duplicates and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    std::size_t term_count() const noexcept { return terms_.size(); }
    // True for a single term with coefficient 1.
    bool is_unit_monomial() const noexcept;
    std::uint64_t total_degree() const noexcept;
    std::uint32_t max_exponent() const noexcept;
    // Sum of coefficients (all variables set to 1).
    Integer evaluate_all_ones() const;
    Integer coefficient_of(const Monomial& m) const;

    // Sorted list of the cells whose variable occurs.
    std::vector<Cell> variables() const;

    Polynomial shifted(int drow, int dcol) const;
    // Swaps x_ij with x_ji.
    Polynomial transposed() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial& add_scaled(const Polynomial& other, int sign);
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial neg(const Polynomial& a);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, unsigned exponent);

/// Univariate polynomial in q, stored as coefficients of q^0, q^1, ... with no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coeffs);

    static UniPoly monomial(std::size_t degree, Integer coeff = 1);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t k) const;
    Integer evaluate(const Integer& q) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    // Ascending powers, e.g. "1+2q+q^2+q^3".
    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Maps every variable to q.
UniPoly substitute_uniform(const Polynomial& p);

// Embeds a univariate polynomial using the single variable at `at`.
Polynomial embed_univariate(const UniPoly& u, Cell at = {1, 1});

/**
 * Text names for cell variables. Letter naming reproduces the a, b, c, ...
 * row-major convention over the cells of a partition.
 */
class VariableNaming {
public:
    // Names cells "x11", "x12", ...; falls back to "x[12,3]" when an index exceeds 9.
    static VariableNaming coords();
    // Names the cells of `lambda` a, b, c, ... row-major. Throws NameCollision beyond 26 cells.
    static VariableNaming letters(const Partition& lambda);
    // Explicit table; cells missing from it have no name.
    static VariableNaming custom(std::map<Cell, std::string> table);
    std::string name(Cell c) const;

private:
    std::map<Cell, std::string> table_;
    bool use_table_ = false;
};

/**
 * Deterministic text form: terms in canonical order, joined with +/-,
 * unit coefficients omitted, powers as "e^2". The zero polynomial is "0".
 * Throws NameCollision if two distinct variables of p get the same name.
 */
std::string render(const Polynomial& p, const VariableNaming& naming = VariableNaming::coords());

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace snfpart
