#include "snfpart/polynomial.hpp"

#include "snfpart/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace snfpart {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.cell < b.cell; });
    for (const Factor& f : factors) {
        if (f.exponent == 0)
            continue;
        if (!factors_.empty() && factors_.back().cell == f.cell)
            factors_.back().exponent += f.exponent;
        else
            factors_.push_back(f);
    }
}

Monomial Monomial::product_of(const std::vector<Cell>& cells)
{
    std::vector<Factor> fs;
    fs.reserve(cells.size());
    for (const Cell& c : cells)
        fs.push_back({c, 1});
    return Monomial(std::move(fs));
}

std::uint64_t Monomial::degree() const noexcept
{
    std::uint64_t d = 0;
    for (const Factor& f : factors_)
        d += f.exponent;
    return d;
}

std::uint32_t Monomial::max_exponent() const noexcept
{
    std::uint32_t e = 0;
    for (const Factor& f : factors_)
        e = std::max(e, f.exponent);
    return e;
}

std::uint32_t Monomial::exponent_of(Cell c) const noexcept
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), c,
                               [](const Factor& f, const Cell& x) { return f.cell < x; });
    return (it != factors_.end() && it->cell == c) ? it->exponent : 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->cell < b->cell)
            out.factors_.push_back(*a++);
        else if (b->cell < a->cell)
            out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->cell, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

Monomial Monomial::shifted(int drow, int dcol) const
{
    Monomial out = *this;
    for (Factor& f : out.factors_) {
        f.cell.row += drow;
        f.cell.col += dcol;
    }
    return out;
}

Monomial Monomial::transposed() const
{
    std::vector<Factor> fs = factors_;
    for (Factor& f : fs)
        f.cell = f.cell.transposed();
    return Monomial(std::move(fs));
}

int compare_monomials(const Monomial& a, const Monomial& b) noexcept
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db)
        return da > db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (fa[k].cell != fb[k].cell)
            return fa[k].cell < fb[k].cell ? -1 : 1;
        if (fa[k].exponent != fb[k].exponent)
            return fa[k].exponent > fb[k].exponent ? -1 : 1;
    }
    if (fa.size() == fb.size())
        return 0;
    return fa.size() > fb.size() ? -1 : 1;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long value)
{
    if (value != 0)
        terms_.push_back({Monomial(), Integer(value)});
}

Polynomial::Polynomial(const Integer& value)
{
    if (value != 0)
        terms_.push_back({Monomial(), value});
}

Polynomial::Polynomial(Monomial m, Integer coeff)
{
    if (coeff != 0)
        terms_.push_back({std::move(m), std::move(coeff)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return compare_monomials(x.monomial, y.monomial) < 0;
    });
    Polynomial out;
    out.terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff == 0)
                out.terms_.pop_back();
        } else if (t.coeff != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

bool Polynomial::is_one() const noexcept
{
    return terms_.size() == 1 && terms_.front().monomial.is_one() && terms_.front().coeff == 1;
}

bool Polynomial::is_unit_monomial() const noexcept
{
    return terms_.size() == 1 && terms_.front().coeff == 1;
}

std::uint64_t Polynomial::total_degree() const noexcept
{
    // Canonical order puts a term of maximal degree first.
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

std::uint32_t Polynomial::max_exponent() const noexcept
{
    std::uint32_t e = 0;
    for (const Term& t : terms_)
        e = std::max(e, t.monomial.max_exponent());
    return e;
}

Integer Polynomial::evaluate_all_ones() const
{
    Integer sum = 0;
    for (const Term& t : terms_)
        sum += t.coeff;
    return sum;
}

Integer Polynomial::coefficient_of(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
        return compare_monomials(t.monomial, x) < 0;
    });
    if (it != terms_.end() && it->monomial == m)
        return it->coeff;
    return 0;
}

std::vector<Cell> Polynomial::variables() const
{
    std::set<Cell> cells;
    for (const Term& t : terms_)
        for (const Factor& f : t.monomial.factors())
            cells.insert(f.cell);
    return {cells.begin(), cells.end()};
}

Polynomial Polynomial::shifted(int drow, int dcol) const
{
    if (drow == 0 && dcol == 0)
        return *this;
    // A translation of cells keeps both the factor order and the term order.
    Polynomial out = *this;
    for (Term& t : out.terms_)
        t.monomial = t.monomial.shifted(drow, dcol);
    return out;
}

Polynomial Polynomial::transposed() const
{
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_)
        ts.push_back({t.monomial.transposed(), t.coeff});
    return from_terms(std::move(ts));
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (Term& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, int sign)
{
    if (other.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        int cmp;
        if (a == terms_.end())
            cmp = 1;
        else if (b == other.terms_.end())
            cmp = -1;
        else
            cmp = compare_monomials(a->monomial, b->monomial);
        if (cmp < 0) {
            merged.push_back(std::move(*a++));
        } else if (cmp > 0) {
            merged.push_back({b->monomial, sign > 0 ? b->coeff : Integer(-b->coeff)});
            ++b;
        } else {
            Integer c = a->coeff;
            if (sign > 0)
                c += b->coeff;
            else
                c -= b->coeff;
            if (c != 0)
                merged.push_back({std::move(a->monomial), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (this == &other)
        return *this = other * Polynomial(2L);
    return add_scaled(other, 1);
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (this == &other)
        return *this = Polynomial();
    return add_scaled(other, -1);
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    return *this = *this * other;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const Polynomial& large = &small == &a ? b : a;
    if (small.terms_.size() == 1) {
        // Multiplying by one term preserves the term order.
        const Term& s = small.terms_.front();
        Polynomial out;
        out.terms_.reserve(large.terms_.size());
        for (const Term& t : large.terms_)
            out.terms_.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
        return out;
    }
    std::vector<Term> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& x : a.terms_)
        for (const Term& y : b.terms_)
            prods.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
    return Polynomial::from_terms(std::move(prods));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].monomial == b.terms_[k].monomial))
            return false;
    return true;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial sub(const Polynomial& a, const Polynomial& b) { return a - b; }
Polynomial neg(const Polynomial& a) { return -a; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& base, unsigned exponent)
{
    Polynomial result = Polynomial::one();
    Polynomial sq = base;
    while (exponent) {
        if (exponent & 1U)
            result *= sq;
        exponent >>= 1U;
        if (exponent)
            sq *= sq;
    }
    return result;
}

// ----------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::monomial(std::size_t degree, Integer coeff)
{
    std::vector<Integer> c(degree + 1, Integer(0));
    c[degree] = std::move(coeff);
    return UniPoly(std::move(c));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer UniPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer UniPoly::evaluate(const Integer& q) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + *it;
    return acc;
}

UniPoly UniPoly::operator-() const
{
    UniPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

namespace {

void append_signed_coefficient(std::string& out, const Integer& coeff, bool first, bool constant)
{
    const bool negative = coeff < 0;
    const Integer mag = abs(coeff);
    if (negative)
        out += '-';
    else if (!first)
        out += '+';
    if (constant || mag != 1)
        out += mag.get_str();
}

} // namespace

std::string UniPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        append_signed_coefficient(out, coeffs_[k], first, k == 0);
        if (k > 0) {
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

UniPoly substitute_uniform(const Polynomial& p)
{
    std::vector<Integer> c(p.total_degree() + 1, Integer(0));
    for (const Term& t : p.terms())
        c[t.monomial.degree()] += t.coeff;
    return UniPoly(std::move(c));
}

Polynomial embed_univariate(const UniPoly& u, Cell at)
{
    std::vector<Term> ts;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k)
        if (u.coeffs()[k] != 0)
            ts.push_back({Monomial({Factor{at, static_cast<std::uint32_t>(k)}}), u.coeffs()[k]});
    return Polynomial::from_terms(std::move(ts));
}

// ------------------------------------------------------------------ Naming

VariableNaming VariableNaming::coords()
{
    return {};
}

VariableNaming VariableNaming::letters(const Partition& lambda)
{
    if (lambda.size() > 26)
        throw NameCollision("letter naming supports at most 26 cells, partition has " +
                            std::to_string(lambda.size()));
    VariableNaming n;
    n.use_table_ = true;
    char next = 'a';
    for (int r = 1; r <= lambda.length(); ++r)
        for (int s = 1; s <= lambda.part(r); ++s)
            n.table_[{r, s}] = std::string(1, next++);
    return n;
}

VariableNaming VariableNaming::custom(std::map<Cell, std::string> table)
{
    VariableNaming n;
    n.use_table_ = true;
    n.table_ = std::move(table);
    return n;
}

std::string VariableNaming::name(Cell c) const
{
    if (use_table_) {
        auto it = table_.find(c);
        if (it == table_.end()) {
            std::ostringstream msg;
            msg << "no variable name for cell " << c;
            throw NameCollision(msg.str());
        }
        return it->second;
    }
    if (c.row <= 9 && c.col <= 9)
        return "x" + std::to_string(c.row) + std::to_string(c.col);
    return "x[" + std::to_string(c.row) + "," + std::to_string(c.col) + "]";
}

std::string render(const Polynomial& p, const VariableNaming& naming)
{
    if (p.is_zero())
        return "0";
    std::map<Cell, std::string> names;
    std::map<std::string, Cell> owners;
    for (const Cell& c : p.variables()) {
        std::string nm = naming.name(c);
        auto [it, fresh] = owners.emplace(nm, c);
        if (!fresh && it->second != c) {
            std::ostringstream msg;
            msg << "variables " << it->second << " and " << c << " share the name '" << nm << "'";
            throw NameCollision(msg.str());
        }
        names.emplace(c, std::move(nm));
    }
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        append_signed_coefficient(out, t.coeff, first, t.monomial.is_one());
        for (const Factor& f : t.monomial.factors()) {
            out += names.at(f.cell);
            if (f.exponent > 1)
                out += "^" + std::to_string(f.exponent);
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << render(p);
}

} // namespace snfpart
