#include "snfpart/weights.hpp"

#include "snfpart/errors.hpp"

#include <sstream>

namespace snfpart {

namespace {

void require_extended(const Partition& lambda, Cell c)
{
    if (!ExtendedDiagram(lambda).contains(c)) {
        std::ostringstream msg;
        msg << "cell " << c << " is outside the extended diagram of " << lambda;
        throw CellOutOfRange(msg.str());
    }
}

// Sum over mu inside `shape` of the monomial on shape \ mu, local coordinates.
Polynomial enumerate_weight(const Partition& shape)
{
    std::vector<Term> terms;
    for_each_contained(shape, [&](const Partition& mu) {
        std::vector<Factor> fs;
        fs.reserve(static_cast<std::size_t>(shape.size() - mu.size()));
        for (int r = 1; r <= shape.length(); ++r)
            for (int s = mu.part(r) + 1; s <= shape.part(r); ++s)
                fs.push_back({{r, s}, 1});
        terms.push_back({Monomial(std::move(fs)), 1});
    });
    return Polynomial::from_terms(std::move(terms));
}

} // namespace

const Polynomial& WeightGenerator::local_weight(const Partition& shape)
{
    auto it = memo_.find(shape.parts());
    if (it == memo_.end())
        it = memo_.emplace(shape.parts(), enumerate_weight(shape)).first;
    return it->second;
}

Polynomial WeightGenerator::weight_unchecked(const Partition& lambda, Cell c)
{
    const Partition region = lambda.region_from(c);
    if (region.empty())
        return Polynomial::one();
    return local_weight(region).shifted(c.row - 1, c.col - 1);
}

Polynomial WeightGenerator::weight(const Partition& lambda, Cell c)
{
    require_extended(lambda, c);
    return weight_unchecked(lambda, c);
}

PolyMatrix WeightGenerator::square_matrix(const Partition& lambda, Cell c)
{
    const ExtendedDiagram ext(lambda);
    if (!ext.contains(c)) {
        std::ostringstream msg;
        msg << "cell " << c << " is outside the extended diagram of " << lambda;
        throw CellOutOfRange(msg.str());
    }
    const auto m = static_cast<std::size_t>(lambda.region_from(c).rank() + 1);
    const Cell corner{c.row + static_cast<int>(m) - 1, c.col + static_cast<int>(m) - 1};
    if (!ext.on_border(corner)) {
        std::ostringstream msg;
        msg << "square at " << c << " of side " << m << " has corner " << corner
            << " off the border strip of " << lambda;
        throw InternalGeometryError(msg.str());
    }
    PolyMatrix out(m, m, c);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            out(u, v) = weight_unchecked(lambda, out.cell_at(u, v));
    return out;
}

PolyMatrix WeightGenerator::rect_matrix(const Partition& lambda, int d, int e)
{
    if (d < 1 || e < 1 || !ExtendedDiagram(lambda).on_border({d, e})) {
        std::ostringstream msg;
        msg << "rectangle corner (" << d << ',' << e << ") is not on the border strip of " << lambda;
        throw CornerNotOnBorder(msg.str());
    }
    PolyMatrix out(static_cast<std::size_t>(d), static_cast<std::size_t>(e), {1, 1});
    for (std::size_t u = 0; u < out.rows(); ++u)
        for (std::size_t v = 0; v < out.cols(); ++v)
            out(u, v) = weight_unchecked(lambda, out.cell_at(u, v));
    return out;
}

Polynomial weight_polynomial(const Partition& lambda, Cell c)
{
    WeightGenerator gen;
    return gen.weight(lambda, c);
}

Polynomial weight_polynomial_direct(const Partition& lambda, Cell c)
{
    require_extended(lambda, c);
    const Partition region = lambda.region_from(c);
    std::vector<Term> terms;
    for_each_contained(region, [&](const Partition& mu) {
        std::vector<Cell> cells;
        for (int r = 1; r <= region.length(); ++r)
            for (int s = mu.part(r) + 1; s <= region.part(r); ++s)
                cells.push_back({c.row + r - 1, c.col + s - 1});
        terms.push_back({Monomial::product_of(cells), 1});
    });
    return Polynomial::from_terms(std::move(terms));
}

Polynomial leading_monomial_A(const Partition& lambda, Cell c)
{
    require_extended(lambda, c);
    std::vector<Cell> cells;
    for (int r = c.row; r <= lambda.length(); ++r)
        for (int s = c.col; s <= lambda.part(r); ++s)
            cells.push_back({r, s});
    return Polynomial(Monomial::product_of(cells));
}

PolyMatrix square_matrix(const Partition& lambda, Cell c)
{
    WeightGenerator gen;
    return gen.square_matrix(lambda, c);
}

PolyMatrix rect_weight_matrix(const Partition& lambda, int d, int e)
{
    WeightGenerator gen;
    return gen.rect_matrix(lambda, d, e);
}

} // namespace snfpart
