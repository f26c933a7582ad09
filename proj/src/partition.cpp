#include "snfpart/partition.hpp"

#include "snfpart/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace snfpart {

std::ostream& operator<<(std::ostream& os, const Cell& c)
{
    return os << '(' << c.row << ',' << c.col << ')';
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw NonPositive("partition part " + std::to_string(k + 1) + " is not positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw NotDecreasing("partition parts must be weakly decreasing: " + to_string());
    }
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int r) const noexcept
{
    if (r < 1 || r > length())
        return 0;
    return parts_[static_cast<std::size_t>(r - 1)];
}

int Partition::rank() const noexcept
{
    int k = 0;
    while (part(k + 1) >= k + 1)
        ++k;
    return k;
}

Partition Partition::conjugate() const
{
    std::vector<int> cols;
    if (!empty()) {
        cols.assign(static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c)
                ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

bool Partition::contains(Cell c) const noexcept
{
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
}

bool Partition::is_rectangle() const noexcept
{
    return !empty() && parts_.front() == parts_.back();
}

Partition Partition::region_from(Cell c) const
{
    std::vector<int> out;
    for (int r = std::max(c.row, 1); r <= length(); ++r) {
        const int len = part(r) - std::max(c.col, 1) + 1;
        if (len <= 0)
            break;
        out.push_back(len);
    }
    return Partition(std::move(out));
}

Partition Partition::subdiagram(Cell c) const
{
    if (!ExtendedDiagram(*this).contains(c)) {
        std::ostringstream msg;
        msg << "cell " << c << " is outside the extended diagram of " << *this;
        throw CellOutOfRange(msg.str());
    }
    return region_from(c);
}

std::vector<Cell> Partition::removable_corners() const
{
    if (empty())
        throw EmptyPartition("the empty partition has no removable corners");
    std::vector<Cell> out;
    for (int a = 1; a <= length(); ++a)
        if (part(a) > part(a + 1))
            out.push_back({a, part(a)});
    return out;
}

Partition Partition::without(Cell corner) const
{
    if (!contains(corner) || corner.col != part(corner.row) || part(corner.row + 1) >= corner.col) {
        std::ostringstream msg;
        msg << "cell " << corner << " is not a removable corner of " << *this;
        throw CellOutOfRange(msg.str());
    }
    std::vector<int> out = parts_;
    auto& p = out[static_cast<std::size_t>(corner.row - 1)];
    if (--p == 0)
        out.pop_back();
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(parts_[k]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '(' << p.to_string() << ')';
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return Partition();
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        if (!tok.empty() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (tok.empty() || ec != std::errc() || ptr != last)
            throw ParseError("not an integer part: '" + std::string(tok) + "'");
        if (value <= 0)
            throw NonPositive("partition part " + std::string(tok) + " is not positive");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

ExtendedDiagram::ExtendedDiagram(Partition base) : base_(std::move(base))
{
    const int len = base_.length();
    rows_.reserve(static_cast<std::size_t>(len + 1));
    rows_.push_back(base_.part(1) + 1);
    for (int r = 2; r <= len + 1; ++r)
        rows_.push_back(base_.part(r - 1) + 1);
    for (int r = 1; r <= rows(); ++r) {
        for (int s = 1; s <= row_length(r); ++s) {
            cells_.push_back({r, s});
            if (!base_.contains({r, s}))
                border_.push_back({r, s});
        }
    }
}

int ExtendedDiagram::row_length(int r) const noexcept
{
    if (r < 1 || r > rows())
        return 0;
    return rows_[static_cast<std::size_t>(r - 1)];
}

bool ExtendedDiagram::contains(Cell c) const noexcept
{
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

bool ExtendedDiagram::on_border(Cell c) const noexcept
{
    return contains(c) && !base_.contains(c);
}

ExtendedDiagram extended_cells(const Partition& p)
{
    return ExtendedDiagram(p);
}

namespace {

void contained_rec(const Partition& outer, std::vector<int>& prefix, int bound,
                   const std::function<void(const Partition&)>& visit)
{
    visit(Partition(prefix));
    const int row = static_cast<int>(prefix.size()) + 1;
    const int limit = std::min(bound, outer.part(row));
    for (int v = 1; v <= limit; ++v) {
        prefix.push_back(v);
        contained_rec(outer, prefix, v, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_contained(const Partition& p, const std::function<void(const Partition&)>& visit)
{
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(p.length()));
    contained_rec(p, prefix, p.part(1), visit);
}

std::vector<Partition> contained_partitions(const Partition& p)
{
    std::vector<Partition> out;
    for_each_contained(p, [&](const Partition& mu) { out.push_back(mu); });
    return out;
}

std::uint64_t count_contained_by_paths(const Partition& p)
{
    // Lattice points (y, x): y is the horizontal line below row y (0 = top edge),
    // x the vertical line right of column x. A path from (len, 0) to (0, lambda_1)
    // takes east steps freely and a north step across row y only at x <= lambda_y;
    // the column of that north step is mu_y.
    const int len = p.length();
    const int width = p.part(1);
    std::vector<std::vector<std::uint64_t>> ways(
        static_cast<std::size_t>(len + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(width + 1), 0));
    ways[static_cast<std::size_t>(len)][0] = 1;
    for (int y = len; y >= 0; --y) {
        auto& line = ways[static_cast<std::size_t>(y)];
        for (int x = 0; x <= width; ++x) {
            if (x > 0)
                line[static_cast<std::size_t>(x)] += line[static_cast<std::size_t>(x - 1)];
            if (y > 0 && x <= p.part(y))
                ways[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x)] += line[static_cast<std::size_t>(x)];
        }
    }
    return ways[0][static_cast<std::size_t>(width)];
}

namespace {

void partitions_rec(int remaining, int bound, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = std::min(remaining, bound); v >= 1; --v) {
        prefix.push_back(v);
        partitions_rec(remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

} // namespace snfpart
