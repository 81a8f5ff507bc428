#include "homcalc/chain_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homcalc {

const std::vector<std::string> ChainComplex::no_cells_{};
const std::vector<std::size_t> Subcomplex::no_selection_{};

ChainComplex::ChainComplex(std::string name,
                           std::vector<std::vector<std::string>> cells,
                           std::vector<IntegerMatrix> boundaries)
    : name_(std::move(name)), cells_(std::move(cells)) {
    boundaries_.resize(cells_.size());
    for (std::size_t n = 1; n < cells_.size(); ++n) {
        IntegerMatrix b = n < boundaries.size() ? std::move(boundaries[n])
                                                : IntegerMatrix(cells_[n - 1].size(), cells_[n].size());
        if (b.rows() != cells_[n - 1].size() || b.cols() != cells_[n].size())
            throw std::invalid_argument("ChainComplex: boundary shape mismatch at dimension " +
                                        std::to_string(n));
        boundaries_[n] = std::move(b);
    }
}

std::size_t ChainComplex::cell_count(int n) const {
    if (n < 0 || n > top_dim())
        return 0;
    return cells_[static_cast<std::size_t>(n)].size();
}

const std::vector<std::string>& ChainComplex::cell_names(int n) const {
    if (n < 0 || n > top_dim())
        return no_cells_;
    return cells_[static_cast<std::size_t>(n)];
}

IntegerMatrix ChainComplex::boundary(int n) const {
    if (n >= 1 && n <= top_dim())
        return boundaries_[static_cast<std::size_t>(n)];
    return IntegerMatrix(cell_count(n - 1), cell_count(n));
}

Int ChainComplex::euler_characteristic() const {
    Int chi = 0;
    for (int n = 0; n <= top_dim(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * Int(cell_count(n));
    return chi;
}

std::size_t ChainComplex::total_cells() const {
    std::size_t total = 0;
    for (int n = 0; n <= top_dim(); ++n)
        total += cell_count(n);
    return total;
}

std::optional<ComplexViolation> validate(const ChainComplex& c) {
    for (int n = 0; n <= c.top_dim(); ++n) {
        std::set<std::string> seen;
        for (const auto& name : c.cell_names(n))
            if (!seen.insert(name).second)
                return ComplexViolation{n, "duplicate cell name '" + name + "'"};
    }
    for (int n = 1; n < c.top_dim(); ++n) {
        const IntegerMatrix square = c.boundary(n) * c.boundary(n + 1);
        for (std::size_t i = 0; i < square.rows(); ++i)
            for (std::size_t j = 0; j < square.cols(); ++j)
                if (square.at(i, j) != 0)
                    return ComplexViolation{
                        n, "dd != 0: entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") of d_" + std::to_string(n) + " d_" + std::to_string(n + 1) +
                               " is " + square.at(i, j).get_str()};
    }
    return std::nullopt;
}

Subcomplex::Subcomplex(const ChainComplex& parent, std::vector<std::vector<std::size_t>> selected)
    : parent_(&parent), selected_(std::move(selected)) {
    selected_.resize(static_cast<std::size_t>(std::max(parent.top_dim() + 1, 0)));
    for (int n = 0; n <= parent.top_dim(); ++n) {
        auto& s = selected_[static_cast<std::size_t>(n)];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= parent.cell_count(n))
            throw std::out_of_range("Subcomplex: cell index out of range in dimension " +
                                    std::to_string(n));
    }
}

Subcomplex Subcomplex::empty(const ChainComplex& parent) {
    return Subcomplex(parent, {});
}

Subcomplex Subcomplex::full(const ChainComplex& parent) {
    return skeleton(parent, parent.top_dim());
}

Subcomplex Subcomplex::skeleton(const ChainComplex& parent, int max_dim) {
    std::vector<std::vector<std::size_t>> sel(static_cast<std::size_t>(std::max(parent.top_dim() + 1, 0)));
    for (int n = 0; n <= std::min(max_dim, parent.top_dim()); ++n) {
        sel[static_cast<std::size_t>(n)].resize(parent.cell_count(n));
        for (std::size_t i = 0; i < parent.cell_count(n); ++i)
            sel[static_cast<std::size_t>(n)][i] = i;
    }
    return Subcomplex(parent, std::move(sel));
}

const std::vector<std::size_t>& Subcomplex::selected(int n) const {
    if (!parent_ || n < 0 || n > parent_->top_dim())
        return no_selection_;
    return selected_[static_cast<std::size_t>(n)];
}

bool Subcomplex::contains(int n, std::size_t index) const {
    const auto& s = selected(n);
    return std::binary_search(s.begin(), s.end(), index);
}

bool Subcomplex::boundary_closed() const {
    if (!parent_)
        return true;
    for (int n = 1; n <= parent_->top_dim(); ++n) {
        const IntegerMatrix b = parent_->boundary(n);
        for (std::size_t idx : selected(n))
            for (std::size_t r = 0; r < b.rows(); ++r)
                if (b.at(r, idx) != 0 && !contains(n - 1, r))
                    return false;
    }
    return true;
}

Subcomplex Subcomplex::intersection(const Subcomplex& a, const Subcomplex& b) {
    if (&a.parent() != &b.parent())
        throw std::invalid_argument("Subcomplex::intersection: different parents");
    std::vector<std::vector<std::size_t>> sel(static_cast<std::size_t>(std::max(a.parent().top_dim() + 1, 0)));
    for (int n = 0; n <= a.parent().top_dim(); ++n)
        std::set_intersection(a.selected(n).begin(), a.selected(n).end(),
                              b.selected(n).begin(), b.selected(n).end(),
                              std::back_inserter(sel[static_cast<std::size_t>(n)]));
    return Subcomplex(a.parent(), std::move(sel));
}

bool Subcomplex::union_covers_parent(const Subcomplex& other) const {
    if (parent_ != other.parent_)
        return false;
    for (int n = 0; n <= parent_->top_dim(); ++n)
        for (std::size_t i = 0; i < parent_->cell_count(n); ++i)
            if (!contains(n, i) && !other.contains(n, i))
                return false;
    return true;
}

ChainComplex subcomplex_as_complex(const Subcomplex& a, const std::string& name) {
    const ChainComplex& parent = a.parent();
    int top = -1;
    for (int n = 0; n <= parent.top_dim(); ++n)
        if (!a.selected(n).empty())
            top = n;
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        for (std::size_t idx : a.selected(n))
            cells[static_cast<std::size_t>(n)].push_back(parent.cell_names(n)[idx]);
        if (n >= 1)
            boundaries[static_cast<std::size_t>(n)] =
                parent.boundary(n).select_rows(a.selected(n - 1)).select_columns(a.selected(n));
    }
    return ChainComplex(name.empty() ? parent.name() + "|sub" : name,
                        std::move(cells), std::move(boundaries));
}

namespace {

std::vector<std::size_t> complement_indices(std::size_t count, const std::vector<std::size_t>& in) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (next < in.size() && in[next] == i)
            ++next;
        else
            out.push_back(i);
    }
    return out;
}

} // namespace

ChainComplex relative_complex(const ChainComplex& c, const Subcomplex& a) {
    if (&a.parent() != &c)
        throw std::invalid_argument("relative_complex: subcomplex of a different complex");
    if (!a.boundary_closed())
        throw std::invalid_argument("relative_complex: subcomplex is not boundary-closed");

    std::vector<std::vector<std::size_t>> keep(static_cast<std::size_t>(std::max(c.top_dim() + 1, 0)));
    int top = -1;
    for (int n = 0; n <= c.top_dim(); ++n) {
        keep[static_cast<std::size_t>(n)] = complement_indices(c.cell_count(n), a.selected(n));
        if (!keep[static_cast<std::size_t>(n)].empty())
            top = n;
    }
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
        for (std::size_t idx : keep[static_cast<std::size_t>(n)])
            cells[static_cast<std::size_t>(n)].push_back(c.cell_names(n)[idx]);
        if (n >= 1)
            boundaries[static_cast<std::size_t>(n)] =
                c.boundary(n).select_rows(keep[static_cast<std::size_t>(n - 1)])
                             .select_columns(keep[static_cast<std::size_t>(n)]);
    }
    return ChainComplex(c.name() + "/" + "sub", std::move(cells), std::move(boundaries));
}

IntegerMatrix ChainMap::component(int n) const {
    if (n >= 0 && static_cast<std::size_t>(n) < components.size())
        return components[static_cast<std::size_t>(n)];
    return IntegerMatrix(target ? target->cell_count(n) : 0, source ? source->cell_count(n) : 0);
}

bool ChainMap::is_chain_map() const {
    if (!source || !target)
        return false;
    for (int n = 0; n <= source->top_dim(); ++n) {
        if (component(n).rows() != target->cell_count(n) ||
            component(n).cols() != source->cell_count(n))
            return false;
        if (n >= 1 && !(component(n - 1) * source->boundary(n) ==
                        target->boundary(n) * component(n)))
            return false;
    }
    return true;
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    ChainMap f;
    f.source = &c;
    f.target = &c;
    for (int n = 0; n <= c.top_dim(); ++n)
        f.components.push_back(IntegerMatrix::identity(c.cell_count(n)));
    return f;
}

ChainMap inclusion_map(const ChainComplex& as_complex, const Subcomplex& a) {
    ChainMap f;
    f.source = &as_complex;
    f.target = &a.parent();
    for (int n = 0; n <= as_complex.top_dim(); ++n) {
        IntegerMatrix m(a.parent().cell_count(n), a.selected(n).size());
        for (std::size_t j = 0; j < a.selected(n).size(); ++j)
            m.at(a.selected(n)[j], j) = 1;
        f.components.push_back(std::move(m));
    }
    return f;
}

ChainMap quotient_map(const ChainComplex& c, const Subcomplex& a, const ChainComplex& relative) {
    ChainMap f;
    f.source = &c;
    f.target = &relative;
    for (int n = 0; n <= c.top_dim(); ++n) {
        const auto keep = complement_indices(c.cell_count(n), a.selected(n));
        IntegerMatrix m(relative.cell_count(n), c.cell_count(n));
        for (std::size_t i = 0; i < keep.size(); ++i)
            m.at(i, keep[i]) = 1;
        f.components.push_back(std::move(m));
    }
    return f;
}

namespace {

// offsets[a] = flat index of the first product cell with left dimension a
// inside product dimension n.
std::vector<std::size_t> tensor_offsets(const ChainComplex& c, const ChainComplex& d, int n) {
    std::vector<std::size_t> offsets;
    std::size_t acc = 0;
    for (int a = 0; a <= n; ++a) {
        offsets.push_back(acc);
        acc += c.cell_count(a) * d.cell_count(n - a);
    }
    offsets.push_back(acc);
    return offsets;
}

} // namespace

std::size_t tensor_cell_index(const ChainComplex& c, const ChainComplex& d,
                              int n, int left_dim, std::size_t i, std::size_t j) {
    const auto offsets = tensor_offsets(c, d, n);
    return offsets[static_cast<std::size_t>(left_dim)] + i * d.cell_count(n - left_dim) + j;
}

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d) {
    const int top = c.top_dim() + d.top_dim();
    if (c.top_dim() < 0 || d.top_dim() < 0)
        return ChainComplex(c.name() + " x " + d.name(), {}, {});

    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        for (int a = std::max(0, n - d.top_dim()); a <= std::min(n, c.top_dim()); ++a)
            for (const auto& lname : c.cell_names(a))
                for (const auto& rname : d.cell_names(n - a))
                    cells[static_cast<std::size_t>(n)].push_back("(" + lname + "|" + rname + ")");

    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (int n = 1; n <= top; ++n) {
        IntegerMatrix b(cells[static_cast<std::size_t>(n - 1)].size(),
                        cells[static_cast<std::size_t>(n)].size());
        for (int a = 0; a <= n; ++a) {
            const std::size_t lc = c.cell_count(a), rc = d.cell_count(n - a);
            if (lc == 0 || rc == 0)
                continue;
            const IntegerMatrix bl = c.boundary(a);
            const IntegerMatrix br = d.boundary(n - a);
            const Int sign = a % 2 == 0 ? 1 : -1;
            for (std::size_t i = 0; i < lc; ++i)
                for (std::size_t j = 0; j < rc; ++j) {
                    const std::size_t col = tensor_cell_index(c, d, n, a, i, j);
                    for (std::size_t r = 0; r < bl.rows(); ++r)
                        if (bl.at(r, i) != 0)
                            b.at(tensor_cell_index(c, d, n - 1, a - 1, r, j), col) += bl.at(r, i);
                    for (std::size_t s = 0; s < br.rows(); ++s)
                        if (br.at(s, j) != 0)
                            b.at(tensor_cell_index(c, d, n - 1, a, i, s), col) += sign * br.at(s, j);
                }
        }
        boundaries[static_cast<std::size_t>(n)] = std::move(b);
    }
    return ChainComplex(c.name() + " x " + d.name(), std::move(cells), std::move(boundaries));
}

std::vector<Int> tensor_chain(const ChainComplex& c, const ChainComplex& d,
                              int deg_left, std::span<const Int> left,
                              int deg_right, std::span<const Int> right) {
    if (left.size() != c.cell_count(deg_left) || right.size() != d.cell_count(deg_right))
        throw std::invalid_argument("tensor_chain: chain length mismatch");
    const int n = deg_left + deg_right;
    const auto offsets = tensor_offsets(c, d, n);
    std::vector<Int> out(offsets.back());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (left[i] != 0 && right[j] != 0)
                out[tensor_cell_index(c, d, n, deg_left, i, j)] = left[i] * right[j];
    return out;
}

} // namespace homcalc
