#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcalc/integer_matrix.hpp"

namespace homcalc {

/// Cellular chain complex: ordered cell names per dimension and integer
/// boundary matrices d_n of shape |cells_{n-1}| x |cells_n|. Complexes are
/// stored integrally; coefficients are a parameter of homology operations.
/// Orientation conventions live entirely in the matrix signs supplied at
/// construction. Immutable after construction.
class ChainComplex {
public:
    ChainComplex() = default;
    /// boundaries[n] is d_n for n >= 1; boundaries[0] is ignored and may be
    /// defaulted. Shape mismatches throw std::invalid_argument; the deeper
    /// dd = 0 and name-uniqueness checks live in validate().
    ChainComplex(std::string name,
                 std::vector<std::vector<std::string>> cells,
                 std::vector<IntegerMatrix> boundaries);

    const std::string& name() const { return name_; }
    /// -1 for the empty complex.
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cell_count(int n) const;
    const std::vector<std::string>& cell_names(int n) const;
    /// d_n with correct (possibly empty) shape for any n, including n <= 0
    /// and n > top_dim.
    IntegerMatrix boundary(int n) const;

    Int euler_characteristic() const;
    std::size_t total_cells() const;

private:
    std::string name_;
    std::vector<std::vector<std::string>> cells_;
    std::vector<IntegerMatrix> boundaries_; // index n >= 1
    static const std::vector<std::string> no_cells_;
};

struct ComplexViolation {
    int dimension = 0;
    std::string message;
};

/// nullopt when every invariant holds; otherwise the first failing dimension
/// (dd = 0 failures are reported at the lower index n of d_n d_{n+1}).
std::optional<ComplexViolation> validate(const ChainComplex& c);

/// Per-dimension cell-index selection in a parent complex.
class Subcomplex {
public:
    Subcomplex() = default;
    Subcomplex(const ChainComplex& parent, std::vector<std::vector<std::size_t>> selected);

    static Subcomplex empty(const ChainComplex& parent);
    static Subcomplex full(const ChainComplex& parent);
    static Subcomplex skeleton(const ChainComplex& parent, int max_dim);

    const ChainComplex& parent() const { return *parent_; }
    const std::vector<std::size_t>& selected(int n) const;
    bool contains(int n, std::size_t index) const;
    std::size_t cell_count(int n) const { return selected(n).size(); }

    /// Closed under the boundary operator of the parent.
    bool boundary_closed() const;

    static Subcomplex intersection(const Subcomplex& a, const Subcomplex& b);
    bool union_covers_parent(const Subcomplex& other) const;

private:
    const ChainComplex* parent_ = nullptr;
    std::vector<std::vector<std::size_t>> selected_; // sorted per dimension
    static const std::vector<std::size_t> no_selection_;
};

/// The subcomplex as a standalone complex (cells in parent order).
ChainComplex subcomplex_as_complex(const Subcomplex& a, const std::string& name = {});

/// Quotient complex computing relative homology: cells of c minus cells of a,
/// boundaries with the a-rows and a-columns deleted. Throws
/// std::invalid_argument when a is not boundary-closed.
ChainComplex relative_complex(const ChainComplex& c, const Subcomplex& a);

/// Degreewise map of complexes. components[n] has shape
/// |target_n| x |source_n|; missing trailing dimensions are zero maps.
struct ChainMap {
    const ChainComplex* source = nullptr;
    const ChainComplex* target = nullptr;
    std::vector<IntegerMatrix> components;

    IntegerMatrix component(int n) const;
    /// f_{n-1} d_n^src = d_n^tgt f_n for every n.
    bool is_chain_map() const;

    static ChainMap identity(const ChainComplex& c);
};

/// Inclusion of subcomplex_as_complex(a) into the parent.
ChainMap inclusion_map(const ChainComplex& as_complex, const Subcomplex& a);
/// Projection of the parent onto relative_complex(parent, a).
ChainMap quotient_map(const ChainComplex& c, const Subcomplex& a,
                      const ChainComplex& relative);

/// Tensor product complex. Cells of dimension n are pairs (c_i, d_j) with
/// dim c_i + dim d_j = n, ordered by (left dimension, left index, right
/// index); the differential carries the Koszul sign
/// d(c (x) d) = dc (x) d + (-1)^{dim c} c (x) dd.
ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);

/// Flat index of the product cell (left dim a, left index i, right index j)
/// inside dimension n = a + (dim of right factor cell) of tensor_complex.
std::size_t tensor_cell_index(const ChainComplex& c, const ChainComplex& d,
                              int n, int left_dim, std::size_t i, std::size_t j);

/// Chain-level tensor of two chains, as a vector over the product cells of
/// dimension deg_left + deg_right.
std::vector<Int> tensor_chain(const ChainComplex& c, const ChainComplex& d,
                              int deg_left, std::span<const Int> left,
                              int deg_right, std::span<const Int> right);

} // namespace homcalc
