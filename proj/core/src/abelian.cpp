#include "homcalc/abelian.hpp"

#include <stdexcept>

namespace homcalc {

IntegerMatrix relation_matrix(std::span<const Int> orders) {
    std::size_t finite = 0;
    for (const Int& d : orders)
        if (d != 0)
            ++finite;
    IntegerMatrix rel(orders.size(), finite);
    std::size_t col = 0;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0)
            rel.at(i, col++) = orders[i];
    return rel;
}

IntegerMatrix relation_matrix(const GroupPresentation& g) {
    return relation_matrix(g.orders());
}

bool represents_zero(std::span<const Int> orders, std::span<const Int> v) {
    if (v.size() != orders.size())
        throw std::invalid_argument("represents_zero: coordinate length mismatch");
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) {
            if (v[i] != 0)
                return false;
        } else if (v[i] % orders[i] != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> reduce_coordinates(std::span<const Int> orders, std::span<const Int> v) {
    if (v.size() != orders.size())
        throw std::invalid_argument("reduce_coordinates: coordinate length mismatch");
    std::vector<Int> out(v.begin(), v.end());
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i] != 0)
            out[i] = reduce_mod(out[i], orders[i]);
    return out;
}

std::vector<Int> reduce_coordinates(const GroupPresentation& g, std::span<const Int> v) {
    return reduce_coordinates(g.orders(), v);
}

GroupHom::GroupHom(std::vector<Int> source, std::vector<Int> target, IntegerMatrix m)
    : source_orders(std::move(source)), target_orders(std::move(target)), matrix(std::move(m)) {
    if (matrix.rows() != target_orders.size() || matrix.cols() != source_orders.size())
        throw std::invalid_argument("GroupHom: matrix shape does not match summand counts");
}

GroupHom::GroupHom(const GroupPresentation& source, const GroupPresentation& target,
                   IntegerMatrix m)
    : GroupHom(source.orders(), target.orders(), std::move(m)) {}

GroupHom GroupHom::zero(const GroupPresentation& source, const GroupPresentation& target) {
    return {source, target, IntegerMatrix::zero(target.summands(), source.summands())};
}

namespace {

IntegerMatrix reduce_matrix_rows(std::span<const Int> orders, IntegerMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (orders[i] != 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = reduce_mod(m.at(i, j), orders[i]);
    return m;
}

} // namespace

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (f.target_orders != g.source_orders)
        throw std::invalid_argument("compose: middle groups differ");
    return {f.source_orders, g.target_orders,
            reduce_matrix_rows(g.target_orders, g.matrix * f.matrix)};
}

bool homs_equal(const GroupHom& a, const GroupHom& b) {
    if (a.source_orders != b.source_orders || a.target_orders != b.target_orders)
        return false;
    for (std::size_t i = 0; i < a.matrix.rows(); ++i)
        for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
            const Int diff = a.matrix.at(i, j) - b.matrix.at(i, j);
            if (a.target_orders[i] == 0 ? diff != 0 : diff % a.target_orders[i] != 0)
                return false;
        }
    return true;
}

GroupHom stack_homs(const GroupHom& f, const GroupHom& g) {
    if (f.source_orders != g.source_orders)
        throw std::invalid_argument("stack_homs: source mismatch");
    std::vector<Int> target = f.target_orders;
    target.insert(target.end(), g.target_orders.begin(), g.target_orders.end());
    return {f.source_orders, std::move(target), IntegerMatrix::vcat(f.matrix, g.matrix)};
}

GroupHom concat_homs(const GroupHom& f, const GroupHom& g) {
    if (f.target_orders != g.target_orders)
        throw std::invalid_argument("concat_homs: target mismatch");
    std::vector<Int> source = f.source_orders;
    source.insert(source.end(), g.source_orders.begin(), g.source_orders.end());
    return {std::move(source), f.target_orders, IntegerMatrix::hcat(f.matrix, g.matrix)};
}

std::optional<GroupPresentation> lattice_quotient(const IntegerMatrix& big,
                                                  const IntegerMatrix& small) {
    if (big.rows() != small.rows())
        throw std::invalid_argument("lattice_quotient: ambient rank mismatch");

    // Basis of the big lattice: with u*G*v = d, lat(G) = lat(u_inv * d), whose
    // nonzero columns are d_i * u_inv[:, i].
    const auto snf = smith_normal_form(big);
    std::vector<std::vector<Int>> basis_cols;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
        if (snf.diagonal[i] != 0)
            basis_cols.push_back(scaled_vector(snf.u_inv.column(i), snf.diagonal[i]));
    const IntegerMatrix basis = IntegerMatrix::from_columns(big.rows(), basis_cols);

    IntegerMatrix x(basis.cols(), small.cols());
    for (std::size_t j = 0; j < small.cols(); ++j) {
        auto sol = solve_linear(basis, small.column(j), Int(0));
        if (!sol)
            return std::nullopt;
        x.set_column(j, *sol);
    }
    return cokernel_presentation(x).group;
}

IntegerMatrix kernel_sublattice(const GroupHom& g) {
    const IntegerMatrix lifted = IntegerMatrix::hcat(g.matrix, relation_matrix(g.target_orders));
    const IntegerMatrix full = kernel_basis(lifted, Int(0));
    std::vector<std::size_t> head(g.source_orders.size());
    for (std::size_t i = 0; i < head.size(); ++i)
        head[i] = i;
    return full.select_rows(head);
}

GroupPresentation image_presentation(const GroupHom& f) {
    const IntegerMatrix rel = relation_matrix(f.target_orders);
    auto q = lattice_quotient(IntegerMatrix::hcat(f.matrix, rel), rel);
    if (!q)
        throw std::logic_error("image_presentation: relation lattice escaped");
    return *q;
}

GroupPresentation kernel_presentation(const GroupHom& g) {
    auto q = lattice_quotient(kernel_sublattice(g), relation_matrix(g.source_orders));
    if (!q)
        throw std::logic_error("kernel_presentation: relations are not in the kernel");
    return *q;
}

std::string ExactnessNode::detail() const {
    std::string s = "ker = " + kernel.to_string() + ", im = " + image.to_string();
    if (!composite_zero)
        s += "; composite nonzero";
    else if (!contained)
        s += "; image not contained in kernel";
    else
        s += ", ker/im = " + kernel_mod_image.to_string();
    return s;
}

ExactnessNode check_exact_at(const GroupHom& f, const GroupHom& g, std::string label) {
    if (f.target_orders != g.source_orders)
        throw std::invalid_argument("check_exact_at: middle group mismatch");

    ExactnessNode node;
    node.label = std::move(label);

    node.composite_zero = true;
    for (std::size_t j = 0; j < f.matrix.cols(); ++j)
        if (!represents_zero(g.target_orders, g.matrix.apply(f.matrix.column(j)))) {
            node.composite_zero = false;
            break;
        }

    const IntegerMatrix rel_b = relation_matrix(f.target_orders);
    const IntegerMatrix kernel_gens = kernel_sublattice(g);
    const IntegerMatrix image_gens = IntegerMatrix::hcat(f.matrix, rel_b);

    if (auto k = lattice_quotient(kernel_gens, rel_b))
        node.kernel = *k;
    else
        throw std::logic_error("check_exact_at: relations escaped the kernel lattice");
    if (auto im = lattice_quotient(image_gens, rel_b))
        node.image = *im;
    else
        throw std::logic_error("check_exact_at: relations escaped the image lattice");

    if (auto q = lattice_quotient(kernel_gens, image_gens)) {
        node.contained = true;
        node.kernel_mod_image = *q;
    } else {
        node.contained = false;
    }
    return node;
}

} // namespace homcalc
