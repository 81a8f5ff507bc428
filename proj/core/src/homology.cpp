#include "homcalc/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcalc {

namespace {

// Solve cycle_basis * y = z using the stored SNF; z must lie in the cycle
// lattice (guaranteed for verified cycles).
std::vector<Int> cycle_coordinates(const HomologyGroup& g, std::span<const Int> z) {
    const auto& snf = g.cycle_basis_snf;
    const std::vector<Int> c = snf.u.apply(z);
    std::vector<Int> y(g.cycle_basis.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.diagonal.size() && snf.diagonal[i] != 0)
            y[i] = divide_exact(c[i], snf.diagonal[i]);
        else if (c[i] != 0)
            throw std::logic_error("cycle outside the stored cycle lattice");
    }
    return snf.v.apply(y);
}

HomologyGroupPtr trivial_group(const ChainComplex& c, int degree, const Int& modulus) {
    auto g = std::make_shared<HomologyGroup>();
    g->complex_name = c.name();
    g->degree = degree;
    g->modulus = modulus;
    g->cycle_basis = IntegerMatrix(c.cell_count(degree), 0);
    g->cycle_basis_snf = smith_normal_form(g->cycle_basis);
    g->torsion_transform = IntegerMatrix(0, 0);
    return g;
}

} // namespace

HomologyGroupPtr homology(const ChainComplex& c, int degree, const Int& modulus) {
    if (degree < 0)
        throw std::out_of_range("homology: negative degree");
    if (modulus < 0)
        throw std::invalid_argument("homology: negative modulus");
    const std::size_t n_cells = c.cell_count(degree);
    if (n_cells == 0)
        return trivial_group(c, degree, modulus);

    const IntegerMatrix d_in = c.boundary(degree);
    const IntegerMatrix d_out = c.boundary(degree + 1);

    // Cycle lattice {z : d z = 0 (mod modulus)} and boundary generators; for
    // modulus k the presentation is lifted with k * identity columns.
    IntegerMatrix cycles, bounds;
    if (modulus == 0) {
        cycles = kernel_basis(d_in, Int(0));
        bounds = d_out;
    } else {
        const IntegerMatrix lifted =
            IntegerMatrix::hcat(d_in, IntegerMatrix::scalar(d_in.rows(), modulus));
        const IntegerMatrix lifted_kernel = kernel_basis(lifted, Int(0));
        std::vector<std::size_t> head(n_cells);
        for (std::size_t i = 0; i < n_cells; ++i)
            head[i] = i;
        cycles = lifted_kernel.select_rows(head);
        bounds = IntegerMatrix::hcat(d_out, IntegerMatrix::scalar(n_cells, modulus));
    }

    auto g = std::make_shared<HomologyGroup>();
    g->complex_name = c.name();
    g->degree = degree;
    g->modulus = modulus;
    g->cycle_basis = cycles;
    g->cycle_basis_snf = smith_normal_form(cycles);

    // Boundaries in cycle coordinates.
    IntegerMatrix rel(cycles.cols(), bounds.cols());
    for (std::size_t j = 0; j < bounds.cols(); ++j)
        rel.set_column(j, cycle_coordinates(*g, bounds.column(j)));

    const auto snf = smith_normal_form(rel);
    std::vector<std::size_t> free_pos, torsion_pos;
    for (std::size_t i = 0; i < cycles.cols(); ++i) {
        const Int d = i < snf.diagonal.size() ? snf.diagonal[i] : Int(0);
        if (d == 0)
            free_pos.push_back(i);
        else if (d > 1)
            torsion_pos.push_back(i);
    }
    g->presentation.free_rank = free_pos.size();
    for (std::size_t i : torsion_pos)
        g->presentation.torsion.push_back(snf.diagonal[i]);
    if (modulus != 0 && g->presentation.free_rank != 0)
        throw std::logic_error("homology: free summand at a finite modulus");

    g->summand_positions = free_pos;
    g->summand_positions.insert(g->summand_positions.end(), torsion_pos.begin(), torsion_pos.end());
    g->torsion_transform = snf.u;

    for (std::size_t pos : g->summand_positions)
        g->generators.push_back(g->cycle_basis.apply(snf.u_inv.column(pos)));

    // Each generator must be a cycle that does not bound; both are consistency
    // checks on the construction itself.
    for (const auto& gen : g->generators) {
        if (!is_zero_vector_mod(d_in.apply(gen), modulus))
            throw std::logic_error("homology: generator is not a cycle");
        if (solve_linear(bounds, gen, Int(0)))
            throw std::logic_error("homology: generator bounds");
    }
    return g;
}

bool HomologyClass::is_zero() const {
    return is_zero_vector(coordinates);
}

std::string HomologyClass::to_string() const {
    return vector_to_string(coordinates) + " in " + group->presentation.to_string();
}

HomologyClass classify_cycle(const HomologyGroupPtr& group, const ChainComplex& c,
                             std::span<const Int> z) {
    if (z.size() != c.cell_count(group->degree))
        throw std::invalid_argument("classify_cycle: chain length mismatch");
    const auto dz = c.boundary(group->degree).apply(z);
    if (!is_zero_vector_mod(dz, group->modulus))
        throw NotACycleError("classify_cycle: chain is not a cycle, boundary = " +
                                 vector_to_string(dz),
                             dz);

    HomologyClass out;
    out.group = group;
    if (group->presentation.summands() == 0)
        return out;
    const auto y = cycle_coordinates(*group, z);
    const auto t = group->torsion_transform.apply(y);
    std::vector<Int> coords;
    coords.reserve(group->summand_positions.size());
    for (std::size_t pos : group->summand_positions)
        coords.push_back(t[pos]);
    out.coordinates = reduce_coordinates(group->presentation, coords);
    return out;
}

HomologyClass classify_cycle(const ChainComplex& c, int degree, const Int& modulus,
                             std::span<const Int> z) {
    return classify_cycle(homology(c, degree, modulus), c, z);
}

std::vector<Int> representative_cycle(const HomologyClass& x) {
    std::vector<Int> z(x.group->chain_length());
    for (std::size_t i = 0; i < x.coordinates.size(); ++i)
        if (x.coordinates[i] != 0)
            z = add_vectors(z, scaled_vector(x.group->generators[i], x.coordinates[i]));
    return z;
}

HomologyClass zero_class(HomologyGroupPtr group) {
    HomologyClass out;
    out.coordinates.assign(group->presentation.summands(), Int(0));
    out.group = std::move(group);
    return out;
}

HomologyClass basis_class(HomologyGroupPtr group, std::size_t summand) {
    auto out = zero_class(std::move(group));
    out.coordinates.at(summand) = 1;
    return out;
}

bool classes_equal(const HomologyClass& a, const HomologyClass& b) {
    if (a.group->presentation != b.group->presentation)
        return false;
    return reduce_coordinates(a.group->presentation, a.coordinates) ==
           reduce_coordinates(b.group->presentation, b.coordinates);
}

HomologyClass add_classes(const HomologyClass& a, const HomologyClass& b) {
    HomologyClass out;
    out.group = a.group;
    out.coordinates = reduce_coordinates(a.group->presentation,
                                         add_vectors(a.coordinates, b.coordinates));
    return out;
}

HomologyClass scale_class(const HomologyClass& a, const Int& factor) {
    HomologyClass out;
    out.group = a.group;
    out.coordinates = reduce_coordinates(a.group->presentation,
                                         scaled_vector(a.coordinates, factor));
    return out;
}

GroupHom induced_map(const ChainMap& f, int degree, const Int& modulus) {
    if (!f.is_chain_map())
        throw std::invalid_argument("induced_map: not a chain map");
    const auto src = homology(*f.source, degree, modulus);
    const auto dst = homology(*f.target, degree, modulus);
    const IntegerMatrix comp = f.component(degree);
    IntegerMatrix m(dst->presentation.summands(), src->presentation.summands());
    for (std::size_t j = 0; j < src->generators.size(); ++j)
        m.set_column(j, classify_cycle(dst, *f.target, comp.apply(src->generators[j])).coordinates);
    return {src->presentation, dst->presentation, std::move(m)};
}

GroupHom connecting_pair(const ChainComplex& c, const Subcomplex& a,
                         const ChainComplex& a_complex, const ChainComplex& rel,
                         int degree, const Int& modulus) {
    const auto src = homology(rel, degree, modulus);
    const auto dst = homology(a_complex, degree > 0 ? degree - 1 : 0, modulus);

    // Index maps: relative cells into c, and c-cells of dimension degree-1
    // onto a-cells.
    std::vector<std::size_t> rel_to_c;
    for (std::size_t i = 0; i < c.cell_count(degree); ++i)
        if (!a.contains(degree, i))
            rel_to_c.push_back(i);

    IntegerMatrix m(dst->presentation.summands(), src->presentation.summands());
    if (degree > 0) {
        const IntegerMatrix d_full = c.boundary(degree);
        const auto& a_below = a.selected(degree - 1);
        for (std::size_t j = 0; j < src->generators.size(); ++j) {
            std::vector<Int> lift(c.cell_count(degree));
            for (std::size_t i = 0; i < rel_to_c.size(); ++i)
                lift[rel_to_c[i]] = src->generators[j][i];
            const auto boundary_of_lift = d_full.apply(lift);
            std::vector<Int> restricted;
            restricted.reserve(a_below.size());
            for (std::size_t idx : a_below)
                restricted.push_back(boundary_of_lift[idx]);
            // The relative-cycle condition makes the rest vanish at the modulus.
            for (std::size_t i = 0; i < boundary_of_lift.size(); ++i)
                if (!a.contains(degree - 1, i) &&
                    !is_zero_vector_mod(std::span(&boundary_of_lift[i], 1), modulus))
                    throw std::logic_error("connecting_pair: lift boundary escapes the subcomplex");
            m.set_column(j, classify_cycle(dst, a_complex, restricted).coordinates);
        }
    }
    return {src->presentation, dst->presentation, std::move(m)};
}

namespace {

std::string h_label(const std::string& name, int n, const Int& modulus) {
    std::string s = "H_" + std::to_string(n) + "(" + name;
    if (modulus != 0)
        s += "; Z/" + modulus.get_str();
    s += ")";
    return s;
}

} // namespace

Report les_pair_report(const ChainComplex& c, const Subcomplex& a,
                       const Int& modulus, int max_degree) {
    if (!a.boundary_closed())
        throw std::invalid_argument("les_pair_report: subcomplex is not boundary-closed");
    Report report;
    report.title = "pair sequence for (" + c.name() + ", A), modulus " + modulus.get_str();

    const ChainComplex a_complex = subcomplex_as_complex(a, "A");
    const ChainComplex rel = relative_complex(c, a);
    const ChainMap incl = inclusion_map(a_complex, a);
    const ChainMap quot = quotient_map(c, a, rel);

    const int window = std::min(max_degree, c.top_dim()) + 1;
    // Maps per degree: i_n, q_n, and the connecting d_n into degree n-1.
    std::vector<GroupHom> incl_h, quot_h, conn_h;
    for (int n = 0; n <= window; ++n) {
        incl_h.push_back(induced_map(incl, n, modulus));
        quot_h.push_back(induced_map(quot, n, modulus));
        conn_h.push_back(connecting_pair(c, a, a_complex, rel, n, modulus));
    }

    for (int n = window; n >= 0; --n) {
        auto node_c = check_exact_at(incl_h[n], quot_h[n], h_label(c.name(), n, modulus));
        report.check(node_c.pass(), node_c.label, node_c.detail());
        auto node_rel = check_exact_at(quot_h[n], conn_h[n],
                                       h_label("(" + c.name() + ",A)", n, modulus));
        report.check(node_rel.pass(), node_rel.label, node_rel.detail());
        if (n >= 1 && n - 1 <= max_degree) {
            auto node_a = check_exact_at(conn_h[n], incl_h[n - 1], h_label("A", n - 1, modulus));
            report.check(node_a.pass(), node_a.label, node_a.detail());
        }
    }
    return report;
}

namespace {

// Support-greedy splitting of a chain: the a-part keeps exactly the
// coefficients on cells of a (the remainder is supported on the other piece).
std::vector<Int> a_part_of(const Subcomplex& a, int degree, std::span<const Int> chain) {
    std::vector<Int> out(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (a.contains(degree, i))
            out[i] = chain[i];
    return out;
}

} // namespace

Report mayer_vietoris_report(const ChainComplex& c, const Subcomplex& a,
                             const Subcomplex& b, const Int& modulus, int max_degree) {
    if (!a.union_covers_parent(b))
        throw std::invalid_argument("mayer_vietoris_report: cover condition violated");
    if (!a.boundary_closed() || !b.boundary_closed())
        throw std::invalid_argument("mayer_vietoris_report: pieces are not boundary-closed");
    const Subcomplex meet = Subcomplex::intersection(a, b);
    if (!meet.boundary_closed())
        throw std::invalid_argument("mayer_vietoris_report: intersection is not boundary-closed");

    Report report;
    report.title = "Mayer-Vietoris for " + c.name() + ", modulus " + modulus.get_str();

    const ChainComplex ac = subcomplex_as_complex(a, "A");
    const ChainComplex bc = subcomplex_as_complex(b, "B");
    const ChainComplex ic = subcomplex_as_complex(meet, "A^B");
    const ChainMap incl_a = inclusion_map(ac, a);
    const ChainMap incl_b = inclusion_map(bc, b);

    // Inclusions of the intersection into a and b need index translation.
    auto include_into = [&](const Subcomplex& piece, const ChainComplex& piece_complex) {
        ChainMap f;
        f.source = &ic;
        f.target = &piece_complex;
        for (int n = 0; n <= ic.top_dim(); ++n) {
            IntegerMatrix m(piece_complex.cell_count(n), ic.cell_count(n));
            const auto& meet_sel = meet.selected(n);
            const auto& piece_sel = piece.selected(n);
            for (std::size_t j = 0; j < meet_sel.size(); ++j) {
                const auto it = std::lower_bound(piece_sel.begin(), piece_sel.end(), meet_sel[j]);
                m.at(static_cast<std::size_t>(it - piece_sel.begin()), j) = 1;
            }
            f.components.push_back(std::move(m));
        }
        return f;
    };
    const ChainMap incl_ia = include_into(a, ac);
    const ChainMap incl_ib = include_into(b, bc);

    const int window = std::min(max_degree, c.top_dim()) + 1;
    std::vector<GroupHom> into_sum, out_of_sum, conn;
    for (int n = 0; n <= window; ++n) {
        into_sum.push_back(stack_homs(induced_map(incl_ia, n, modulus),
                                      induced_map(incl_ib, n, modulus)));
        const GroupHom ja = induced_map(incl_a, n, modulus);
        GroupHom jb = induced_map(incl_b, n, modulus);
        jb.matrix = -jb.matrix;
        out_of_sum.push_back(concat_homs(ja, jb));

        // Connecting map: split a cycle z = z_a + z_b; the boundary of z_a is
        // supported on the intersection at the modulus.
        const auto hc = homology(c, n, modulus);
        const auto hi = homology(ic, n > 0 ? n - 1 : 0, modulus);
        IntegerMatrix m(hi->presentation.summands(), hc->presentation.summands());
        if (n > 0) {
            const IntegerMatrix d_full = c.boundary(n);
            const auto& meet_below = meet.selected(n - 1);
            for (std::size_t j = 0; j < hc->generators.size(); ++j) {
                const auto za = a_part_of(a, n, hc->generators[j]);
                const auto dza = d_full.apply(za);
                std::vector<Int> restricted;
                restricted.reserve(meet_below.size());
                for (std::size_t idx : meet_below)
                    restricted.push_back(dza[idx]);
                for (std::size_t i = 0; i < dza.size(); ++i)
                    if (!meet.contains(n - 1, i) && dza[i] != 0 &&
                        !is_zero_vector_mod(std::span(&dza[i], 1), modulus))
                        throw std::logic_error("mayer_vietoris: split boundary escapes the intersection");
                m.set_column(j, classify_cycle(hi, ic, restricted).coordinates);
            }
        }
        conn.push_back({hc->presentation, hi->presentation, std::move(m)});
    }

    for (int n = window; n >= 0; --n) {
        auto node_sum = check_exact_at(into_sum[n], out_of_sum[n],
                                       h_label("A", n, modulus) + " (+) " + h_label("B", n, modulus));
        report.check(node_sum.pass(), node_sum.label, node_sum.detail());
        auto node_c = check_exact_at(out_of_sum[n], conn[n], h_label(c.name(), n, modulus));
        report.check(node_c.pass(), node_c.label, node_c.detail());
        if (n >= 1 && n - 1 <= max_degree) {
            auto node_i = check_exact_at(conn[n], into_sum[n - 1], h_label("A^B", n - 1, modulus));
            report.check(node_i.pass(), node_i.label, node_i.detail());
        }
    }
    return report;
}

bool universal_coefficients_consistent(const ChainComplex& c, int degree, const Int& k) {
    const auto hk = homology(c, degree, k);
    const auto hn = homology(c, degree, Int(0));
    Int expected = 1;
    for (std::size_t i = 0; i < hn->presentation.free_rank; ++i)
        expected *= k;
    for (const Int& d : hn->presentation.torsion)
        expected *= int_gcd(d, k);
    if (degree > 0) {
        const auto below = homology(c, degree - 1, Int(0));
        for (const Int& d : below->presentation.torsion)
            expected *= int_gcd(d, k);
    }
    const auto order = finite_order(hk->presentation);
    return order && *order == expected;
}

} // namespace homcalc
