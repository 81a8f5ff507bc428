#pragma once

#include <string>
#include <vector>

#include "homcalc/chain_complex.hpp"

namespace homcalc {

/// Parameterized description of a library space; round-trips through the CLI
/// mini-syntax `kind:param:param` (e.g. `lens:3:4`, `bzp:3:8`, `sphere:2`,
/// `prod:lens:3:4,lens:3:4`).
struct SpaceRecipe {
    enum class Kind { point, circle, sphere, klein, lens, bzp_skeleton, product };

    Kind kind = Kind::point;
    long p = 0;         // lens / bzp order
    long dimension = 0; // sphere dimension, lens m, bzp skeleton dimension
    std::vector<SpaceRecipe> factors;

    static SpaceRecipe parse(const std::string& text);
    std::string to_string() const;
};

/// Minimal cell model of the lens space L^{2m-1} for the order-p action: one
/// cell in every dimension 0..2m-1, boundaries alternating 0 and p.
ChainComplex lens_space(long p, long m);

/// d-skeleton of the classifying space of the cyclic group of order p: the
/// lens model continued through even top cells.
ChainComplex bzp_skeleton(long p, long d);

/// One vertex, edges a and b, one face with boundary word a b a b^{-1}
/// (dF = 2a; the torsion class of H_1 lives on a).
ChainComplex klein_bottle();

ChainComplex point_space();
ChainComplex circle_space();
/// Two-cell model, one vertex and one n-cell (two vertices for n = 0).
ChainComplex sphere_space(long n);

ChainComplex build_space(const SpaceRecipe& recipe);
ChainComplex product_space(const SpaceRecipe& left, const SpaceRecipe& right);

/// Finer models used by the documented decompositions.
ChainComplex circle_two_cell();  // two vertices, two edges
ChainComplex interval_complex(); // two vertices, one edge
ChainComplex torus_two_cylinder_model();
ChainComplex klein_two_face_model();

struct NamedSpace {
    std::string name;
    SpaceRecipe recipe;
};

/// The fixed corpus the verification suites run over.
std::vector<NamedSpace> standard_library();

/// (complex, subcomplex) pairs for the pair-sequence suite. Selections are
/// stored as indices so the complex can be owned by value.
struct PairCase {
    std::string name;
    ChainComplex complex;
    std::vector<std::vector<std::size_t>> a_selected;
};
std::vector<PairCase> standard_pair_cases();

/// Documented covers for the Mayer-Vietoris suite.
struct MvCase {
    std::string name;
    ChainComplex complex;
    std::vector<std::vector<std::size_t>> a_selected;
    std::vector<std::vector<std::size_t>> b_selected;
};
std::vector<MvCase> standard_mv_cases();

} // namespace homcalc
