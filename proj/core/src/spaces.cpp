#include "homcalc/spaces.hpp"

#include <stdexcept>

namespace homcalc {

namespace {

long parse_long(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (...) {
        throw std::invalid_argument(std::string("space recipe: bad ") + what + " '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument(std::string("space recipe: bad ") + what + " '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

} // namespace

SpaceRecipe SpaceRecipe::parse(const std::string& text) {
    SpaceRecipe r;
    if (text.rfind("prod:", 0) == 0) {
        r.kind = Kind::product;
        const auto inner = split(text.substr(5), ',');
        if (inner.size() != 2)
            throw std::invalid_argument("space recipe: prod takes two comma-separated factors");
        for (const auto& f : inner) {
            if (f.rfind("prod:", 0) == 0)
                throw std::invalid_argument("space recipe: nested prod is not supported");
            r.factors.push_back(parse(f));
        }
        return r;
    }
    const auto parts = split(text, ':');
    const std::string& kind = parts[0];
    auto expect_params = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw std::invalid_argument("space recipe: '" + kind + "' takes " +
                                        std::to_string(n) + " parameter(s)");
    };
    if (kind == "point") {
        expect_params(0);
        r.kind = Kind::point;
    } else if (kind == "circle") {
        expect_params(0);
        r.kind = Kind::circle;
    } else if (kind == "klein") {
        expect_params(0);
        r.kind = Kind::klein;
    } else if (kind == "sphere") {
        expect_params(1);
        r.kind = Kind::sphere;
        r.dimension = parse_long(parts[1], "dimension");
    } else if (kind == "lens") {
        expect_params(2);
        r.kind = Kind::lens;
        r.p = parse_long(parts[1], "order");
        r.dimension = parse_long(parts[2], "parameter m");
    } else if (kind == "bzp") {
        expect_params(2);
        r.kind = Kind::bzp_skeleton;
        r.p = parse_long(parts[1], "order");
        r.dimension = parse_long(parts[2], "skeleton dimension");
    } else {
        throw std::invalid_argument("space recipe: unknown kind '" + kind + "'");
    }
    return r;
}

std::string SpaceRecipe::to_string() const {
    switch (kind) {
    case Kind::point: return "point";
    case Kind::circle: return "circle";
    case Kind::klein: return "klein";
    case Kind::sphere: return "sphere:" + std::to_string(dimension);
    case Kind::lens: return "lens:" + std::to_string(p) + ":" + std::to_string(dimension);
    case Kind::bzp_skeleton: return "bzp:" + std::to_string(p) + ":" + std::to_string(dimension);
    case Kind::product:
        return "prod:" + factors.at(0).to_string() + "," + factors.at(1).to_string();
    }
    return "?";
}

namespace {

// Shared builder for the one-cell-per-dimension models: boundaries of even
// cells are multiplication by p, of odd cells zero.
ChainComplex cyclic_tower(const std::string& name, long p, long top) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 1));
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(top + 1));
    for (long n = 0; n <= top; ++n) {
        cells[static_cast<std::size_t>(n)] = {"e" + std::to_string(n)};
        if (n >= 1) {
            IntegerMatrix b(1, 1);
            b.at(0, 0) = n % 2 == 0 ? Int(p) : Int(0);
            boundaries[static_cast<std::size_t>(n)] = std::move(b);
        }
    }
    return ChainComplex(name, std::move(cells), std::move(boundaries));
}

} // namespace

ChainComplex lens_space(long p, long m) {
    if (p < 2 || m < 1)
        throw std::invalid_argument("lens_space: need p >= 2 and m >= 1");
    return cyclic_tower("lens:" + std::to_string(p) + ":" + std::to_string(m), p, 2 * m - 1);
}

ChainComplex bzp_skeleton(long p, long d) {
    if (p < 2 || d < 0)
        throw std::invalid_argument("bzp_skeleton: need p >= 2 and d >= 0");
    return cyclic_tower("bzp:" + std::to_string(p) + ":" + std::to_string(d), p, d);
}

ChainComplex klein_bottle() {
    std::vector<std::vector<std::string>> cells = {{"v"}, {"a", "b"}, {"F"}};
    std::vector<IntegerMatrix> boundaries(3);
    boundaries[1] = IntegerMatrix(1, 2);
    boundaries[2] = IntegerMatrix(2, 1);
    boundaries[2].at(0, 0) = 2; // dF = 2a
    return ChainComplex("klein", std::move(cells), std::move(boundaries));
}

ChainComplex point_space() {
    return ChainComplex("point", {{"v"}}, {});
}

ChainComplex circle_space() {
    std::vector<std::vector<std::string>> cells = {{"v"}, {"e"}};
    std::vector<IntegerMatrix> boundaries(2);
    boundaries[1] = IntegerMatrix(1, 1);
    return ChainComplex("circle", std::move(cells), std::move(boundaries));
}

ChainComplex sphere_space(long n) {
    if (n < 0)
        throw std::invalid_argument("sphere_space: negative dimension");
    if (n == 0)
        return ChainComplex("sphere:0", {{"v+", "v-"}}, {});
    if (n == 1)
        return circle_space();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 1));
    cells[0] = {"v"};
    cells[static_cast<std::size_t>(n)] = {"c"};
    std::vector<IntegerMatrix> boundaries(static_cast<std::size_t>(n + 1));
    for (long i = 1; i <= n; ++i)
        boundaries[static_cast<std::size_t>(i)] =
            IntegerMatrix(cells[static_cast<std::size_t>(i - 1)].size(),
                          cells[static_cast<std::size_t>(i)].size());
    return ChainComplex("sphere:" + std::to_string(n), std::move(cells), std::move(boundaries));
}

ChainComplex build_space(const SpaceRecipe& recipe) {
    switch (recipe.kind) {
    case SpaceRecipe::Kind::point: return point_space();
    case SpaceRecipe::Kind::circle: return circle_space();
    case SpaceRecipe::Kind::klein: return klein_bottle();
    case SpaceRecipe::Kind::sphere: return sphere_space(recipe.dimension);
    case SpaceRecipe::Kind::lens: return lens_space(recipe.p, recipe.dimension);
    case SpaceRecipe::Kind::bzp_skeleton: return bzp_skeleton(recipe.p, recipe.dimension);
    case SpaceRecipe::Kind::product:
        return product_space(recipe.factors.at(0), recipe.factors.at(1));
    }
    throw std::logic_error("build_space: unreachable");
}

ChainComplex product_space(const SpaceRecipe& left, const SpaceRecipe& right) {
    return tensor_complex(build_space(left), build_space(right));
}

ChainComplex circle_two_cell() {
    std::vector<std::vector<std::string>> cells = {{"u0", "u1"}, {"f0", "f1"}};
    std::vector<IntegerMatrix> boundaries(2);
    boundaries[1] = IntegerMatrix::from_rows({{-1, 1}, {1, -1}});
    return ChainComplex("circle2", std::move(cells), std::move(boundaries));
}

ChainComplex interval_complex() {
    std::vector<std::vector<std::string>> cells = {{"w0", "w1"}, {"e"}};
    std::vector<IntegerMatrix> boundaries(2);
    boundaries[1] = IntegerMatrix::from_rows({{-1}, {1}});
    return ChainComplex("interval", std::move(cells), std::move(boundaries));
}

ChainComplex torus_two_cylinder_model() {
    return tensor_complex(circle_two_cell(), circle_space());
}

ChainComplex klein_two_face_model() {
    // A cylinder over the two-cell circle with its ends glued by the
    // orientation-reversing reflection that fixes both vertices.
    std::vector<std::vector<std::string>> cells = {{"u0", "u1"},
                                                   {"e0", "e1", "g0", "g1"},
                                                   {"F0", "F1"}};
    std::vector<IntegerMatrix> boundaries(3);
    boundaries[1] = IntegerMatrix::from_rows({{0, 0, -1, 1}, {0, 0, 1, -1}});
    boundaries[2] = IntegerMatrix::from_rows({{-1, 1}, {1, -1}, {1, 1}, {1, 1}});
    return ChainComplex("klein2", std::move(cells), std::move(boundaries));
}

std::vector<NamedSpace> standard_library() {
    const char* recipes[] = {"point",    "circle",   "sphere:2", "sphere:3",
                             "prod:circle,circle",   "klein",    "lens:2:2",
                             "lens:3:4", "lens:5:3", "bzp:2:6",  "bzp:3:8",
                             "bzp:5:6"};
    std::vector<NamedSpace> out;
    for (const char* r : recipes)
        out.push_back({r, SpaceRecipe::parse(r)});
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> skeleton_selection(const ChainComplex& c, int max_dim) {
    std::vector<std::vector<std::size_t>> sel(static_cast<std::size_t>(std::max(c.top_dim() + 1, 0)));
    for (int n = 0; n <= std::min(max_dim, c.top_dim()); ++n)
        for (std::size_t i = 0; i < c.cell_count(n); ++i)
            sel[static_cast<std::size_t>(n)].push_back(i);
    return sel;
}

} // namespace

std::vector<PairCase> standard_pair_cases() {
    std::vector<PairCase> out;
    for (const auto& space : standard_library()) {
        ChainComplex c = build_space(space.recipe);
        const int top = c.top_dim();
        out.push_back({space.name + " / empty", c, skeleton_selection(c, -1)});
        if (top >= 1)
            out.push_back({space.name + " / 0-skeleton", c, skeleton_selection(c, 0)});
        if (top >= 2)
            out.push_back({space.name + " / " + std::to_string(top - 1) + "-skeleton", c,
                           skeleton_selection(c, top - 1)});
    }
    {
        ChainComplex l7 = lens_space(3, 4);
        out.push_back({"lens:3:4 / 5-skeleton", l7, skeleton_selection(l7, 5)});
    }
    {
        ChainComplex k = klein_bottle();
        out.push_back({"klein / 1-skeleton", k, skeleton_selection(k, 1)});
    }
    return out;
}

std::vector<MvCase> standard_mv_cases() {
    std::vector<MvCase> out;

    // Torus as two cylinders meeting in two circles. Product cell layout:
    // dim 1 cells are (u0|e),(u1|e),(f0|v),(f1|v); dim 2 cells (f0|e),(f1|e).
    {
        ChainComplex t = torus_two_cylinder_model();
        MvCase mv{"torus two-cylinder cover", t, {}, {}};
        mv.a_selected = {{0, 1}, {0, 1, 2}, {0}};
        mv.b_selected = {{0, 1}, {0, 1, 3}, {1}};
        out.push_back(std::move(mv));
    }

    // Klein bottle split along its full 1-skeleton into two faces.
    {
        ChainComplex k = klein_two_face_model();
        MvCase mv{"klein two-face cover", k, {}, {}};
        mv.a_selected = {{0, 1}, {0, 1, 2, 3}, {0}};
        mv.b_selected = {{0, 1}, {0, 1, 2, 3}, {1}};
        out.push_back(std::move(mv));
    }

    // Degenerate cover A = B = C on every library space.
    for (const auto& space : standard_library()) {
        ChainComplex c = build_space(space.recipe);
        const auto all = skeleton_selection(c, c.top_dim());
        out.push_back({space.name + " trivial cover", c, all, all});
    }
    return out;
}

} // namespace homcalc
