// homcalc: exact cellular homology, Bockstein operators, Kunneth
// decompositions and a formal bordism boundary calculus over the integers.
#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "homcalc/bockstein.hpp"
#include "homcalc/formal.hpp"
#include "homcalc/homology.hpp"
#include "homcalc/interchange.hpp"
#include "homcalc/products.hpp"
#include "homcalc/report.hpp"
#include "homcalc/spaces.hpp"

namespace hc = homcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBadMath = 4;

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 20240901;
    int max_degree = 8;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const hc::Report& report, const GlobalOptions& opts) {
    if (opts.format == "json")
        std::cout << hc::to_json_string(report) << "\n";
    else
        hc::print_text(report, std::cout);
}

hc::ChainComplex load_input(const std::string& space, const std::string& file) {
    if (space.empty() == file.empty())
        throw UsageError("exactly one of --space and --file is required");
    if (!space.empty()) {
        try {
            return hc::build_space(hc::SpaceRecipe::parse(space));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::ifstream in(file);
    if (!in)
        throw UsageError("cannot open '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    hc::ChainComplex c = [&] {
        try {
            return hc::parse_complex(buffer.str());
        } catch (const hc::InterchangeError& e) {
            throw UsageError(e.what());
        }
    }();
    if (const auto violation = hc::validate(c))
        throw ValidationError("complex invalid at dimension " +
                              std::to_string(violation->dimension) + ": " + violation->message);
    return c;
}

std::vector<hc::Int> parse_class_coordinates(const std::string& text, std::size_t expected) {
    std::vector<hc::Int> coords;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ','))
        try {
            coords.emplace_back(token);
        } catch (...) {
            throw UsageError("bad class coordinate '" + token + "'");
        }
    if (coords.size() != expected)
        throw UsageError("class needs " + std::to_string(expected) + " coordinate(s), got " +
                         std::to_string(coords.size()));
    return coords;
}

std::string chain_to_string(const hc::ChainComplex& c, int degree, std::span<const hc::Int> chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        s += chain[i].get_str() + "*" + c.cell_names(degree)[i];
    }
    return s.empty() ? "0" : s;
}

// ---- homology ----------------------------------------------------------

int cmd_homology(const GlobalOptions& opts, const std::string& space, const std::string& file,
                 int degree, long modulus, bool show_generators) {
    const hc::ChainComplex c = load_input(space, file);
    const auto group = hc::homology(c, degree, hc::Int(modulus));
    hc::Report report;
    report.title = "homology of " + c.name();
    std::string label = "H_" + std::to_string(degree) + "(" + c.name();
    if (modulus != 0)
        label += "; Z/" + std::to_string(modulus);
    label += ")";
    report.info(label, group->presentation.to_string());
    if (show_generators)
        for (std::size_t i = 0; i < group->generators.size(); ++i)
            report.info("generator " + std::to_string(i),
                        chain_to_string(c, degree, group->generators[i]));
    if (opts.format == "json") {
        emit(report, opts);
    } else {
        std::cout << label << " = " << group->presentation.to_string() << "\n";
        for (std::size_t i = 1; i < report.rows.size(); ++i)
            std::cout << report.rows[i].label << ": " << report.rows[i].detail << "\n";
    }
    return kExitOk;
}

// ---- bockstein ---------------------------------------------------------

int cmd_bockstein(const GlobalOptions& opts, const std::string& space, const std::string& file,
                  int degree, long k, const std::string& coords_text,
                  const std::string& chain_text) {
    if (k < 2)
        throw std::invalid_argument("bockstein: k must be at least 2");
    if (coords_text.empty() == chain_text.empty())
        throw UsageError("exactly one of --class and --chain is required");
    const hc::ChainComplex c = load_input(space, file);
    const auto group = hc::homology(c, degree, hc::Int(k));

    hc::Report report;
    report.title = "Bockstein images on " + c.name() + ", degree " + std::to_string(degree) +
                   ", k = " + std::to_string(k);
    report.info("group", group->presentation.to_string());
    for (std::size_t i = 0; i < group->generators.size(); ++i)
        report.info("basis " + std::to_string(i),
                    chain_to_string(c, degree, group->generators[i]));

    hc::HomologyClass x;
    if (!chain_text.empty()) {
        // Raw cell coefficients; must be a cycle mod k.
        const auto chain = parse_class_coordinates(chain_text, c.cell_count(degree));
        x = hc::classify_cycle(group, c, chain);
        report.info("input chain", chain_to_string(c, degree, chain));
        report.info("class", x.to_string());
    } else {
        x.group = group;
        x.coordinates = hc::reduce_coordinates(
            group->presentation,
            parse_class_coordinates(coords_text, group->presentation.summands()));
    }

    const auto result = hc::bockstein(c, x);
    report.info("lifted chain", chain_to_string(c, degree, result.lifted_chain));
    report.info("boundary / " + std::to_string(k),
                chain_to_string(c, degree - 1, result.divided_boundary));
    report.info("beta", result.integral_image.to_string());
    report.info("beta~", result.modk_image.to_string());
    emit(report, opts);
    return kExitOk;
}

// ---- kunneth -----------------------------------------------------------

int cmd_kunneth(const GlobalOptions& opts, const std::string& left, const std::string& right,
                int degree, long modulus) {
    hc::ChainComplex lc = load_input(left, "");
    hc::ChainComplex rc = load_input(right, "");
    const auto dec = hc::kunneth(lc, rc, degree, hc::Int(modulus));

    hc::Report report;
    report.title = "Kunneth decomposition of H_" + std::to_string(degree) + "(" + lc.name() +
                   " x " + rc.name() + ")" + (modulus ? ", modulus " + std::to_string(modulus) : "");
    for (const auto& t : dec.tensor_summands)
        report.info("tensor (" + std::to_string(t.left_degree) + "," +
                        std::to_string(t.right_degree) + ")",
                    t.contribution.to_string());
    for (const auto& t : dec.tor_summands)
        report.info("tor (" + std::to_string(t.left_degree) + "," +
                        std::to_string(t.right_degree) + ")",
                    t.contribution.to_string());
    report.info("bookkeeping total", dec.bookkeeping.to_string());
    report.info("direct SNF total", dec.total->presentation.to_string());
    report.check(dec.consistent, "tensor (+) Tor bookkeeping matches direct homology");
    emit(report, opts);
    return report.all_pass() ? kExitOk : kExitBadMath;
}

// ---- verify ------------------------------------------------------------

std::vector<std::pair<std::string, hc::ChainComplex>>
verify_targets(const std::string& space, const std::string& file) {
    std::vector<std::pair<std::string, hc::ChainComplex>> out;
    if (!space.empty() || !file.empty()) {
        hc::ChainComplex c = load_input(space, file);
        out.emplace_back(space.empty() ? c.name() : space, std::move(c));
        return out;
    }
    for (const auto& named : hc::standard_library())
        out.emplace_back(named.name, hc::build_space(named.recipe));
    return out;
}

std::vector<long> k_values(long k) {
    if (k > 0)
        return {k};
    return {2, 3, 4, 9};
}

std::vector<long> coefficient_moduli() {
    return {0, 2, 3, 4, 9};
}

hc::Report verify_suite(const std::string& suite, const GlobalOptions& opts,
                        const std::string& space, const std::string& file, long k, long p,
                        long total) {
    static const char* known[] = {"les", "les2", "compat", "mv", "pair",
                                  "derivation", "glued", "all"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* s) { return suite == s; }) == std::end(known))
        throw UsageError("unknown verify suite '" + suite + "'");

    hc::Report all;
    all.title = "verify " + suite;
    all.seed = opts.seed;

    auto run_per_space = [&](auto&& fn) {
        for (const auto& [name, complex] : verify_targets(space, file))
            for (long kk : k_values(k))
                all.merge(fn(complex, hc::Int(kk)));
    };

    if (suite == "les" || suite == "all")
        run_per_space([&](const hc::ChainComplex& c, const hc::Int& kk) {
            return hc::verify_bockstein_les(c, kk, opts.max_degree);
        });
    if (suite == "les2" || suite == "all")
        run_per_space([&](const hc::ChainComplex& c, const hc::Int& kk) {
            return hc::verify_bockstein_les2(c, kk, opts.max_degree);
        });
    if (suite == "compat" || suite == "all")
        run_per_space([&](const hc::ChainComplex& c, const hc::Int& kk) {
            return hc::verify_compatibility(c, kk, opts.max_degree);
        });
    const bool single_target = !space.empty() || !file.empty();
    if (suite == "pair" || suite == "all") {
        if (single_target) {
            // Skeleton pairs of the requested complex.
            for (const auto& [name, complex] : verify_targets(space, file))
                for (int cut = -1; cut < complex.top_dim(); ++cut)
                    for (long m : coefficient_moduli())
                        all.merge(hc::les_pair_report(complex,
                                                      hc::Subcomplex::skeleton(complex, cut),
                                                      hc::Int(m), opts.max_degree));
        } else {
            for (const auto& pair_case : hc::standard_pair_cases())
                for (long m : coefficient_moduli()) {
                    const hc::Subcomplex a(pair_case.complex, pair_case.a_selected);
                    all.merge(
                        hc::les_pair_report(pair_case.complex, a, hc::Int(m), opts.max_degree));
                }
        }
    }
    if (suite == "mv" || suite == "all") {
        if (single_target) {
            for (const auto& [name, complex] : verify_targets(space, file)) {
                const hc::Subcomplex cover = hc::Subcomplex::full(complex);
                for (long m : coefficient_moduli())
                    all.merge(hc::mayer_vietoris_report(complex, cover, cover, hc::Int(m),
                                                        opts.max_degree));
            }
        } else {
            for (const auto& mv_case : hc::standard_mv_cases())
                for (long m : coefficient_moduli()) {
                    const hc::Subcomplex a(mv_case.complex, mv_case.a_selected);
                    const hc::Subcomplex b(mv_case.complex, mv_case.b_selected);
                    all.merge(hc::mayer_vietoris_report(mv_case.complex, a, b, hc::Int(m),
                                                        opts.max_degree));
                }
        }
    }
    if (suite == "derivation" || suite == "all") {
        const std::vector<long> ps = p > 0 ? std::vector<long>{p} : std::vector<long>{3, 5};
        const int top = std::min(opts.max_degree, 9);
        for (long pp : ps) {
            const auto left = hc::bzp_skeleton(pp, 2 * top + 2);
            const auto right = hc::bzp_skeleton(pp, 2 * top + 2);
            const auto product = hc::tensor_complex(left, right);
            for (int i = 1; i < top; ++i)
                for (int j = 1; i + j <= top; ++j) {
                    const auto a = hc::alpha_class(left, i, hc::Int(pp));
                    const auto b = hc::alpha_class(right, j, hc::Int(pp));
                    auto r = hc::verify_derivation(left, right, product, a, b);
                    r.title = "derivation p=" + std::to_string(pp) + " a" + std::to_string(i) +
                              " x a" + std::to_string(j);
                    all.merge(r);
                }
        }
    }
    if (suite == "glued" || suite == "all") {
        const std::vector<long> ps = p > 0 ? std::vector<long>{p} : std::vector<long>{3, 5};
        for (long pp : ps) {
            std::vector<int> totals;
            if (total > 0)
                totals.push_back(static_cast<int>(total));
            else
                for (int t = 3; t <= 9; t += 2)
                    totals.push_back(t);
            for (int t : totals)
                for (int i = 1; 2 * i <= t - 1; ++i)
                    all.merge(hc::verify_glued_cycle(pp, i, t));
        }
    }
    if (suite == "all") {
        for (const auto& [name, complex] : verify_targets(space, file))
            for (long kk : k_values(k))
                all.merge(hc::verify_beta_well_defined(complex, hc::Int(kk), opts.max_degree, 10,
                                                       opts.seed));
    }
    if (all.rows.empty())
        all.info("no applicable cases", "the requested target produced nothing to check");
    return all;
}

// ---- paper tables ------------------------------------------------------

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

int cmd_tables(const GlobalOptions& opts, long p, int max_degree) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("tables: p must be an odd prime");
    hc::Report report;
    report.title = "classifying-space tables for p = " + std::to_string(p);
    const auto model = hc::bzp_skeleton(p, max_degree + 2);

    for (int n = 0; n <= max_degree; ++n) {
        const auto g = hc::homology(model, n, hc::Int(0))->presentation;
        hc::GroupPresentation expected;
        if (n == 0)
            expected.free_rank = 1;
        else if (n % 2 == 1)
            expected.torsion = {hc::Int(p)};
        report.check(g == expected, "H_" + std::to_string(n) + "(B) = " + g.to_string(),
                     "anchor: integral homology is Z, Z/p in odd degrees, 0 otherwise");
    }
    for (int n = 0; n <= max_degree; ++n) {
        const auto g = hc::homology(model, n, hc::Int(p))->presentation;
        hc::GroupPresentation expected;
        expected.torsion = {hc::Int(p)};
        report.check(g == expected,
                     "H_" + std::to_string(n) + "(B; Z/" + std::to_string(p) + ") = " +
                         g.to_string(),
                     "anchor: mod-p homology is Z/p in every degree");
    }

    const int odd = max_degree % 2 == 1 ? max_degree : max_degree - 1;
    if (odd >= 1) {
        auto basis = hc::kernel_basis_classes(p, odd);
        for (std::size_t i = 0; i < basis.names.size(); ++i)
            report.info("basis element " + std::to_string(i), basis.names[i] + "  [ker beta~]");
        report.check(basis.report.all_pass(),
                     "degree-" + std::to_string(odd) + " kernel basis verified",
                     "anchor: the listed sums span ker beta~ and lift integrally");
        report.merge(hc::representability_report(p, odd));
    }
    emit(report, opts);
    return report.all_pass() ? kExitOk : 1;
}

// ---- emit-complex ------------------------------------------------------

int cmd_emit(const std::string& space, const std::string& file, const std::string& out_path) {
    const hc::ChainComplex c = load_input(space, file);
    const std::string text = hc::serialize_complex(c);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw UsageError("cannot write '" + out_path + "'");
        out << text << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cellular homology with integer and Z/k coefficients"};
    app.require_subcommand(1);


    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "seed for randomized verification");
    app.add_option("--max-degree", opts.max_degree, "degree bound for verification suites");

    std::string space, file, left, right, coords, chain, out_path, suite;
    int degree = 0;
    long modulus = 0, k = 0, p = 0, total = 0;
    bool show_generators = false;

    auto* homology_cmd = app.add_subcommand("homology", "homology group of a space or complex file");
    homology_cmd->fallthrough();
    homology_cmd->add_option("--space", space, "space recipe, e.g. lens:3:4 or prod:circle,circle");
    homology_cmd->add_option("--file", file, "complex in the interchange format");
    homology_cmd->add_option("--deg", degree, "degree")->required();
    homology_cmd->add_option("--mod", modulus, "coefficient modulus, 0 = integral");
    homology_cmd->add_flag("--generators", show_generators, "print generator cycles");

    auto* bockstein_cmd = app.add_subcommand("bockstein", "beta and beta~ of a mod-k class");
    bockstein_cmd->fallthrough();
    bockstein_cmd->add_option("--space", space, "space recipe");
    bockstein_cmd->add_option("--file", file, "complex file");
    bockstein_cmd->add_option("--deg", degree, "degree")->required();
    bockstein_cmd->add_option("--k", k, "coefficient modulus")->required();
    bockstein_cmd->add_option("--class", coords,
                              "comma-separated coordinates in the printed basis");
    bockstein_cmd->add_option("--chain", chain,
                              "comma-separated cell coefficients (must be a cycle mod k)");

    auto* kunneth_cmd = app.add_subcommand("kunneth", "Kunneth decomposition of a product");
    kunneth_cmd->fallthrough();
    kunneth_cmd->add_option("--left", left, "left factor recipe")->required();
    kunneth_cmd->add_option("--right", right, "right factor recipe")->required();
    kunneth_cmd->add_option("--deg", degree, "degree")->required();
    kunneth_cmd->add_option("--mod", modulus, "modulus, 0 or prime");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", suite,
                           "les | les2 | compat | mv | pair | derivation | glued | all")
        ->required();
    verify_cmd->add_option("--space", space, "restrict to one space recipe");
    verify_cmd->add_option("--file", file, "restrict to one complex file");
    verify_cmd->add_option("--k", k, "coefficient parameter (default sweep 2,3,4,9)");
    verify_cmd->add_option("--p", p, "order parameter for derivation/glued (default 3 and 5)");
    verify_cmd->add_option("--total", total, "total degree for glued");

    auto* tables_cmd = app.add_subcommand("paper-tables", "homology tables and basis reports");
    tables_cmd->fallthrough();
    long tables_p = 3;
    tables_cmd->add_option("--p", tables_p, "odd prime")->required();

    auto* emit_cmd = app.add_subcommand("emit-complex", "write a space in the interchange format");
    emit_cmd->fallthrough();
    emit_cmd->add_option("--space", space, "space recipe");
    emit_cmd->add_option("--file", file, "complex file to canonicalize");
    emit_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (homology_cmd->parsed())
            return cmd_homology(opts, space, file, degree, modulus, show_generators);
        if (bockstein_cmd->parsed())
            return cmd_bockstein(opts, space, file, degree, k, coords, chain);
        if (kunneth_cmd->parsed())
            return cmd_kunneth(opts, left, right, degree, modulus);
        if (verify_cmd->parsed()) {
            const auto report = verify_suite(suite, opts, space, file, k, p, total);
            emit(report, opts);
            return report.all_pass() ? kExitOk : 1;
        }
        if (tables_cmd->parsed())
            return cmd_tables(opts, tables_p, opts.max_degree);
        if (emit_cmd->parsed())
            return cmd_emit(space, file, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const hc::NotACycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadMath;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadMath;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadMath;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
