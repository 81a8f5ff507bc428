#include "homcalc/formal.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcalc {

namespace {

void canonicalize(std::vector<FormalTerm>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const FormalTerm& a, const FormalTerm& b) { return a.factors < b.factors; });
    std::vector<FormalTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().factors == t.factors)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const FormalTerm& t) { return t.coefficient == 0; });
    terms = std::move(merged);
}

void check_symbol_name(const std::string& name) {
    if (name.empty())
        throw std::invalid_argument("formal symbol name must be nonempty");
    for (char ch : name)
        if (ch == 'x' || ch == '*' || ch == '+' || ch == '-' || ch == ' ')
            throw std::invalid_argument("formal symbol name '" + name +
                                        "' contains a separator character");
}

} // namespace

FormalExpression::FormalExpression(std::vector<FormalTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.factors.empty())
            throw std::invalid_argument("formal term needs at least one factor");
        for (const auto& f : t.factors)
            check_symbol_name(f);
    }
    canonicalize(terms_);
}

FormalExpression FormalExpression::term(const Int& coefficient, std::vector<std::string> factors) {
    return FormalExpression({FormalTerm{coefficient, std::move(factors)}});
}

FormalExpression FormalExpression::operator+(const FormalExpression& rhs) const {
    std::vector<FormalTerm> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    canonicalize(all);
    FormalExpression out;
    out.terms_ = std::move(all);
    return out;
}

FormalExpression FormalExpression::operator-(const FormalExpression& rhs) const {
    return *this + rhs.scaled(Int(-1));
}

FormalExpression FormalExpression::scaled(const Int& factor) const {
    if (factor == 0)
        return {};
    FormalExpression out = *this;
    for (auto& t : out.terms_)
        t.coefficient *= factor;
    return out;
}

bool FormalExpression::divisible_by(const Int& p) const {
    for (const auto& t : terms_)
        if (t.coefficient % p != 0)
            return false;
    return true;
}

std::string FormalExpression::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            s += " + ";
        s += terms_[i].coefficient.get_str() + "*";
        for (std::size_t j = 0; j < terms_[i].factors.size(); ++j) {
            if (j)
                s += "x";
            s += terms_[i].factors[j];
        }
    }
    return s;
}

FormalExpression FormalExpression::parse(const std::string& text) {
    auto strip = [](std::string s) {
        const auto a = s.find_first_not_of(' ');
        const auto b = s.find_last_not_of(' ');
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string body = strip(text);
    if (body.empty())
        throw std::invalid_argument("formal expression: empty input");
    if (body == "0")
        return {};

    std::vector<FormalTerm> terms;
    std::size_t start = 0;
    while (start <= body.size()) {
        auto next = body.find(" + ", start);
        const std::string piece = strip(body.substr(start, next == std::string::npos
                                                               ? std::string::npos
                                                               : next - start));
        const auto star = piece.find('*');
        if (star == std::string::npos)
            throw std::invalid_argument("formal term '" + piece + "' lacks a coefficient");
        FormalTerm t;
        try {
            t.coefficient = Int(piece.substr(0, star));
        } catch (...) {
            throw std::invalid_argument("formal term '" + piece + "' has a bad coefficient");
        }
        std::size_t fstart = star + 1;
        const std::string rest = piece.substr(fstart);
        std::size_t p = 0;
        while (p <= rest.size()) {
            auto sep = rest.find('x', p);
            const std::string name =
                rest.substr(p, sep == std::string::npos ? std::string::npos : sep - p);
            if (name.empty())
                throw std::invalid_argument("formal term '" + piece + "' has an empty factor");
            t.factors.push_back(name);
            if (sep == std::string::npos)
                break;
            p = sep + 1;
        }
        terms.push_back(std::move(t));
        if (next == std::string::npos)
            break;
        start = next + 3;
    }
    return FormalExpression(std::move(terms));
}

void declare_symbol(SymbolTable& table, const std::string& name, int dimension,
                    FormalExpression boundary) {
    check_symbol_name(name);
    table[name] = FormalSymbol{name, dimension, std::move(boundary)};
}

namespace {

const FormalSymbol& lookup(const SymbolTable& table, const std::string& name) {
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown formal symbol '" + name + "'");
    return it->second;
}

int term_dimension(const SymbolTable& table, const FormalTerm& t) {
    int dim = 0;
    for (const auto& f : t.factors)
        dim += lookup(table, f).dimension;
    return dim;
}

} // namespace

std::optional<int> expression_dimension(const SymbolTable& table, const FormalExpression& e) {
    std::optional<int> dim;
    for (const auto& t : e.terms()) {
        const int td = term_dimension(table, t);
        if (dim && *dim != td)
            throw std::invalid_argument("formal expression has mixed dimensions " +
                                        std::to_string(*dim) + " and " + std::to_string(td));
        dim = td;
    }
    return dim;
}

FormalExpression formal_boundary(const SymbolTable& table, const FormalExpression& e) {
    expression_dimension(table, e); // rejects mixed dimensions
    FormalExpression out;
    for (const auto& t : e.terms()) {
        int sign_dim = 0;
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            const FormalSymbol& sym = lookup(table, t.factors[i]);
            const Int sign = sign_dim % 2 == 0 ? 1 : -1;
            for (const auto& bt : sym.boundary.terms()) {
                FormalTerm produced;
                produced.coefficient = t.coefficient * sign * bt.coefficient;
                produced.factors.assign(t.factors.begin(), t.factors.begin() + i);
                produced.factors.insert(produced.factors.end(), bt.factors.begin(),
                                        bt.factors.end());
                produced.factors.insert(produced.factors.end(), t.factors.begin() + i + 1,
                                        t.factors.end());
                out = out + FormalExpression({produced});
            }
            sign_dim += sym.dimension;
        }
    }
    return out;
}

SymbolTable bordism_symbols(long p, int max_dim) {
    SymbolTable table;
    declare_symbol(table, "1", 0);
    for (int d = 1; d <= max_dim; d += 2) {
        declare_symbol(table, "L" + std::to_string(d), d);
        declare_symbol(table, "a" + std::to_string(d), d);
    }
    for (int d = 2; d <= max_dim; d += 2)
        declare_symbol(table, "T" + std::to_string(d), d,
                       FormalExpression::term(Int(p), {"L" + std::to_string(d - 1)}));
    for (int d = 4; d <= max_dim; d += 4) {
        declare_symbol(table, "M" + std::to_string(d), d);
        declare_symbol(table, "cM" + std::to_string(d), d + 1,
                       FormalExpression::term(Int(-1), {"M" + std::to_string(d)}));
    }
    return table;
}

Report verify_glued_cycle(long p, int i, int total_degree) {
    Report report;
    report.title = "glued representative closed mod " + std::to_string(p) + ", 2i = " +
                   std::to_string(2 * i) + ", degree " + std::to_string(total_degree);
    if (p < 2 || total_degree % 2 == 0 || 2 * i < 2 || 2 * i > total_degree - 1)
        throw std::invalid_argument("verify_glued_cycle: need odd total and 2 <= 2i <= total-1");

    const SymbolTable table = bordism_symbols(p, total_degree + 1);
    const auto glued =
        FormalExpression::term(Int(1), {"T" + std::to_string(2 * i),
                                        "L" + std::to_string(total_degree - 2 * i)}) +
        FormalExpression::term(Int(1), {"L" + std::to_string(2 * i - 1),
                                        "T" + std::to_string(total_degree - 2 * i + 1)});
    const auto dim = expression_dimension(table, glued);
    report.check(dim && *dim == total_degree, "expression homogeneous of degree " +
                                                  std::to_string(total_degree));

    const auto boundary = formal_boundary(table, glued);
    report.check(boundary.divisible_by(Int(p)),
                 "boundary divisible by " + std::to_string(p),
                 "d(" + glued.to_string() + ") = " + boundary.to_string());
    if (boundary.is_zero())
        report.info("boundary cancels exactly", "the two Leibniz terms differ by the Koszul sign");
    return report;
}

ConnerFloydResult conner_floyd_expression(long p, int i, const std::vector<int>& m_dims) {
    ConnerFloydResult out;
    out.report.title = "bounding relation for p*a_" + std::to_string(2 * i - 1);
    if (p < 2 || i < 1)
        throw std::invalid_argument("conner_floyd_expression: need p >= 2 and i >= 1");
    for (int d : m_dims)
        if (d < 4 || d % 4 != 0 || d > 2 * i - 2)
            throw std::invalid_argument("conner_floyd_expression: manifold dimension " +
                                        std::to_string(d) +
                                        " must be a positive multiple of 4 at most 2i-2");

    const SymbolTable table = bordism_symbols(p, 2 * i + 1);
    const std::string lead = "a" + std::to_string(2 * i - 1);

    out.relation = FormalExpression::term(Int(p), {lead});
    for (int d : m_dims) {
        const std::string partner = "a" + std::to_string(2 * i - 1 - d);
        out.relation = out.relation +
                       FormalExpression::term(Int(1), {partner, "M" + std::to_string(d)});
        out.bounding = out.bounding +
                       FormalExpression::term(Int(-1), {partner, "cM" + std::to_string(d)});
    }

    const auto rel_dim = expression_dimension(table, out.relation);
    out.report.check(rel_dim && *rel_dim == 2 * i - 1,
                     "relation homogeneous of degree " + std::to_string(2 * i - 1),
                     out.relation.to_string());
    const auto bound_dim = expression_dimension(table, out.bounding);
    out.report.check(out.bounding.is_zero() || (bound_dim && *bound_dim == 2 * i),
                     "bounding expression homogeneous of degree " + std::to_string(2 * i),
                     out.bounding.to_string());

    // d(bounding) = p*a_{2i-1} - relation, i.e. the boundary recovers the
    // leading term modulo the relation.
    const auto boundary = formal_boundary(table, out.bounding);
    const auto expected = FormalExpression::term(Int(p), {lead}) - out.relation;
    out.report.check(boundary == expected, "d(bounding) recovers p*" + lead + " given the relation",
                     "d(" + out.bounding.to_string() + ") = " + boundary.to_string());
    if (m_dims.empty())
        out.report.info("empty manifold list",
                        "p*" + lead + " = 0 is asserted by the relation, not derived");
    return out;
}

namespace {

bool odd_prime(long p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

Report representability_report(long p, int n) {
    Report report;
    report.title = "formal representatives in degree " + std::to_string(n) + " for p = " +
                   std::to_string(p);
    if (!odd_prime(p) || n < 1)
        throw std::invalid_argument("representability_report: need an odd prime p and n >= 1");

    if (n % 2 == 1) {
        report.info("1 x L" + std::to_string(n),
                    "closed manifold product; class 1 x a" + std::to_string(n));
        for (int i = 1; 2 * i <= n - 1; ++i) {
            const auto glued =
                FormalExpression::term(Int(1), {"T" + std::to_string(2 * i),
                                                "L" + std::to_string(n - 2 * i)}) +
                FormalExpression::term(Int(1), {"L" + std::to_string(2 * i - 1),
                                                "T" + std::to_string(n - 2 * i + 1)});
            report.info(glued.to_string(),
                        "glued p-stratifold; class a" + std::to_string(2 * i) + " x a" +
                            std::to_string(n - 2 * i) + " + a" + std::to_string(2 * i - 1) +
                            " x a" + std::to_string(n - 2 * i + 1));
        }
        report.info("L" + std::to_string(n) + " x 1",
                    "closed manifold product; class a" + std::to_string(n) + " x 1");
    } else {
        for (int i = 1; i <= n - 1; i += 2)
            report.info("L" + std::to_string(i) + "xL" + std::to_string(n - i),
                        "closed manifold product; class a" + std::to_string(i) + " x a" +
                            std::to_string(n - i));
    }
    report.info("NOTE", "the degree-" + std::to_string(2 * p) + " class a" +
                            std::to_string(2 * p) +
                            " admits no manifold representative of its kind; recorded from the "
                            "source theory, not computed here");
    return report;
}

} // namespace homcalc
