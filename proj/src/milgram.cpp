#include "polygem/milgram.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "polygem/gf2.hpp"

namespace polygem {

namespace {

gf2::BitVec label_coordinates(const std::vector<Label>& b, const ModuleElement& x)
{
    gf2::BitVec v(b.size());
    for (const auto& l : x.labels()) {
        const auto it = std::lower_bound(b.begin(), b.end(), l);
        if (it == b.end() || *it != l)
            throw std::logic_error("label missing from basis");
        v.flip(static_cast<std::size_t>(it - b.begin()));
    }
    return v;
}

// Span of Sq^{2^j} applied to all of M in lower degrees: the decomposables.
gf2::EchelonBasis decomposables(const ModuleId& m, int d, const std::vector<Label>& b)
{
    gf2::EchelonBasis span(b.size());
    for (int k = 1; k <= d; k *= 2) {
        const int e = d - k;
        if (e < std::max(0, m.bottom_degree()) || k > e)
            continue;
        for (const auto& l : basis(m, e))
            span.insert(label_coordinates(b, act(SteenrodElement::sq(k), ModuleElement(m, e, {l}))));
    }
    return span;
}

gf2::EchelonBasis sq_zero_span(const ModuleId& m, int d, const std::vector<Label>& b)
{
    gf2::EchelonBasis span(b.size());
    if (d % 2 == 0)
        for (const auto& l : basis(m, d / 2))
            span.insert(label_coordinates(b, sq_zero(ModuleElement(m, d / 2, {l}))));
    return span;
}

int ceil_log2_above(int n)
{
    int k = 0;
    while ((1 << k) <= n)
        ++k;
    return k;
}

int parse_int(std::string_view s)
{
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string to_string(GeneratorOrigin o)
{
    switch (o) {
    case GeneratorOrigin::IbarOrbit:
        return "ibar-orbit";
    case GeneratorOrigin::Tau:
        return "tau";
    case GeneratorOrigin::Lambda:
        return "lambda";
    case GeneratorOrigin::SubILabel:
        return "subI-label";
    }
    return "?";
}

std::string GeneratorCatalogue::to_tsv() const
{
    std::ostringstream os;
    for (const auto& e : entries)
        os << e.degree << '\t' << e.name << '\t' << (e.primitive ? "prim" : "non-prim") << '\n';
    return os.str();
}

GeneratorCatalogue milgram_generators(int n)
{
    if (n < 2)
        throw std::invalid_argument("milgram_generators needs n >= 2");
    GeneratorCatalogue c;
    c.n = n;
    c.k = ceil_log2_above(n);
    const std::string ibar = "ibar" + std::to_string(n);
    c.entries.push_back({n, ibar, GeneratorOrigin::IbarOrbit, true, {}});
    for (int i = 1; i <= c.k; ++i) {
        const int degree = 2 * (n + (1 << (i - 1)) - 1);
        const bool tau = (n % 2 == 0) ? i == 1 : i >= 2;
        CatalogueEntry e;
        e.degree = degree;
        e.origin = tau ? GeneratorOrigin::Tau : GeneratorOrigin::Lambda;
        e.name = (tau ? "tau" : "lambda") + std::to_string(i);
        e.primitive = !tau;
        if (tau) {
            const int s = (1 << (i - 1)) - 1;
            const std::string cross = s == 0 ? ibar : "Sq" + std::to_string(s) + ibar;
            e.diagonal = e.name + "(x)1 + " + cross + "(x)" + cross + " + 1(x)" + e.name;
        }
        c.entries.push_back(std::move(e));
    }
    return c;
}

std::vector<gf2::BitVec> steenrod_span(const ModuleId& m, std::span<const ModuleElement> gens,
                                       int d)
{
    const auto b = basis(m, d);
    gf2::EchelonBasis span(b.size());
    std::vector<gf2::BitVec> out;
    for (const auto& x : gens) {
        if (x.degree() > d)
            continue;
        for (const auto& j : admissible_monomials(d - x.degree())) {
            const auto y = act(SteenrodElement(j), x);
            auto v = label_coordinates(b, y);
            if (span.insert(v))
                out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<ModuleElement> indecomposables(const ModuleId& m, int d)
{
    const auto b = basis(m, d);
    auto span = decomposables(m, d, b);
    std::vector<ModuleElement> out;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (span.insert(gf2::BitVec::unit(b.size(), j)))
            out.emplace_back(m, d, std::vector<Label>{b[j]});
    return out;
}

std::vector<PolynomialGenerator> polynomial_generators_P(int n, int max_degree)
{
    const auto cat = milgram_generators(n);
    const ModuleId sub = ModuleId::sub_i(2 * n - 1);
    std::vector<bool> used(cat.entries.size(), false);
    std::vector<PolynomialGenerator> out;
    std::vector<ModuleElement> lambdas;

    for (int d = sub.bottom_degree(); d <= max_degree; ++d) {
        const auto b = basis(sub, d);
        if (b.empty())
            continue;
        auto quotient = sq_zero_span(sub, d, b);
        // Primitive part of this degree: Sq_0 I plus the Steenrod orbits of
        // the lambda-type indecomposables found so far.
        auto primitive = sq_zero_span(sub, d, b);
        for (auto& v : steenrod_span(sub, lambdas, d))
            primitive.insert(v);

        const auto indec = indecomposables(sub, d);
        std::vector<PolynomialGenerator> here;
        for (const auto& x : indec) {
            PolynomialGenerator g;
            g.degree = d;
            g.representative = x;
            g.indecomposable = true;
            g.name = x.to_string();
            for (std::size_t i = 1; i < cat.entries.size(); ++i) {
                if (!used[i] && cat.entries[i].degree == d) {
                    used[i] = true;
                    g.name = cat.entries[i].name;
                    g.primitive = cat.entries[i].primitive;
                    break;
                }
            }
            quotient.insert(label_coordinates(b, x));
            if (g.primitive)
                lambdas.push_back(x);
            here.push_back(std::move(g));
        }
        for (auto& g : here) {
            if (g.primitive)
                primitive.insert(label_coordinates(b, g.representative));
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto v = gf2::BitVec::unit(b.size(), j);
            if (!quotient.insert(v))
                continue;
            PolynomialGenerator g;
            g.degree = d;
            g.representative = ModuleElement(sub, d, {b[j]});
            g.name = g.representative.to_string();
            g.primitive = primitive.contains(v);
            here.push_back(std::move(g));
        }
        out.insert(out.end(), std::make_move_iterator(here.begin()),
                   std::make_move_iterator(here.end()));
    }
    return out;
}

std::string SpaceFactor::to_string() const
{
    const std::string m_text = std::to_string(m);
    switch (kind) {
    case SpaceKind::MilgramE:
        return "E(" + m_text + ")";
    case SpaceKind::EMF2:
        return "KF2(" + m_text + ")";
    case SpaceKind::EMZ:
        return "KZ(" + m_text + ")";
    case SpaceKind::EMZ2h:
        return "KZ2h(" + m_text + "," + std::to_string(h) + ")";
    }
    return "?";
}

std::vector<ModuleId> SpaceFactor::primitive_summands() const
{
    switch (kind) {
    case SpaceKind::MilgramE:
        return {ModuleId::reduced_free(m), ModuleId::sub_i(2 * m - 1)};
    case SpaceKind::EMF2:
        return {ModuleId::free(m)};
    case SpaceKind::EMZ:
        return {ModuleId::prime(m)};
    case SpaceKind::EMZ2h:
        return {ModuleId::prime(m), ModuleId::prime(m + 1)};
    }
    return {};
}

SpaceFactor parse_space_factor(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')')
        throw std::invalid_argument("space factor '" + std::string(text) +
                                    "' must look like KF2(2), KZ(3), KZ2h(3,2) or E(4)");
    const auto name = text.substr(0, open);
    const auto args = text.substr(open + 1, text.size() - open - 2);
    SpaceFactor f;
    if (name == "KZ2h") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("KZ2h needs two arguments (m,h)");
        f = SpaceFactor::em_z2h(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
        if (f.h < 2)
            throw std::invalid_argument("KZ2h needs h >= 2");
    } else {
        const int m = parse_int(args);
        if (name == "E")
            f = SpaceFactor::milgram(m);
        else if (name == "KF2")
            f = SpaceFactor::em_f2(m);
        else if (name == "KZ")
            f = SpaceFactor::em_z(m);
        else
            throw std::invalid_argument("unknown space kind '" + std::string(name) + "'");
    }
    if (f.m < 1 || (f.kind == SpaceKind::MilgramE && f.m < 2))
        throw std::invalid_argument("space parameter out of range in '" + std::string(text) + "'");
    return f;
}

namespace {

// Polynomial on basis labels of m with excess < param: Serre's description.
PoincareSeries serre_series(const ModuleId& m, int max_degree)
{
    std::vector<int> degrees;
    for (int d = m.bottom_degree(); d <= max_degree; ++d)
        for (const auto& l : basis(m, d))
            if (l.empty() || AdmissibleMonomial::excess_of(l) < m.param)
                degrees.push_back(d);
    return free_algebra_series(degrees, AlgebraKind::Polynomial, max_degree);
}

PoincareSeries integral_series(int m, int max_degree)
{
    if (m == 1) {
        const int one[] = {1};
        return free_algebra_series(one, AlgebraKind::Exterior, max_degree);
    }
    return serre_series(ModuleId::prime(m), max_degree);
}

}  // namespace

PoincareSeries series_of_space(const SpaceFactor& f, int max_degree)
{
    switch (f.kind) {
    case SpaceKind::MilgramE:
        return unstable_algebra_series(ModuleId::reduced_free(f.m), max_degree) *
               polynomial_on_sq0_quotient(ModuleId::sub_i(2 * f.m - 1), max_degree);
    case SpaceKind::EMF2:
        return serre_series(ModuleId::free(f.m), max_degree);
    case SpaceKind::EMZ:
        return integral_series(f.m, max_degree);
    case SpaceKind::EMZ2h:
        return integral_series(f.m, max_degree) * integral_series(f.m + 1, max_degree);
    }
    throw std::logic_error("unknown space kind");
}

PoincareSeries series_of_product(std::span<const SpaceFactor> factors, int max_degree)
{
    PoincareSeries s = PoincareSeries::one(max_degree);
    for (const auto& f : factors)
        s = s * series_of_space(f, max_degree);
    return s;
}

}  // namespace polygem
