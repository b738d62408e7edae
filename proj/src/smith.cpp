#include "polygem/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace polygem {

PrimitiveMap::PrimitiveMap(GradedSum domain, GradedSum codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    for (const auto& m : domain_.summands()) {
        if (!m.is_cyclic())
            throw std::invalid_argument("domain summand " + m.to_string() + " is not cyclic");
        values_.emplace_back(codomain_, m.param);
    }
}

void PrimitiveMap::set_value(std::size_t i, const SumElement& value)
{
    const ModuleId& m = domain_.summands().at(i);
    if (value.degree() != m.param || value.size() != codomain_.summands().size())
        throw std::invalid_argument("value for " + m.to_string() + " must lie in degree " +
                                    std::to_string(m.param) + " of the codomain");
    if (m.kind == ModuleKind::Prime && !act(SteenrodElement::sq(1), value).is_zero())
        throw std::invalid_argument("value for " + m.to_string() +
                                    " is not killed by Sq(1): " + value.to_string());
    if (m.kind == ModuleKind::ReducedFree && !sq_zero(value).is_zero())
        throw std::invalid_argument("value for " + m.to_string() +
                                    " is not killed by Sq_0: " + value.to_string());
    values_[i] = value;
}

std::size_t PrimitiveMap::add_codomain_summand(const ModuleId& m)
{
    const std::size_t idx = codomain_.add(m);
    for (auto& v : values_) {
        auto parts = v.parts();
        parts.emplace_back(m, v.degree());
        v = SumElement::from_parts(std::move(parts), v.degree());
    }
    return idx;
}

std::size_t PrimitiveMap::add_domain_summand(const ModuleId& m, const SumElement& value)
{
    if (!m.is_cyclic())
        throw std::invalid_argument("domain summand " + m.to_string() + " is not cyclic");
    const std::size_t idx = domain_.add(m);
    values_.emplace_back(codomain_, m.param);
    try {
        set_value(idx, value);
    } catch (...) {
        values_.pop_back();
        domain_ = GradedSum(std::vector<ModuleId>(domain_.summands().begin(),
                                                  domain_.summands().end() - 1));
        throw;
    }
    return idx;
}

SumElement PrimitiveMap::apply(const SumElement& x) const
{
    if (x.size() != domain_.summands().size())
        throw std::invalid_argument("element does not belong to the domain");
    SumElement out(codomain_, x.degree());
    for (std::size_t s = 0; s < x.size(); ++s)
        for (const auto& l : x.part(s).labels())
            out += act(l.empty() ? SteenrodElement::unit() : SteenrodElement(AdmissibleMonomial(l)),
                       values_[s]);
    return out;
}

std::vector<gf2::BitVec> PrimitiveMap::matrix(int d) const
{
    std::vector<gf2::BitVec> cols;
    for (const auto& e : domain_.basis(d)) {
        const ModuleElement x(domain_.summands()[e.summand], d, {e.label});
        cols.push_back(codomain_.coordinates(apply(domain_.inject(e.summand, x))));
    }
    return cols;
}

std::size_t PrimitiveMap::rank(int d) const
{
    return gf2::rank(matrix(d), codomain_.dimension(d));
}

GradedKernel primitive_kernel(const PrimitiveMap& f, int max_degree)
{
    GradedKernel k;
    k.max_degree = max_degree;
    k.by_degree.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& v : gf2::nullspace(f.matrix(d), f.codomain().dimension(d)))
            k.by_degree[static_cast<std::size_t>(d)].push_back(f.domain().element(v, d));
    return k;
}

std::vector<int> kernel_generator_degrees(const PrimitiveMap& f, const GradedKernel& k)
{
    std::vector<int> out;
    for (int d = 1; d <= k.max_degree; ++d) {
        const std::size_t dim = k.dimension(d);
        std::size_t squares = 0;
        if (d % 2 == 0) {
            std::vector<gf2::BitVec> image;
            for (const auto& x : k.by_degree[static_cast<std::size_t>(d / 2)])
                image.push_back(f.domain().coordinates(sq_zero(x)));
            squares = gf2::rank(image, f.domain().dimension(d));
        }
        out.insert(out.end(), dim - squares, d);
    }
    return out;
}

TorSeries tor_series(std::span<const int> kernel_generator_degrees, int max_degree)
{
    TorSeries t;
    for (int d : kernel_generator_degrees) {
        if (d <= 1)
            throw std::invalid_argument("kernel generator of degree " + std::to_string(d) +
                                        " would give an exterior class of degree " +
                                        std::to_string(d - 1));
        t.exterior_degrees.push_back(d - 1);
    }
    t.series = free_algebra_series(t.exterior_degrees, AlgebraKind::Exterior, max_degree);
    return t;
}

FiberSeriesReport gr_fiber_series(const PrimitiveMap& f, const PoincareSeries& total_space,
                                  int max_degree)
{
    if (total_space.max_degree() < max_degree)
        throw std::invalid_argument("total space series is truncated below the requested degree");
    FiberSeriesReport r;
    // The image is a submodule of the codomain; U of it has the exterior series
    // on a basis.
    std::vector<int> image_degrees;
    for (int d = 1; d <= max_degree; ++d)
        image_degrees.insert(image_degrees.end(), f.rank(d), d);
    const auto image = free_algebra_series(image_degrees, AlgebraKind::Exterior, max_degree);
    r.quotient = total_space.truncated(max_degree).divided_by(image);

    // A generator in degree D + 1 contributes an exterior class in degree D.
    r.kernel = primitive_kernel(f, max_degree + 1);
    const auto gens = kernel_generator_degrees(f, r.kernel);
    auto tor = tor_series(gens, max_degree);
    r.exterior_degrees = std::move(tor.exterior_degrees);
    r.exterior = std::move(tor.series);
    r.combined = r.quotient * r.exterior;
    return r;
}

std::string FiberSeriesReport::to_tsv() const
{
    std::ostringstream os;
    os << "# series\ndegree\tquotient\texterior\tcombined\n";
    for (int d = 0; d <= combined.max_degree(); ++d)
        os << d << '\t' << quotient[d] << '\t' << exterior[d] << '\t' << combined[d] << '\n';
    os << "# exterior\n";
    for (int d : exterior_degrees)
        os << d << '\n';
    os << "# kernel\n";
    for (int d = 1; d <= kernel.max_degree; ++d)
        for (const auto& x : kernel.by_degree[static_cast<std::size_t>(d)])
            os << d << '\t' << x.to_string() << '\n';
    return os.str();
}

CupSquareCheck verify_cup_square_kernel(const PrimitiveMap& f, int max_degree)
{
    CupSquareCheck c;
    for (int d = 1; d <= max_degree; ++d) {
        ++c.degrees_checked;
        std::vector<gf2::BitVec> target;
        std::vector<gf2::BitVec> allowed;
        if (d % 2 == 0) {
            target = sq_zero_image(f.codomain(), d / 2);
            allowed = sq_zero_image(f.domain(), d / 2);
        }
        const auto pre = gf2::preimage(f.matrix(d), f.codomain().dimension(d), target);
        gf2::EchelonBasis squares(f.domain().dimension(d));
        for (const auto& v : allowed)
            squares.insert(v);
        for (const auto& v : pre) {
            if (!squares.contains(v)) {
                c.ok = false;
                c.failed_degree = d;
                c.witness = f.domain().element(v, d);
                return c;
            }
        }
    }
    return c;
}

}  // namespace polygem
