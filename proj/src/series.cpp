#include "polygem/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polygem {

PoincareSeries::PoincareSeries(int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("series truncation must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

PoincareSeries::PoincareSeries(int max_degree, std::vector<std::int64_t> coefficients)
    : PoincareSeries(max_degree)
{
    for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i)
        coeffs_[i] = coefficients[i];
}

PoincareSeries PoincareSeries::one(int max_degree)
{
    PoincareSeries s(max_degree);
    s.coeffs_[0] = 1;
    return s;
}

PoincareSeries PoincareSeries::truncated(int max_degree) const
{
    return PoincareSeries(std::min(max_degree, this->max_degree()), coeffs_);
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b)
{
    const int d = std::min(a.max_degree(), b.max_degree());
    PoincareSeries out(d);
    for (int i = 0; i <= d; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= d; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return out;
}

PoincareSeries PoincareSeries::divided_by(const PoincareSeries& denominator) const
{
    if (denominator.coeffs_.empty() || denominator[0] != 1)
        throw std::domain_error("series division needs a denominator with constant term 1");
    const int d = std::min(max_degree(), denominator.max_degree());
    PoincareSeries q(d);
    for (int i = 0; i <= d; ++i) {
        std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
        for (int j = 1; j <= i; ++j)
            c -= denominator[j] * q[i - j];
        if (c < 0)
            throw std::domain_error("series quotient has a negative coefficient in degree " +
                                    std::to_string(i));
        q.coeffs_[static_cast<std::size_t>(i)] = c;
    }
    return q;
}

std::string PoincareSeries::to_tsv() const
{
    std::ostringstream os;
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        os << d << '\t' << coeffs_[d] << '\n';
    return os.str();
}

PoincareSeries free_algebra_series(std::span<const int> degrees, AlgebraKind kind,
                                   int max_degree)
{
    PoincareSeries s = PoincareSeries::one(max_degree);
    for (int g : degrees) {
        if (g < 1)
            throw std::invalid_argument("free algebra generators need degree >= 1");
        if (g > max_degree)
            continue;
        if (kind == AlgebraKind::Polynomial) {
            // Multiply by 1/(1 - t^g) in place.
            for (int i = g; i <= max_degree; ++i)
                s.at(i) += s[i - g];
        } else {
            for (int i = max_degree; i >= g; --i)
                s.at(i) += s[i - g];
        }
    }
    return s;
}

std::vector<int> basis_degrees(const ModuleId& m, int max_degree)
{
    std::vector<int> out;
    for (int d = std::max(1, m.bottom_degree()); d <= max_degree; ++d)
        out.insert(out.end(), static_cast<std::size_t>(dimension(m, d)), d);
    return out;
}

PoincareSeries unstable_algebra_series(const ModuleId& m, int max_degree)
{
    return free_algebra_series(basis_degrees(m, max_degree), AlgebraKind::Exterior, max_degree);
}

PoincareSeries polynomial_on_sq0_quotient(const ModuleId& m, int max_degree)
{
    std::vector<int> degrees;
    for (int d = std::max(1, m.bottom_degree()); d <= max_degree; ++d) {
        const auto top = basis(m, d);
        int image = 0;
        if (d % 2 == 0) {
            std::vector<Label> hit;
            for (const auto& l : basis(m, d / 2)) {
                const auto s = sq_zero(ModuleElement(m, d / 2, {l}));
                hit.insert(hit.end(), s.labels().begin(), s.labels().end());
            }
            // Sq_0 sends basis labels to single labels on these modules; count distinct.
            std::sort(hit.begin(), hit.end());
            hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
            image = static_cast<int>(hit.size());
        }
        degrees.insert(degrees.end(), top.size() - static_cast<std::size_t>(image), d);
    }
    return free_algebra_series(degrees, AlgebraKind::Polynomial, max_degree);
}

}  // namespace polygem
