#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polygem/unstable.hpp"

namespace polygem {

/// Coefficients c_0..c_D of a graded dimension count, truncated at D.
class PoincareSeries {
public:
    PoincareSeries() = default;
    /// The zero series up to max_degree.
    explicit PoincareSeries(int max_degree);
    PoincareSeries(int max_degree, std::vector<std::int64_t> coefficients);

    static PoincareSeries one(int max_degree);

    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    std::int64_t& at(int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

    PoincareSeries truncated(int max_degree) const;
    /// Product truncated at the smaller of the two bounds.
    friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
    /// Power-series quotient; throws std::domain_error if the denominator has
    /// constant term other than 1 or a quotient coefficient is negative.
    PoincareSeries divided_by(const PoincareSeries& denominator) const;
    bool operator==(const PoincareSeries&) const = default;

    /// One `degree<TAB>dimension` row per degree.
    std::string to_tsv() const;

private:
    std::vector<std::int64_t> coeffs_;
};

enum class AlgebraKind { Polynomial, Exterior };

/// prod 1/(1 - t^d) or prod (1 + t^d) over the given generator degrees.
PoincareSeries free_algebra_series(std::span<const int> degrees, AlgebraKind kind,
                                   int max_degree);

/// Degrees of a basis of m through max_degree, with multiplicity.
std::vector<int> basis_degrees(const ModuleId& m, int max_degree);

/// Series of U(M): U(M) has a basis of square-free monomials in a basis of M,
/// so this is the exterior series on the basis degrees.
PoincareSeries unstable_algebra_series(const ModuleId& m, int max_degree);

/// Polynomial series on a basis of M / Sq_0 M. Agrees with
/// unstable_algebra_series whenever Sq_0 is injective on M.
PoincareSeries polynomial_on_sq0_quotient(const ModuleId& m, int max_degree);

}  // namespace polygem
