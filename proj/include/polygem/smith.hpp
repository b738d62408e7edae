#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polygem/graded.hpp"
#include "polygem/series.hpp"

namespace polygem {

/// Steenrod-linear map between sums of unstable modules, fixed by its values
/// on the generators of a cyclic domain.
class PrimitiveMap {
public:
    PrimitiveMap() = default;
    /// Every domain summand must be cyclic; all values start at zero.
    PrimitiveMap(GradedSum domain, GradedSum codomain);

    const GradedSum& domain() const { return domain_; }
    const GradedSum& codomain() const { return codomain_; }

    /// Image of the generator of domain summand i. Throws std::invalid_argument
    /// if the degree is wrong or the value does not respect the relations of
    /// the summand (Sq^1 for Prime, Sq_0 for ReducedFree).
    void set_value(std::size_t i, const SumElement& value);
    const SumElement& value(std::size_t i) const { return values_.at(i); }

    /// Appends a codomain summand; existing values get a zero component.
    std::size_t add_codomain_summand(const ModuleId& m);
    std::size_t add_domain_summand(const ModuleId& m, const SumElement& value);

    SumElement apply(const SumElement& x) const;
    /// Columns: images of domain.basis(d) in codomain coordinates.
    std::vector<gf2::BitVec> matrix(int d) const;
    /// Dimension of the image in degree d.
    std::size_t rank(int d) const;

private:
    GradedSum domain_;
    GradedSum codomain_;
    std::vector<SumElement> values_;
};

/// Null space of f, degree by degree.
struct GradedKernel {
    int max_degree = 0;
    std::vector<std::vector<SumElement>> by_degree;  // index = degree

    std::size_t dimension(int d) const { return by_degree.at(static_cast<std::size_t>(d)).size(); }
};

GradedKernel primitive_kernel(const PrimitiveMap& f, int max_degree);

/// Degrees of a basis of K / Sq_0 K for the kernel K, through its max degree.
std::vector<int> kernel_generator_degrees(const PrimitiveMap& f, const GradedKernel& k);

struct TorSeries {
    std::vector<int> exterior_degrees;
    PoincareSeries series;
};

/// Koszul Tor of a polynomial algebra: one exterior generator of degree
/// |x| - 1 per polynomial generator. Rejects degrees <= 1.
TorSeries tor_series(std::span<const int> kernel_generator_degrees, int max_degree);

struct FiberSeriesReport {
    PoincareSeries quotient;  // H*E // im
    std::vector<int> exterior_degrees;
    PoincareSeries exterior;
    PoincareSeries combined;
    GradedKernel kernel;

    /// Sections `# series`, `# exterior`, `# kernel`, as TSV.
    std::string to_tsv() const;
};

/// Series of the associated graded of H* of the fiber. Throws
/// std::domain_error when the division step produces a negative coefficient.
FiberSeriesReport gr_fiber_series(const PrimitiveMap& f, const PoincareSeries& total_space,
                                  int max_degree);

struct CupSquareCheck {
    bool ok = true;
    int degrees_checked = 0;
    std::optional<int> failed_degree;
    std::optional<SumElement> witness;  // in the domain
};

/// Checks f^{-1}(Sq_0 codomain) in Sq_0 domain in every degree <= D. In odd
/// degrees this says the kernel vanishes.
CupSquareCheck verify_cup_square_kernel(const PrimitiveMap& f, int max_degree);

}  // namespace polygem
