#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polygem/gf2.hpp"
#include "polygem/series.hpp"
#include "polygem/unstable.hpp"

namespace polygem {

enum class GeneratorOrigin { IbarOrbit, Tau, Lambda, SubILabel };

std::string to_string(GeneratorOrigin o);

struct CatalogueEntry {
    int degree = 0;
    std::string name;  // "ibar4", "tau1", "lambda2"
    GeneratorOrigin origin = GeneratorOrigin::IbarOrbit;
    bool primitive = false;
    std::string diagonal;  // empty for primitives
};

/// Algebra generators of H*E_n over the Steenrod algebra.
struct GeneratorCatalogue {
    int n = 0;
    int k = 0;  // 2^{k-1} <= n < 2^k
    std::vector<CatalogueEntry> entries;

    /// One `degree<TAB>name<TAB>primitive` row per entry.
    std::string to_tsv() const;
};

/// Throws std::invalid_argument for n < 2.
GeneratorCatalogue milgram_generators(int n);

/// A polynomial generator of U(I_{2n-1}), given by a SubI representative.
struct PolynomialGenerator {
    int degree = 0;
    ModuleElement representative;  // in SubI(2n-1)
    /// Not in the image of the positive-degree Steenrod operations.
    bool indecomposable = false;
    /// Catalogue name for indecomposables, else the representative's text.
    std::string name;
    bool primitive = false;
};

/// Per degree <= D, a basis of I_{2n-1} / Sq_0 I_{2n-1}. Within a degree the
/// Steenrod indecomposables come first, then the remaining labels.
std::vector<PolynomialGenerator> polynomial_generators_P(int n, int max_degree);

/// Representatives of Q(M) = M / (positive Steenrod operations) M in degree d.
std::vector<ModuleElement> indecomposables(const ModuleId& m, int d);

/// Subspace of M_d spanned by Sq^J x over admissible J, for each x in `gens`,
/// as label-coordinate vectors against basis(m, d).
std::vector<gf2::BitVec> steenrod_span(const ModuleId& m, std::span<const ModuleElement> gens,
                                       int d);

enum class SpaceKind { MilgramE, EMF2, EMZ, EMZ2h };

struct SpaceFactor {
    SpaceKind kind = SpaceKind::EMF2;
    int m = 2;
    int h = 0;  // only for EMZ2h

    static SpaceFactor milgram(int m) { return {SpaceKind::MilgramE, m, 0}; }
    static SpaceFactor em_f2(int m) { return {SpaceKind::EMF2, m, 0}; }
    static SpaceFactor em_z(int m) { return {SpaceKind::EMZ, m, 0}; }
    static SpaceFactor em_z2h(int m, int h) { return {SpaceKind::EMZ2h, m, h}; }

    /// "E(4)", "KF2(2)", "KZ(3)", "KZ2h(3,2)".
    std::string to_string() const;
    /// Unstable modules whose sum models the primitives of H* of the space.
    std::vector<ModuleId> primitive_summands() const;

    auto operator<=>(const SpaceFactor&) const = default;
};

/// Inverse of SpaceFactor::to_string; throws std::invalid_argument.
SpaceFactor parse_space_factor(std::string_view text);

PoincareSeries series_of_space(const SpaceFactor& f, int max_degree);
PoincareSeries series_of_product(std::span<const SpaceFactor> factors, int max_degree);

}  // namespace polygem
