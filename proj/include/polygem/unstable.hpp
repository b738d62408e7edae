#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "polygem/polynomial.hpp"
#include "polygem/steenrod.hpp"

namespace polygem {

enum class ModuleKind {
    Free,         // F(n), generator i_n
    ReducedFree,  // F(n)/Sq_0 F(n), generator ibar_n
    Prime,        // F'(n): free on iprime_n subject to Sq^1 iprime_n = 0
    SubI,         // submodule of F(m) on admissible words with an odd entry
    WedgeF1,      // n-th exterior power of F(1) inside F2[u]
};

/// Names one of the unstable modules. For the cyclic kinds and SubI the
/// parameter is the degree of the (ambient) generator; for WedgeF1 it is the
/// number of wedge factors.
struct ModuleId {
    ModuleKind kind = ModuleKind::Free;
    int param = 1;

    static ModuleId free(int n);
    static ModuleId reduced_free(int n);
    static ModuleId prime(int n);
    /// Sub-module of F(m); m must be odd.
    static ModuleId sub_i(int m);
    static ModuleId wedge(int n);

    bool is_cyclic() const
    {
        return kind == ModuleKind::Free || kind == ModuleKind::ReducedFree ||
               kind == ModuleKind::Prime;
    }
    /// Lowest degree in which the module can be nonzero.
    int bottom_degree() const;
    /// e.g. "Free(2)".
    std::string to_string() const;

    auto operator<=>(const ModuleId&) const = default;
};

/// A basis label: an admissible sequence for the cyclic kinds and SubI, or
/// the strictly increasing exponents a_1 < ... < a_n of u^{2^{a_1}} ^ ... ^
/// u^{2^{a_n}} for WedgeF1.
using Label = std::vector<int>;

/// Empty string when the label is a valid basis element of m, else the
/// violated condition.
std::string label_violation(const ModuleId& m, const Label& label);
int label_degree(const ModuleId& m, const Label& label);

/// Homogeneous element of a module, as a set of basis labels.
class ModuleElement {
public:
    ModuleElement() = default;
    /// Zero element in the given degree.
    ModuleElement(ModuleId module, int degree) : module_(module), degree_(degree) {}
    /// Validates the labels; repeated labels cancel in pairs.
    ModuleElement(ModuleId module, int degree, std::vector<Label> labels);

    /// i_n, ibar_n or iprime_n.
    static ModuleElement generator(const ModuleId& m);

    const ModuleId& module() const { return module_; }
    int degree() const { return degree_; }
    const std::vector<Label>& labels() const { return labels_; }
    bool is_zero() const { return labels_.empty(); }

    ModuleElement& operator+=(const ModuleElement& other);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    bool operator==(const ModuleElement&) const = default;

    std::string to_string() const;

private:
    friend ModuleElement make_canonical(ModuleId, int, std::vector<Label>);
    ModuleId module_;
    int degree_ = 0;
    std::vector<Label> labels_;
};

/// Complete, ordered basis of m in degree d.
std::vector<Label> basis(const ModuleId& m, int d);
int dimension(const ModuleId& m, int d);

/// Action of a homogeneous Steenrod element. A zero operator gives zero in
/// the degree of x. Throws std::invalid_argument on inhomogeneous input and
/// std::logic_error if a SubI reduction leaves the submodule.
ModuleElement act(const SteenrodElement& a, const ModuleElement& x);
/// Sq^{|x|} x.
ModuleElement sq_zero(const ModuleElement& x);
/// Sq^{|x|-1} x; throws on degree 0.
ModuleElement sq_one(const ModuleElement& x);

/// Sq^I i_n |-> Sq^I (x_1 ... x_n), for x in a Free module.
PolyElement embed_polynomial(const ModuleElement& x);
/// u^{2^{a_1}} ^ ... ^ u^{2^{a_n}} |-> sum over permutations of
/// prod_j x_{pi(j)}^{2^{a_j}}, an injective map of unstable modules.
PolyElement wedge_polynomial(const ModuleElement& x);

/// Q_0 Q_1 ... Q_{n-2} i_n in Free(n), of degree 2^n - 1. Requires n >= 2.
ModuleElement omega(int n);
/// u ^ u^2 ^ ... ^ u^{2^{n-1}} in WedgeF1(n).
ModuleElement wedge_image(int n);

/// Product Q_{first} Q_{first+1} ... Q_{last} in the Steenrod algebra; the
/// unit when the range is empty.
SteenrodElement milnor_product(int first, int last);

}  // namespace polygem
