#pragma once

#include <string>
#include <vector>

#include "polygem/steenrod.hpp"

namespace polygem {

/// Element of F2[x_1, ..., x_t] with every x_i in degree 1. Monomials are
/// exponent vectors of length t.
class PolyElement {
public:
    using Exponents = std::vector<int>;

    PolyElement() = default;
    explicit PolyElement(int variables) : variables_(variables) {}
    PolyElement(int variables, std::vector<Exponents> monomials);

    /// x_1 x_2 ... x_t
    static PolyElement product_of_variables(int variables);
    static PolyElement monomial(Exponents exponents);

    int variables() const { return variables_; }
    const std::vector<Exponents>& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }
    bool is_homogeneous() const;
    /// Throws std::logic_error on zero or inhomogeneous input.
    int degree() const;

    PolyElement& operator+=(const PolyElement& other);
    friend PolyElement operator+(PolyElement a, const PolyElement& b) { return a += b; }
    friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
    bool operator==(const PolyElement&) const = default;

    std::string to_string() const;

private:
    int variables_ = 0;
    std::vector<Exponents> monomials_;
};

/// Sq^k on a polynomial via the Cartan formula, Sq^k x^a = C(a,k) x^{a+k}.
PolyElement apply_square(int k, const PolyElement& p);

/// Action of a Steenrod element; each admissible monomial is applied right to
/// left. Throws std::invalid_argument if p is not homogeneous.
PolyElement act_on_polynomial(const SteenrodElement& a, const PolyElement& p);

/// Composite action of a raw (not necessarily admissible) word.
PolyElement act_word_on_polynomial(std::span<const int> word, const PolyElement& p);

/// All monomials of the given degree in t variables.
std::vector<PolyElement::Exponents> monomials_of_degree(int variables, int degree);

}  // namespace polygem
