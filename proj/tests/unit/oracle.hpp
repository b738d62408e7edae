#pragma once

// Test-only oracles: everything here acts on polynomial algebras directly and
// never calls the Adem rewriting it is used to check.

#include <vector>

#include "polygem/polynomial.hpp"

namespace polygem::testing {

/// Every word of positive integers with the given total and at most
/// `max_letters` letters.
inline std::vector<std::vector<int>> words_of_degree(int total, int max_letters)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!cur.empty())
                out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_letters)
            return;
        for (int i = 1; i <= remaining; ++i) {
            cur.push_back(i);
            self(self, remaining - i);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

/// All monomials in t variables of degree <= max_degree.
inline std::vector<PolyElement> monomials_up_to(int variables, int max_degree)
{
    std::vector<PolyElement> out;
    for (int d = 0; d <= max_degree; ++d)
        for (auto& e : monomials_of_degree(variables, d))
            out.push_back(PolyElement::monomial(e));
    return out;
}

/// Two Steenrod elements act identically on every monomial of F2[x_1..x_t]
/// up to the given degree.
inline bool same_action(const SteenrodElement& a, const SteenrodElement& b, int variables,
                        int max_degree)
{
    for (const auto& p : monomials_up_to(variables, max_degree))
        if (!(act_on_polynomial(a, p) == act_on_polynomial(b, p)))
            return false;
    return true;
}

/// Q_i as a derivation computed from scratch: Q_i x_j = x_j^{2^{i+1}}.
inline PolyElement derivation_q(int i, const PolyElement& p)
{
    std::vector<PolyElement::Exponents> out;
    for (const auto& m : p.monomials()) {
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] % 2 == 0)
                continue;  // even exponent: d(x^a) = a x^{a-1} dx vanishes
            auto e = m;
            e[v] += (1 << (i + 1)) - 1;
            out.push_back(std::move(e));
        }
    }
    return PolyElement(p.variables(), std::move(out));
}

}  // namespace polygem::testing
