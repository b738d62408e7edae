#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polygem/milgram.hpp"
#include "polygem/smith.hpp"

namespace polygem {

/// Malformed input file; carries the 1-based line number.
class InputError : public std::invalid_argument {
public:
    InputError(int line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// X = fiber of f : E -> F, presented by f* on the primitives M of H*F with
/// values in the primitives L of H*E.
struct TwoPolyGemInput {
    std::vector<SpaceFactor> e_factors;
    std::vector<SpaceFactor> f_factors;
    /// f* : M -> L; generators without a value line map to zero.
    PrimitiveMap map;
    /// Generator tokens of the summands, e.g. "i(2)", "iprime(3)#2".
    std::vector<std::string> m_names;
    std::vector<std::string> l_names;

    const GradedSum& m() const { return map.domain(); }
    const GradedSum& l() const { return map.codomain(); }
};

/// Reads `E: ...`, `F: ...` and `f(gen) = expr` lines; `#` starts a comment
/// line. Throws InputError.
TwoPolyGemInput parse_two_polygem(std::string_view text);

/// Q(f*) : Q(M) -> Q(L), one basis element per generator.
struct IndecomposableMap {
    /// For each M summand, the L summands whose generator occurs in its value.
    std::vector<std::vector<std::size_t>> columns;
    bool injective = true;
    /// M summands (of one degree) whose generators sum to a kernel element;
    /// generators of Free type are used alone when possible.
    std::vector<std::size_t> kernel;
    /// L summands whose generators complete the image to a basis of Q(L).
    std::vector<std::size_t> cokernel;
};

IndecomposableMap indecomposables(const TwoPolyGemInput& input);

struct Lemma2Certificate {
    int n = 0;
    int r_max = 0;
    /// Q_0...Q_{n-1} kills every value term through the polynomial embedding.
    bool value_annihilated = false;
    /// Same, acting on the module elements directly.
    bool value_annihilated_in_module = false;
    /// Sq_0(omega) = Q_0...Q_{n-1} i_n.
    bool sq_zero_relation = false;
    /// omega and u ^ u^2 ^ ... ^ u^{2^{n-1}} have the same polynomial image.
    bool wedge_model = false;
    /// Count of r in [0, r_max] with (Sq_1)^r nonzero in the wedge model.
    int nonzero_iterates = 0;
    std::string last_iterate;

    bool ok() const
    {
        return value_annihilated && value_annihilated_in_module && sq_zero_relation &&
               wedge_model && nonzero_iterates == r_max + 1;
    }
    std::vector<std::string> lines() const;
};

/// Checks the two parts of the vanishing lemma for f*(i_n) = sum of the
/// given terms, each in Free(t) or Prime(t) with t < n and of degree n.
/// Throws std::invalid_argument when a term violates that shape.
Lemma2Certificate lemma2_check(int n, const std::vector<ModuleElement>& value_terms, int r_max);

enum class Case { Trivial, OneA, OneB, TwoA, TwoB };
std::string to_string(Case c);

struct CaseVerdict {
    Case tag = Case::Trivial;
    std::string witness;       // element text, empty for trivial
    std::string witness_kind;  // "cokernel generator", "omega", ...
    std::string conclusion;
    bool certified = false;
    std::vector<std::string> certificate;
    std::optional<Lemma2Certificate> lemma2;

    /// `key<TAB>value` lines, then one `certificate<TAB>...` line per check.
    std::string to_tsv() const;
};

/// Decides the case and certifies a non-nilpotent witness through degree D
/// and r_max iterations of Sq_1.
CaseVerdict classify(const TwoPolyGemInput& input, int max_degree, int r_max = 20);

enum class IntegralKind { Z, Z2h };

/// Series of H*K(Z, n) or H*K(Z/2^h, n) as U of Prime modules.
PoincareSeries lemma3_dims(IntegralKind kind, int n, int max_degree);

}  // namespace polygem
