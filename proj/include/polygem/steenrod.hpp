#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polygem {

/// Sequence of Steenrod squares Sq^{i1} ... Sq^{ir}, read as a composite with
/// Sq^{ir} applied first. The empty sequence is the unit.
class SteenrodElement;
class AdmissibleMonomial;
SteenrodElement adem_reduce(std::span<const int> word);
std::vector<AdmissibleMonomial> admissible_monomials(int degree);

class AdmissibleMonomial {
public:
    AdmissibleMonomial() = default;
    /// Throws std::invalid_argument unless every entry is positive and
    /// i_j >= 2 i_{j+1}.
    explicit AdmissibleMonomial(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    bool is_unit() const { return entries_.empty(); }
    int degree() const;
    int excess() const;
    /// Entry order, then lexicographic.
    auto operator<=>(const AdmissibleMonomial&) const = default;

    static bool is_admissible(std::span<const int> word);
    static int excess_of(std::span<const int> word);

private:
    struct Unchecked {};
    AdmissibleMonomial(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}
    friend class SteenrodElement;
    friend SteenrodElement adem_reduce(std::span<const int> word);
    friend std::vector<AdmissibleMonomial> admissible_monomials(int degree);

    std::vector<int> entries_;
};

/// F2-linear combination of admissible monomials. Coefficients are implicit:
/// a monomial is either in the support or not.
class SteenrodElement {
public:
    SteenrodElement() = default;
    explicit SteenrodElement(AdmissibleMonomial m);

    static SteenrodElement zero() { return {}; }
    static SteenrodElement unit();
    /// Sq^i; Sq^0 is the unit.
    static SteenrodElement sq(int i);

    const std::vector<AdmissibleMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /// nullopt for zero; throws std::logic_error on an inhomogeneous element.
    std::optional<int> degree() const;

    SteenrodElement& operator+=(const SteenrodElement& other);
    friend SteenrodElement operator+(SteenrodElement a, const SteenrodElement& b) { return a += b; }
    bool operator==(const SteenrodElement&) const = default;

    std::string to_string() const;

private:
    friend SteenrodElement adem_reduce(std::span<const int> word);
    static SteenrodElement from_sorted(std::vector<AdmissibleMonomial> terms);

    std::vector<AdmissibleMonomial> terms_;
};

/// n choose k mod 2 (Lucas).
constexpr bool binomial_mod2(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

/// Rewrites the composite Sq^{w1} ... Sq^{wr} into the admissible basis using
/// the Adem relations. Throws std::invalid_argument on nonpositive entries.
SteenrodElement adem_reduce(std::span<const int> word);
inline SteenrodElement adem_reduce(std::initializer_list<int> word)
{
    return adem_reduce(std::span<const int>(word.begin(), word.size()));
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b);
inline SteenrodElement operator*(const SteenrodElement& a, const SteenrodElement& b)
{
    return multiply(a, b);
}

/// Milnor primitive Q_i, with Q_0 = Sq^1 and Q_{i+1} = [Sq^{2^{i+1}}, Q_i].
SteenrodElement milnor_q(int i);

/// All admissible monomials of the given degree, in ascending order.
std::vector<AdmissibleMonomial> admissible_monomials(int degree);

}  // namespace polygem
