#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polygem/gf2.hpp"
#include "polygem/unstable.hpp"

namespace polygem {

class GradedSum;

/// Homogeneous element of a direct sum: one component per summand.
class SumElement {
public:
    SumElement() = default;
    /// Zero of the given sum in degree d.
    SumElement(const GradedSum& sum, int d);
    /// Components must share degree d.
    static SumElement from_parts(std::vector<ModuleElement> parts, int d);

    int degree() const { return degree_; }
    std::size_t size() const { return parts_.size(); }
    const ModuleElement& part(std::size_t i) const { return parts_.at(i); }
    const std::vector<ModuleElement>& parts() const { return parts_; }
    /// Replaces component i; degree and module must match.
    void set_part(std::size_t i, ModuleElement x);
    bool is_zero() const;

    SumElement& operator+=(const SumElement& other);
    friend SumElement operator+(SumElement a, const SumElement& b) { return a += b; }
    bool operator==(const SumElement&) const = default;

    /// Terms joined by " + ", each tagged with its summand as `@k`.
    std::string to_string() const;

private:
    int degree_ = 0;
    std::vector<ModuleElement> parts_;
};

/// A finite direct sum of unstable modules with per-degree coordinates.
class GradedSum {
public:
    struct Entry {
        std::size_t summand;
        Label label;
    };

    GradedSum() = default;
    explicit GradedSum(std::vector<ModuleId> summands) : summands_(std::move(summands)) {}

    const std::vector<ModuleId>& summands() const { return summands_; }
    std::size_t add(const ModuleId& m)
    {
        summands_.push_back(m);
        return summands_.size() - 1;
    }

    /// Ordered basis in degree d: summand by summand, then module basis order.
    std::vector<Entry> basis(int d) const;
    std::size_t dimension(int d) const;

    /// Coordinates of x against basis(x.degree()).
    gf2::BitVec coordinates(const SumElement& x) const;
    SumElement element(const gf2::BitVec& v, int d) const;
    /// The element concentrated in one summand.
    SumElement inject(std::size_t summand, const ModuleElement& x) const;

private:
    std::vector<ModuleId> summands_;
};

/// Componentwise Steenrod action.
SumElement act(const SteenrodElement& a, const SumElement& x);
SumElement sq_zero(const SumElement& x);

/// Coordinates of Sq_0 applied to each basis element in degree d, as
/// vectors in degree 2d.
std::vector<gf2::BitVec> sq_zero_image(const GradedSum& sum, int d);

}  // namespace polygem
