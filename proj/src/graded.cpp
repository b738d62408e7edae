#include "polygem/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polygem {

SumElement::SumElement(const GradedSum& sum, int d) : degree_(d)
{
    parts_.reserve(sum.summands().size());
    for (const auto& m : sum.summands())
        parts_.emplace_back(m, d);
}

void SumElement::set_part(std::size_t i, ModuleElement x)
{
    if (x.degree() != degree_ || !(x.module() == parts_.at(i).module()))
        throw std::invalid_argument("component " + std::to_string(i) + " expects " +
                                    parts_.at(i).module().to_string() + " in degree " +
                                    std::to_string(degree_));
    parts_[i] = std::move(x);
}

bool SumElement::is_zero() const
{
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const ModuleElement& x) { return x.is_zero(); });
}

SumElement& SumElement::operator+=(const SumElement& other)
{
    if (other.parts_.size() != parts_.size() || other.degree_ != degree_)
        throw std::invalid_argument("adding elements of different sums or degrees");
    for (std::size_t i = 0; i < parts_.size(); ++i)
        parts_[i] += other.parts_[i];
    return *this;
}

std::string SumElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].is_zero())
            continue;
        // Re-split the component so every term carries its summand tag.
        for (const auto& l : parts_[i].labels()) {
            const ModuleElement term(parts_[i].module(), degree_, {l});
            os << (first ? "" : " + ") << term.to_string() << '@' << i;
            first = false;
        }
    }
    return first ? "0" : os.str();
}

std::vector<GradedSum::Entry> GradedSum::basis(int d) const
{
    std::vector<Entry> out;
    for (std::size_t s = 0; s < summands_.size(); ++s)
        for (auto& l : polygem::basis(summands_[s], d))
            out.push_back({s, std::move(l)});
    return out;
}

std::size_t GradedSum::dimension(int d) const
{
    std::size_t n = 0;
    for (const auto& m : summands_)
        n += static_cast<std::size_t>(polygem::dimension(m, d));
    return n;
}

gf2::BitVec GradedSum::coordinates(const SumElement& x) const
{
    if (x.size() != summands_.size())
        throw std::invalid_argument("element does not belong to this sum");
    gf2::BitVec v(dimension(x.degree()));
    std::size_t offset = 0;
    for (std::size_t s = 0; s < summands_.size(); ++s) {
        const auto b = polygem::basis(summands_[s], x.degree());
        for (const auto& l : x.part(s).labels()) {
            const auto it = std::lower_bound(b.begin(), b.end(), l);
            if (it == b.end() || *it != l)
                throw std::logic_error("label missing from basis of " +
                                       summands_[s].to_string());
            v.flip(offset + static_cast<std::size_t>(it - b.begin()));
        }
        offset += b.size();
    }
    return v;
}

SumElement GradedSum::element(const gf2::BitVec& v, int d) const
{
    SumElement x(*this, d);
    std::size_t offset = 0;
    for (std::size_t s = 0; s < summands_.size(); ++s) {
        auto b = polygem::basis(summands_[s], d);
        std::vector<Label> labels;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (v.get(offset + j))
                labels.push_back(std::move(b[j]));
        offset += b.size();
        if (!labels.empty())
            x.set_part(s, ModuleElement(summands_[s], d, std::move(labels)));
    }
    return x;
}

SumElement GradedSum::inject(std::size_t summand, const ModuleElement& x) const
{
    SumElement out(*this, x.degree());
    out.set_part(summand, x);
    return out;
}

SumElement SumElement::from_parts(std::vector<ModuleElement> parts, int d)
{
    for (const auto& p : parts)
        if (p.degree() != d)
            throw std::invalid_argument("component degree differs from " + std::to_string(d));
    SumElement x;
    x.degree_ = d;
    x.parts_ = std::move(parts);
    return x;
}

SumElement act(const SteenrodElement& a, const SumElement& x)
{
    const int d = a.is_zero() ? x.degree() : x.degree() + *a.degree();
    std::vector<ModuleElement> parts;
    parts.reserve(x.size());
    for (const auto& p : x.parts())
        parts.push_back(act(a, p));
    return SumElement::from_parts(std::move(parts), d);
}

SumElement sq_zero(const SumElement& x)
{
    std::vector<ModuleElement> parts;
    parts.reserve(x.size());
    for (const auto& p : x.parts())
        parts.push_back(sq_zero(p));
    return SumElement::from_parts(std::move(parts), 2 * x.degree());
}

std::vector<gf2::BitVec> sq_zero_image(const GradedSum& sum, int d)
{
    std::vector<gf2::BitVec> out;
    for (const auto& e : sum.basis(d)) {
        const ModuleElement x(sum.summands()[e.summand], d, {e.label});
        out.push_back(sum.coordinates(sum.inject(e.summand, sq_zero(x))));
    }
    return out;
}

}  // namespace polygem
