#include "polygem/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polygem {

namespace {

void canonicalize(std::vector<PolyElement::Exponents>& v)
{
    std::sort(v.begin(), v.end());
    std::vector<PolyElement::Exponents> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(v[i]);
        i = j;
    }
    v = std::move(out);
}

int total(const PolyElement::Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

// Distributes k over the variables, k_i a bitwise submask of a_i.
void square_monomial(int k, const PolyElement::Exponents& a, std::size_t var, int tail_degree,
                     PolyElement::Exponents& current, std::vector<PolyElement::Exponents>& out)
{
    if (var == a.size()) {
        if (k == 0)
            out.push_back(current);
        return;
    }
    const int ai = a[var];
    const int rest = tail_degree - ai;
    // k_i ranges over submasks of a_i with k - k_i <= rest.
    for (int ki = ai;; ki = (ki - 1) & ai) {
        if (ki <= k && k - ki <= rest) {
            current[var] = ai + ki;
            square_monomial(k - ki, a, var + 1, rest, current, out);
        }
        if (ki == 0)
            break;
    }
    current[var] = ai;
}

}  // namespace

PolyElement::PolyElement(int variables, std::vector<Exponents> monomials)
    : variables_(variables), monomials_(std::move(monomials))
{
    for (const auto& m : monomials_) {
        if (static_cast<int>(m.size()) != variables_)
            throw std::invalid_argument("monomial has the wrong number of variables");
        for (int e : m)
            if (e < 0)
                throw std::invalid_argument("negative exponent");
    }
    canonicalize(monomials_);
}

PolyElement PolyElement::product_of_variables(int variables)
{
    return PolyElement(variables, {Exponents(variables, 1)});
}

PolyElement PolyElement::monomial(Exponents exponents)
{
    const int t = static_cast<int>(exponents.size());
    return PolyElement(t, {std::move(exponents)});
}

bool PolyElement::is_homogeneous() const
{
    for (const auto& m : monomials_)
        if (total(m) != total(monomials_.front()))
            return false;
    return true;
}

int PolyElement::degree() const
{
    if (monomials_.empty())
        throw std::logic_error("degree of the zero polynomial");
    if (!is_homogeneous())
        throw std::logic_error("degree of an inhomogeneous polynomial");
    return total(monomials_.front());
}

PolyElement& PolyElement::operator+=(const PolyElement& other)
{
    if (other.variables_ != variables_)
        throw std::invalid_argument("variable-count mismatch");
    std::vector<Exponents> merged;
    std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                  other.monomials_.end(), std::back_inserter(merged));
    monomials_ = std::move(merged);
    return *this;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b)
{
    if (a.variables_ != b.variables_)
        throw std::invalid_argument("variable-count mismatch");
    std::vector<PolyElement::Exponents> out;
    out.reserve(a.monomials_.size() * b.monomials_.size());
    for (const auto& x : a.monomials_) {
        for (const auto& y : b.monomials_) {
            PolyElement::Exponents e(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                e[i] = x[i] + y[i];
            out.push_back(std::move(e));
        }
    }
    return PolyElement(a.variables_, std::move(out));
}

std::string PolyElement::to_string() const
{
    if (monomials_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (i)
            os << " + ";
        bool any = false;
        for (std::size_t v = 0; v < monomials_[i].size(); ++v) {
            const int e = monomials_[i][v];
            if (e == 0)
                continue;
            if (any)
                os << "*";
            os << "x" << (v + 1);
            if (e > 1)
                os << "^" << e;
            any = true;
        }
        if (!any)
            os << "1";
    }
    return os.str();
}

PolyElement apply_square(int k, const PolyElement& p)
{
    if (k < 0)
        throw std::invalid_argument("Sq^k needs k >= 0");
    std::vector<PolyElement::Exponents> out;
    for (const auto& m : p.monomials()) {
        PolyElement::Exponents current = m;
        square_monomial(k, m, 0, total(m), current, out);
    }
    return PolyElement(p.variables(), std::move(out));
}

PolyElement act_word_on_polynomial(std::span<const int> word, const PolyElement& p)
{
    PolyElement result = p;
    for (auto it = word.rbegin(); it != word.rend() && !result.is_zero(); ++it)
        result = apply_square(*it, result);
    return result;
}

PolyElement act_on_polynomial(const SteenrodElement& a, const PolyElement& p)
{
    if (!p.is_homogeneous())
        throw std::invalid_argument("act_on_polynomial needs a homogeneous polynomial");
    PolyElement result(p.variables());
    for (const auto& m : a.terms())
        result += act_word_on_polynomial(m.entries(), p);
    return result;
}

std::vector<PolyElement::Exponents> monomials_of_degree(int variables, int degree)
{
    std::vector<PolyElement::Exponents> out;
    if (variables <= 0)
        return out;
    PolyElement::Exponents e(variables, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == variables - 1) {
            e[var] = remaining;
            out.push_back(e);
            return;
        }
        for (int x = remaining; x >= 0; --x) {
            e[var] = x;
            self(self, var + 1, remaining - x);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polygem
