#include "polygem/steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace polygem {

namespace {

// Sorts and cancels pairs, leaving the F2 canonical form.
template <typename T>
void cancel_pairs(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    std::vector<T> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(std::move(v[i]));
        i = j;
    }
    v = std::move(out);
}

class ReductionCache {
public:
    bool find(const std::vector<int>& word, std::vector<std::vector<int>>& out) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(word);
        if (it == table_.end())
            return false;
        out = it->second;
        return true;
    }
    void store(const std::vector<int>& word, const std::vector<std::vector<int>>& value)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(word, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::vector<int>, std::vector<std::vector<int>>> table_;
};

ReductionCache& cache()
{
    static ReductionCache c;
    return c;
}

std::vector<std::vector<int>> reduce_word(const std::vector<int>& word)
{
    std::size_t pos = word.size();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] < 2 * word[i + 1]) {
            pos = i;
            break;
        }
    }
    if (pos == word.size())
        return {word};

    std::vector<std::vector<int>> result;
    if (cache().find(word, result))
        return result;

    const int a = word[pos];
    const int b = word[pos + 1];
    for (int j = 0; 2 * j <= a; ++j) {
        if (!binomial_mod2(b - 1 - j, a - 2 * j))
            continue;
        std::vector<int> next(word.begin(), word.begin() + pos);
        next.push_back(a + b - j);
        if (j > 0)
            next.push_back(j);
        next.insert(next.end(), word.begin() + pos + 2, word.end());
        auto part = reduce_word(next);
        result.insert(result.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    cancel_pairs(result);
    cache().store(word, result);
    return result;
}

}  // namespace

AdmissibleMonomial::AdmissibleMonomial(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_)
        if (e <= 0)
            throw std::invalid_argument("Steenrod square indices must be positive");
    if (!is_admissible(entries_))
        throw std::invalid_argument("monomial is not admissible: need i_j >= 2*i_{j+1}");
}

int AdmissibleMonomial::degree() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int AdmissibleMonomial::excess() const
{
    return excess_of(entries_);
}

bool AdmissibleMonomial::is_admissible(std::span<const int> word)
{
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] < 2 * word[i + 1])
            return false;
    return true;
}

int AdmissibleMonomial::excess_of(std::span<const int> word)
{
    if (word.empty())
        return 0;
    return 2 * word.front() - std::accumulate(word.begin(), word.end(), 0);
}

SteenrodElement::SteenrodElement(AdmissibleMonomial m)
{
    terms_.push_back(std::move(m));
}

SteenrodElement SteenrodElement::unit()
{
    return SteenrodElement(AdmissibleMonomial{});
}

SteenrodElement SteenrodElement::sq(int i)
{
    if (i < 0)
        throw std::invalid_argument("Sq^i needs i >= 0");
    if (i == 0)
        return unit();
    return SteenrodElement(AdmissibleMonomial({i}, AdmissibleMonomial::Unchecked{}));
}

SteenrodElement SteenrodElement::from_sorted(std::vector<AdmissibleMonomial> terms)
{
    SteenrodElement e;
    e.terms_ = std::move(terms);
    return e;
}

bool SteenrodElement::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.degree() != terms_.front().degree())
            return false;
    return true;
}

std::optional<int> SteenrodElement::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    if (!is_homogeneous())
        throw std::logic_error("degree of an inhomogeneous Steenrod element");
    return terms_.front().degree();
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& other)
{
    std::vector<AdmissibleMonomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

std::string SteenrodElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        const auto& e = terms_[i].entries();
        if (e.empty()) {
            os << "1";
            continue;
        }
        os << "Sq(";
        for (std::size_t j = 0; j < e.size(); ++j)
            os << (j ? "," : "") << e[j];
        os << ")";
    }
    return os.str();
}

SteenrodElement adem_reduce(std::span<const int> word)
{
    for (int w : word)
        if (w <= 0)
            throw std::invalid_argument("Steenrod square indices must be positive");
    auto reduced = reduce_word(std::vector<int>(word.begin(), word.end()));
    std::vector<AdmissibleMonomial> terms;
    terms.reserve(reduced.size());
    for (auto& r : reduced)
        terms.push_back(AdmissibleMonomial(std::move(r), AdmissibleMonomial::Unchecked{}));
    return SteenrodElement::from_sorted(std::move(terms));
}

SteenrodElement multiply(const SteenrodElement& a, const SteenrodElement& b)
{
    SteenrodElement result;
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            std::vector<int> word = x.entries();
            word.insert(word.end(), y.entries().begin(), y.entries().end());
            result += adem_reduce(word);
        }
    }
    return result;
}

SteenrodElement milnor_q(int i)
{
    if (i < 0)
        throw std::invalid_argument("milnor_q needs i >= 0");
    SteenrodElement q = SteenrodElement::sq(1);
    for (int j = 1; j <= i; ++j) {
        const auto s = SteenrodElement::sq(1 << j);
        q = s * q + q * s;
    }
    return q;
}

std::vector<AdmissibleMonomial> admissible_monomials(int degree)
{
    std::vector<AdmissibleMonomial> out;
    if (degree < 0)
        return out;
    std::vector<int> current;
    // Entries are chosen left to right; the tail after an entry i has
    // degree <= i - 1 + (i/2 - 1) + ..., bounded by i - 1.
    auto rec = [&](auto&& self, int remaining, int max_first) -> void {
        if (remaining == 0) {
            out.push_back(AdmissibleMonomial(current, AdmissibleMonomial::Unchecked{}));
            return;
        }
        for (int i = std::min(remaining, max_first); i >= 1; --i) {
            if (remaining - i > i - 1)
                break;
            current.push_back(i);
            self(self, remaining - i, i / 2);
            current.pop_back();
        }
    };
    rec(rec, degree, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polygem
