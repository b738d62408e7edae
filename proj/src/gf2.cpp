#include "polygem/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace polygem::gf2 {

bool BitVec::is_zero() const
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVec::lowest() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

std::size_t BitVec::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::size_t> BitVec::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out.push_back(i);
    return out;
}

BitVec& BitVec::operator^=(const BitVec& other)
{
    if (other.size_ != size_)
        throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

BitVec BitVec::head(std::size_t n) const
{
    BitVec out(n);
    for (std::size_t i = 0; i < n && i < size_; ++i)
        if (get(i))
            out.set(i);
    return out;
}

BitVec BitVec::concat(const BitVec& other) const
{
    BitVec out(size_ + other.size_);
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out.set(i);
    for (std::size_t i = 0; i < other.size_; ++i)
        if (other.get(i))
            out.set(size_ + i);
    return out;
}

BitVec EchelonBasis::reduce(BitVec v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("EchelonBasis dimension mismatch");
    // Rows have their pivot as lowest bit, so a single ascending sweep suffices.
    for (std::size_t p = v.lowest(); p < dim_; ++p)
        if (v.get(p) && pivot_of_[p] >= 0)
            v ^= rows_[static_cast<std::size_t>(pivot_of_[p])];
    return v;
}

bool EchelonBasis::insert(const BitVec& v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("EchelonBasis dimension mismatch");
    BitVec w = v;
    for (std::size_t p = w.lowest(); p < dim_; p = w.lowest()) {
        const int r = pivot_of_[p];
        if (r < 0) {
            pivot_of_[p] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(w));
            return true;
        }
        w ^= rows_[static_cast<std::size_t>(r)];
    }
    return false;
}

std::size_t rank(const std::vector<BitVec>& vectors, std::size_t dim)
{
    EchelonBasis b(dim);
    for (const auto& v : vectors)
        b.insert(v);
    return b.rank();
}

std::vector<BitVec> nullspace(const std::vector<BitVec>& columns, std::size_t rows)
{
    const std::size_t n = columns.size();
    std::vector<int> pivot_of(rows, -1);
    std::vector<BitVec> reduced;
    std::vector<BitVec> combos;
    std::vector<BitVec> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].size() != rows)
            throw std::invalid_argument("nullspace: column size mismatch");
        BitVec v = columns[j];
        BitVec c = BitVec::unit(n, j);
        bool independent = false;
        for (std::size_t p = v.lowest(); p < rows; p = v.lowest()) {
            const int r = pivot_of[p];
            if (r < 0) {
                pivot_of[p] = static_cast<int>(reduced.size());
                reduced.push_back(std::move(v));
                combos.push_back(std::move(c));
                independent = true;
                break;
            }
            v ^= reduced[static_cast<std::size_t>(r)];
            c ^= combos[static_cast<std::size_t>(r)];
        }
        if (!independent)
            kernel.push_back(std::move(c));
    }
    return kernel;
}

std::vector<BitVec> preimage(const std::vector<BitVec>& columns, std::size_t rows,
                             const std::vector<BitVec>& subspace)
{
    std::vector<BitVec> joined = columns;
    joined.insert(joined.end(), subspace.begin(), subspace.end());
    const auto kernel = nullspace(joined, rows);
    EchelonBasis span(columns.size());
    std::vector<BitVec> out;
    for (const auto& k : kernel) {
        BitVec x = k.head(columns.size());
        if (span.insert(x))
            out.push_back(std::move(x));
    }
    return out;
}

std::optional<BitVec> solve(const std::vector<BitVec>& columns, std::size_t rows,
                            const BitVec& target)
{
    std::vector<BitVec> joined = columns;
    joined.push_back(target);
    for (const auto& k : nullspace(joined, rows))
        if (k.get(columns.size()))
            return k.head(columns.size());
    return std::nullopt;
}

}  // namespace polygem::gf2
