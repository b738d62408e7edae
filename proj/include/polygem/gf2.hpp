#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polygem::gf2 {

/// Dense vector over F2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

    static BitVec unit(std::size_t size, std::size_t index)
    {
        BitVec v(size);
        v.set(index);
        return v;
    }

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    bool is_zero() const;
    /// Index of the lowest set bit; size() when zero.
    std::size_t lowest() const;
    std::size_t count() const;
    std::vector<std::size_t> support() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec&) const = default;

    /// First `n` coordinates.
    BitVec head(std::size_t n) const;
    /// Concatenation [this | other].
    BitVec concat(const BitVec& other) const;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Incrementally built echelon basis of a subspace of F2^dim, pivoting on the
/// lowest set bit.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim), pivot_of_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
    /// Adds v to the span; false if it was already there.
    bool insert(const BitVec& v);

private:
    std::size_t dim_;
    std::vector<BitVec> rows_;
    std::vector<int> pivot_of_;
};

/// Rank of a family of vectors of common size.
std::size_t rank(const std::vector<BitVec>& vectors, std::size_t dim);

/// Kernel of the map whose j-th column is columns[j] (each of size `rows`),
/// as vectors of size columns.size().
std::vector<BitVec> nullspace(const std::vector<BitVec>& columns, std::size_t rows);

/// Basis of { x : A x lies in span(subspace) }, as vectors in the domain.
std::vector<BitVec> preimage(const std::vector<BitVec>& columns, std::size_t rows,
                             const std::vector<BitVec>& subspace);

/// Some x with A x = target, if one exists.
std::optional<BitVec> solve(const std::vector<BitVec>& columns, std::size_t rows,
                            const BitVec& target);

}  // namespace polygem::gf2
