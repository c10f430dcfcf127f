#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zxfloq {

// Dense bit vector over F2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVec& operator^=(const BitVec& o);
    [[nodiscard]] bool any() const;
    [[nodiscard]] std::size_t popcount() const;
    // Parity of the bitwise AND.
    [[nodiscard]] bool dot(const BitVec& o) const;
    [[nodiscard]] std::string str() const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator<(const BitVec& o) const { return words_ < o.words_; }

    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

BitVec operator^(BitVec a, const BitVec& b);

// A list of rows over F2, all of the same width.
struct BitMatrix {
    std::size_t cols = 0;
    std::vector<BitVec> rows;

    explicit BitMatrix(std::size_t c = 0) : cols(c) {}
    void add_row(BitVec r) { rows.push_back(std::move(r)); }
    [[nodiscard]] std::size_t num_rows() const { return rows.size(); }
};

// Reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(BitMatrix& m);

[[nodiscard]] std::size_t rank(BitMatrix m);

// Basis of { x : m x = 0 }.
[[nodiscard]] std::vector<BitVec> nullspace(BitMatrix m);

// Keeps a row-reduced basis so that span membership tests are cheap.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t cols) : cols_(cols) {}

    // Returns true if v was independent of the current span.
    bool insert(const BitVec& v);
    [[nodiscard]] bool contains(const BitVec& v) const;
    [[nodiscard]] BitVec reduce(BitVec v) const;
    [[nodiscard]] std::size_t dim() const { return rows_.size(); }
    [[nodiscard]] const std::vector<BitVec>& rows() const { return rows_; }

private:
    std::size_t cols_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace zxfloq
