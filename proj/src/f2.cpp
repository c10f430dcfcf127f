#include "zxfloq/f2.hpp"

#include <bit>
#include <stdexcept>

namespace zxfloq {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) {
        throw std::invalid_argument("BitVec width mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= o.words_[i];
    }
    return *this;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool BitVec::dot(const BitVec& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        acc ^= words_[i] & o.words_[i];
    }
    return (std::popcount(acc) & 1) != 0;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
}

std::vector<std::size_t> rref(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t p = r;
        while (p < m.rows.size() && !m.rows[p].get(c)) {
            ++p;
        }
        if (p == m.rows.size()) {
            continue;
        }
        std::swap(m.rows[r], m.rows[p]);
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i != r && m.rows[i].get(c)) {
                m.rows[i] ^= m.rows[r];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(r);
    return pivots;
}

std::size_t rank(BitMatrix m) { return rref(m).size(); }

std::vector<BitVec> nullspace(BitMatrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols);
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (m.rows[i].get(f)) {
                v.set(pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec SpanBasis::reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool SpanBasis::insert(const BitVec& v) {
    BitVec r = reduce(v);
    if (!r.any()) {
        return false;
    }
    std::size_t p = 0;
    while (!r.get(p)) {
        ++p;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(p)) {
            rows_[i] ^= r;
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(const BitVec& v) const { return !reduce(v).any(); }

}  // namespace zxfloq
