#include "zxfloq/pauli.hpp"

#include <stdexcept>

namespace zxfloq {

PauliString PauliString::parse(std::string_view s) {
    PauliString p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        p.set_letter(i, s[i]);
    }
    return p;
}

char PauliString::letter(std::size_t q) const {
    const bool xb = x_.get(q);
    const bool zb = z_.get(q);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    return zb ? 'Z' : 'I';
}

void PauliString::set_letter(std::size_t q, char c) {
    switch (c) {
        case 'I': x_.set(q, false); z_.set(q, false); break;
        case 'X': x_.set(q, true); z_.set(q, false); break;
        case 'Y': x_.set(q, true); z_.set(q, true); break;
        case 'Z': x_.set(q, false); z_.set(q, true); break;
        default: throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
    }
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t q = 0; q < size(); ++q) {
        if (x_.get(q) || z_.get(q)) {
            ++w;
        }
    }
    return w;
}

bool PauliString::commutes(const PauliString& o) const {
    if (o.size() != size()) {
        throw std::invalid_argument("Pauli length mismatch");
    }
    return x_.dot(o.z_) == z_.dot(o.x_);
}

PauliString& PauliString::operator*=(const PauliString& o) {
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
}

PauliString operator*(PauliString a, const PauliString& b) {
    a *= b;
    return a;
}

BitVec PauliString::symplectic() const {
    const std::size_t n = size();
    BitVec v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        v.set(q, x_.get(q));
        v.set(n + q, z_.get(q));
    }
    return v;
}

PauliString PauliString::from_symplectic(const BitVec& v) {
    const std::size_t n = v.size() / 2;
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.x_.set(q, v.get(q));
        p.z_.set(q, v.get(n + q));
    }
    return p;
}

std::string PauliString::str() const {
    std::string s(size(), 'I');
    for (std::size_t q = 0; q < size(); ++q) {
        s[q] = letter(q);
    }
    return s;
}

}  // namespace zxfloq
