#pragma once

#include "zxfloq/f2.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace zxfloq {

// Phaseless Pauli operator in symplectic form.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t n) : x_(n), z_(n) {}

    static PauliString parse(std::string_view s);

    [[nodiscard]] std::size_t size() const { return x_.size(); }
    [[nodiscard]] char letter(std::size_t q) const;
    void set_letter(std::size_t q, char c);
    [[nodiscard]] bool x(std::size_t q) const { return x_.get(q); }
    [[nodiscard]] bool z(std::size_t q) const { return z_.get(q); }
    void set_x(std::size_t q, bool v) { x_.set(q, v); }
    void set_z(std::size_t q, bool v) { z_.set(q, v); }

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool is_identity() const { return !x_.any() && !z_.any(); }
    [[nodiscard]] bool commutes(const PauliString& o) const;
    PauliString& operator*=(const PauliString& o);

    // 2n bits: x part then z part.
    [[nodiscard]] BitVec symplectic() const;
    static PauliString from_symplectic(const BitVec& v);

    [[nodiscard]] std::string str() const;

    bool operator==(const PauliString& o) const { return x_ == o.x_ && z_ == o.z_; }
    bool operator<(const PauliString& o) const { return str() < o.str(); }

private:
    BitVec x_;
    BitVec z_;
};

PauliString operator*(PauliString a, const PauliString& b);

}  // namespace zxfloq
