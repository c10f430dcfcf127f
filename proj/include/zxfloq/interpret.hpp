#pragma once

#include "zxfloq/diagram.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace zxfloq {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

// Dense matrix of shape 2^out_arity x 2^in_arity. Row index bits follow the
// output order (first output is the most significant bit), columns likewise.
struct LinearMap {
    int in_arity = 0;
    int out_arity = 0;
    Eigen::MatrixXcd entries;

    [[nodiscard]] double max_abs() const;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InterpretOptions {
    int max_boundary = 16;  // inputs + outputs
    int max_rank = 24;      // largest intermediate tensor, in legs
};

// Pauli insertions on edges, keyed by edge id. 'X' and 'Z' are pi spiders of
// that colour; 'Y' is both (X applied first).
using EdgePaulis = std::map<int, char>;

// Contraction plan for one diagram, reusable across many edge decorations.
// Spider tensors use the unnormalised convention: Z = |0..0> + i^k |1..1>,
// X = sum_b (1 + i^k (-1)^|b|) |b>, H = [[1,1],[1,-1]]. All entries stay
// Gaussian integers, so the zero test is exact.
class Contraction {
public:
    explicit Contraction(const ZXDiagram& d, const InterpretOptions& opts = {});

    [[nodiscard]] LinearMap run(const EdgePaulis& paulis = {}) const;
    [[nodiscard]] int peak_rank() const { return peak_rank_; }

private:
    struct Tensor {
        std::vector<int> labels;
        std::vector<cplx> data;
    };
    struct Step {
        int a;
        int b;
    };

    std::vector<Tensor> initial_;
    std::map<int, std::pair<int, int>> edge_slot_;  // edge -> (tensor, axis)
    std::vector<Step> plan_;
    std::vector<int> out_labels_;
    std::vector<int> in_labels_;
    int peak_rank_ = 0;

    static Tensor contract(const Tensor& a, const Tensor& b);
};

LinearMap interpret(const ZXDiagram& d, const InterpretOptions& opts = {});

// True iff a = c·b for some nonzero c (after scaling both to unit max entry),
// or both maps vanish within tol.
bool equal_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol = kDefaultTol);

bool is_zero_map(const LinearMap& a, double tol = kDefaultTol);

// Scale-and-phase normalised copy: the largest-magnitude entry (first in
// column-major order on ties) becomes 1. Zero maps are returned unchanged.
LinearMap normalised(const LinearMap& a, double tol = kDefaultTol);

}  // namespace zxfloq
