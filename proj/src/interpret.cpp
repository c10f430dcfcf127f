#include "zxfloq/interpret.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace zxfloq {

namespace {

cplx i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// Reorders tensor axes. `order` lists the new axis sequence by old position.
std::vector<cplx> permute_axes(const std::vector<cplx>& data, const std::vector<int>& order) {
    const int r = static_cast<int>(order.size());
    bool identity = true;
    for (int p = 0; p < r; ++p) {
        if (order[p] != p) {
            identity = false;
            break;
        }
    }
    if (identity) {
        return data;
    }
    std::vector<std::size_t> shift(r);
    for (int p = 0; p < r; ++p) {
        shift[p] = static_cast<std::size_t>(r - 1 - order[p]);
    }
    std::vector<cplx> out(data.size());
    const std::size_t n = data.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t old = 0;
        for (int p = 0; p < r; ++p) {
            if ((idx >> (r - 1 - p)) & 1U) {
                old |= std::size_t{1} << shift[p];
            }
        }
        out[idx] = data[old];
    }
    return out;
}

}  // namespace

double LinearMap::max_abs() const {
    double m = 0.0;
    for (Eigen::Index j = 0; j < entries.cols(); ++j) {
        for (Eigen::Index i = 0; i < entries.rows(); ++i) {
            m = std::max(m, std::abs(entries(i, j)));
        }
    }
    return m;
}

Contraction::Tensor Contraction::contract(const Tensor& a, const Tensor& b) {
    std::vector<int> shared;
    std::vector<int> free_a;
    std::vector<int> free_b;
    std::vector<int> pos_a_shared;
    std::vector<int> pos_a_free;
    std::vector<int> pos_b_shared;
    std::vector<int> pos_b_free;
    for (int i = 0; i < static_cast<int>(a.labels.size()); ++i) {
        const auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
        if (it != b.labels.end()) {
            shared.push_back(a.labels[i]);
            pos_a_shared.push_back(i);
            pos_b_shared.push_back(static_cast<int>(it - b.labels.begin()));
        } else {
            free_a.push_back(a.labels[i]);
            pos_a_free.push_back(i);
        }
    }
    for (int i = 0; i < static_cast<int>(b.labels.size()); ++i) {
        if (std::find(shared.begin(), shared.end(), b.labels[i]) == shared.end()) {
            free_b.push_back(b.labels[i]);
            pos_b_free.push_back(i);
        }
    }
    std::vector<int> order_a = pos_a_free;
    order_a.insert(order_a.end(), pos_a_shared.begin(), pos_a_shared.end());
    std::vector<int> order_b = pos_b_shared;
    order_b.insert(order_b.end(), pos_b_free.begin(), pos_b_free.end());

    const std::vector<cplx> da = permute_axes(a.data, order_a);
    const std::vector<cplx> db = permute_axes(b.data, order_b);
    const Eigen::Index rows = Eigen::Index{1} << free_a.size();
    const Eigen::Index inner = Eigen::Index{1} << shared.size();
    const Eigen::Index cols = Eigen::Index{1} << free_b.size();
    using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMat> ma(da.data(), rows, inner);
    const Eigen::Map<const RowMat> mb(db.data(), inner, cols);

    Tensor out;
    out.labels = free_a;
    out.labels.insert(out.labels.end(), free_b.begin(), free_b.end());
    out.data.resize(static_cast<std::size_t>(rows * cols));
    Eigen::Map<RowMat> mo(out.data.data(), rows, cols);
    mo.noalias() = ma * mb;
    return out;
}

Contraction::Contraction(const ZXDiagram& d, const InterpretOptions& opts) {
    require_valid(d);
    const int boundary = static_cast<int>(d.inputs().size() + d.outputs().size());
    if (boundary > opts.max_boundary) {
        throw BudgetExceeded("diagram has " + std::to_string(boundary) +
                             " boundary legs, cap is " + std::to_string(opts.max_boundary));
    }
    std::map<int, int> open_label;
    for (int b : d.inputs()) {
        open_label[b] = -(b + 1);
        in_labels_.push_back(-(b + 1));
    }
    for (int b : d.outputs()) {
        open_label[b] = -(b + 1);
        out_labels_.push_back(-(b + 1));
    }

    for (const auto& [id, v] : d.vertices()) {
        Tensor t;
        const auto& inc = d.incident(id);
        t.labels.assign(inc.begin(), inc.end());
        const int deg = static_cast<int>(inc.size());
        if (deg > opts.max_rank) {
            throw BudgetExceeded("vertex " + std::to_string(id) + " exceeds the rank budget");
        }
        const std::size_t n = std::size_t{1} << deg;
        t.data.assign(n, cplx{0, 0});
        const int k = v.phase.quarter_turns();
        switch (v.kind) {
            case VertexKind::Z:
                if (deg == 0) {
                    t.data[0] = cplx{1, 0} + i_pow(k);
                } else {
                    t.data[0] = 1;
                    t.data[n - 1] += i_pow(k);
                }
                break;
            case VertexKind::X:
                for (std::size_t b = 0; b < n; ++b) {
                    const bool odd = (std::popcount(b) & 1) != 0;
                    t.data[b] = cplx{1, 0} + (odd ? -i_pow(k) : i_pow(k));
                }
                break;
            case VertexKind::H:
                t.data = {1, 1, 1, -1};
                break;
            case VertexKind::B:
                t.labels.push_back(open_label.at(id));
                t.data = {1, 0, 0, 1};
                break;
        }
        initial_.push_back(std::move(t));
    }
    for (const auto& [eid, e] : d.edges()) {
        // Decorations are applied on the tensor of the edge's first endpoint.
        int ti = 0;
        for (const auto& [vid, v] : d.vertices()) {
            if (vid == e.a) {
                break;
            }
            ++ti;
        }
        const auto& labels = initial_[ti].labels;
        const int axis = static_cast<int>(std::find(labels.begin(), labels.end(), eid) - labels.begin());
        edge_slot_[eid] = {ti, axis};
    }

    // Greedy plan: always contract the connected pair with the smallest result.
    std::vector<std::set<int>> live;
    std::vector<int> ids;
    for (std::size_t i = 0; i < initial_.size(); ++i) {
        live.emplace_back(initial_[i].labels.begin(), initial_[i].labels.end());
        ids.push_back(static_cast<int>(i));
        peak_rank_ = std::max(peak_rank_, static_cast<int>(initial_[i].labels.size()));
    }
    int next_id = static_cast<int>(initial_.size());
    while (live.size() > 1) {
        int best_i = -1;
        int best_j = -1;
        int best_rank = std::numeric_limits<int>::max();
        int best_cost = std::numeric_limits<int>::max();
        bool best_connected = false;
        for (std::size_t i = 0; i < live.size(); ++i) {
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                int sh = 0;
                for (int l : live[i]) {
                    sh += static_cast<int>(live[j].count(l));
                }
                const bool connected = sh > 0;
                const int r = static_cast<int>(live[i].size() + live[j].size()) - 2 * sh;
                const int cost = static_cast<int>(live[i].size() + live[j].size());
                if (connected && !best_connected) {
                    best_connected = true;
                    best_rank = std::numeric_limits<int>::max();
                }
                if (connected != best_connected) {
                    continue;
                }
                if (r < best_rank || (r == best_rank && cost < best_cost)) {
                    best_rank = r;
                    best_cost = cost;
                    best_i = static_cast<int>(i);
                    best_j = static_cast<int>(j);
                }
            }
        }
        if (best_rank > opts.max_rank) {
            throw BudgetExceeded("intermediate tensor of rank " + std::to_string(best_rank) +
                                 " exceeds budget " + std::to_string(opts.max_rank));
        }
        peak_rank_ = std::max(peak_rank_, best_rank);
        plan_.push_back({ids[best_i], ids[best_j]});
        std::set<int> merged;
        for (int l : live[best_i]) {
            if (live[best_j].count(l) == 0) {
                merged.insert(l);
            }
        }
        for (int l : live[best_j]) {
            if (live[best_i].count(l) == 0) {
                merged.insert(l);
            }
        }
        live.erase(live.begin() + best_j);
        ids.erase(ids.begin() + best_j);
        live[best_i] = std::move(merged);
        ids[best_i] = next_id++;
    }
}

LinearMap Contraction::run(const EdgePaulis& paulis) const {
    std::vector<Tensor> pool = initial_;
    for (const auto& [eid, p] : paulis) {
        const auto it = edge_slot_.find(eid);
        if (it == edge_slot_.end()) {
            throw DiagramError("unknown edge " + std::to_string(eid));
        }
        Tensor& t = pool[it->second.first];
        const int r = static_cast<int>(t.labels.size());
        const std::size_t bit = std::size_t{1} << (r - 1 - it->second.second);
        if (p == 'X' || p == 'Y') {
            for (std::size_t b = 0; b < t.data.size(); ++b) {
                if ((b & bit) == 0) {
                    std::swap(t.data[b], t.data[b | bit]);
                }
            }
        }
        if (p == 'Z' || p == 'Y') {
            for (std::size_t b = 0; b < t.data.size(); ++b) {
                if ((b & bit) != 0) {
                    t.data[b] = -t.data[b];
                }
            }
        }
        if (p != 'X' && p != 'Y' && p != 'Z') {
            throw DiagramError(std::string("bad edge decoration '") + p + "'");
        }
    }
    pool.reserve(initial_.size() + plan_.size());
    for (const auto& s : plan_) {
        pool.push_back(contract(pool[s.a], pool[s.b]));
        pool[s.a] = Tensor{};
        pool[s.b] = Tensor{};
    }
    Tensor result;
    if (pool.empty()) {
        result.data = {1};
    } else {
        result = std::move(pool.back());
    }

    std::vector<int> order;
    for (int l : out_labels_) {
        order.push_back(static_cast<int>(std::find(result.labels.begin(), result.labels.end(), l) -
                                         result.labels.begin()));
    }
    for (int l : in_labels_) {
        order.push_back(static_cast<int>(std::find(result.labels.begin(), result.labels.end(), l) -
                                         result.labels.begin()));
    }
    const std::vector<cplx> data = permute_axes(result.data, order);
    LinearMap m;
    m.in_arity = static_cast<int>(in_labels_.size());
    m.out_arity = static_cast<int>(out_labels_.size());
    const Eigen::Index rows = Eigen::Index{1} << m.out_arity;
    const Eigen::Index cols = Eigen::Index{1} << m.in_arity;
    m.entries.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m.entries(i, j) = data[static_cast<std::size_t>(i * cols + j)];
        }
    }
    return m;
}

LinearMap interpret(const ZXDiagram& d, const InterpretOptions& opts) {
    return Contraction(d, opts).run();
}

bool is_zero_map(const LinearMap& a, double tol) { return a.max_abs() <= tol; }

LinearMap normalised(const LinearMap& a, double tol) {
    Eigen::Index bi = 0;
    Eigen::Index bj = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < a.entries.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.entries.rows(); ++i) {
            const double v = std::abs(a.entries(i, j));
            if (v > best + tol * std::max(1.0, best)) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    }
    LinearMap out = a;
    if (best <= tol) {
        return out;
    }
    out.entries /= a.entries(bi, bj);
    return out;
}

bool equal_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol) {
    if (a.in_arity != b.in_arity || a.out_arity != b.out_arity) {
        throw std::invalid_argument("equal_up_to_scalar: arity mismatch");
    }
    const bool za = is_zero_map(a, tol);
    const bool zb = is_zero_map(b, tol);
    if (za || zb) {
        return za && zb;
    }
    const double sa = a.max_abs();
    const double sb = b.max_abs();
    Eigen::Index bi = 0;
    Eigen::Index bj = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < b.entries.cols(); ++j) {
        for (Eigen::Index i = 0; i < b.entries.rows(); ++i) {
            const double v = std::abs(b.entries(i, j));
            if (v > best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    }
    const cplx c = (a.entries(bi, bj) / sa) / (b.entries(bi, bj) / sb);
    if (std::abs(c) <= tol) {
        return false;
    }
    double diff = 0.0;
    for (Eigen::Index j = 0; j < a.entries.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.entries.rows(); ++i) {
            diff = std::max(diff, std::abs(a.entries(i, j) / sa - c * (b.entries(i, j) / sb)));
        }
    }
    return diff <= tol;
}

}  // namespace zxfloq
