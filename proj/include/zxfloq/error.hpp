#pragma once

#include "zxfloq/diagram.hpp"
#include "zxfloq/f2.hpp"
#include "zxfloq/interpret.hpp"
#include "zxfloq/web.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace zxfloq {

enum class FlipKind { X, Z };

struct EdgeFlip {
    int edge = 0;
    FlipKind kind = FlipKind::X;
};

// Set of edge flips. An X and a Z flip on one edge combine into a single Y
// location, so the weight is the number of touched edges.
class ErrorSet {
public:
    ErrorSet() = default;
    explicit ErrorSet(EdgePaulis flips);

    // Adding the same flip twice cancels it.
    void add(EdgeFlip f);
    void add(int edge, char letter);

    [[nodiscard]] std::size_t weight() const { return flips_.size(); }
    [[nodiscard]] bool empty() const { return flips_.empty(); }
    [[nodiscard]] const EdgePaulis& flips() const { return flips_; }
    bool operator==(const ErrorSet&) const = default;

private:
    EdgePaulis flips_;
};

enum class ErrorClass { Trivial, Detectable, Live };

const char* error_class_name(ErrorClass c);

// D + E: pi spiders of the flip colour inserted on each flipped edge (X first for Y).
ZXDiagram apply_error(const ZXDiagram& d, const ErrorSet& e);

// Reuses one contraction plan and the error-free map across many errors.
class ErrorOracle {
public:
    explicit ErrorOracle(const ZXDiagram& d, const InterpretOptions& opts = {}, double tol = kDefaultTol);

    [[nodiscard]] ErrorClass classify(const ErrorSet& e) const;
    [[nodiscard]] LinearMap map_with(const ErrorSet& e) const { return plan_.run(e.flips()); }
    [[nodiscard]] const LinearMap& base() const { return base_; }
    [[nodiscard]] std::uint64_t evaluations() const { return evaluations_; }

private:
    Contraction plan_;
    LinearMap base_;
    double tol_;
    mutable std::uint64_t evaluations_ = 0;
};

ErrorClass classify_error(const ZXDiagram& d, const ErrorSet& e, double tol = kDefaultTol);

struct DistanceResult {
    std::optional<int> distance;  // empty means greater than w_max
    ErrorSet witness;
    int w_max = 0;
    std::uint64_t evaluated = 0;
};

// Least weight of a live error, searching weights 1..w_max over `locations`
// (all edges when empty). Subsets are visited lexicographically by location
// order, then X < Z < Y per location; the first live error found is the witness.
DistanceResult zx_distance(const ZXDiagram& d, int w_max, const std::vector<int>& locations = {},
                           const InterpretOptions& opts = {}, double tol = kDefaultTol);

// Calls visit(E) for every error of exactly weight w over `locations`, in the
// order documented above. Stops early when visit returns false.
template <typename Visit>
bool for_each_error(const std::vector<int>& locations, int w, Visit&& visit);

// Columns follow d.internal_edges(): X flips first, then Z flips.
struct DetectorErrorMatrix {
    std::vector<int> edges;
    BitMatrix rows;
};

DetectorErrorMatrix detector_matrix(const ZXDiagram& d, const std::vector<PauliWeb>& regions);

BitVec error_vector(const DetectorErrorMatrix& m, const ErrorSet& e);
BitVec syndrome(const DetectorErrorMatrix& m, const BitVec& v);

// Witness text: one `flip <src> <dst> <X|Z|Y>` line per touched edge.
void write_error(std::ostream& out, const ZXDiagram& d, const ErrorSet& e);
std::string format_error(const ZXDiagram& d, const ErrorSet& e);
ErrorSet read_error(std::istream& in, const ZXDiagram& d);

std::string format_distance(const ZXDiagram& d, const DistanceResult& r);

template <typename Visit>
bool for_each_error(const std::vector<int>& locations, int w, Visit&& visit) {
    const int n = static_cast<int>(locations.size());
    if (w < 0 || w > n) {
        return true;
    }
    static constexpr char kLetters[3] = {'X', 'Z', 'Y'};
    std::vector<int> pick(w);
    for (int i = 0; i < w; ++i) {
        pick[i] = i;
    }
    while (true) {
        std::vector<int> letter(w, 0);
        while (true) {
            EdgePaulis flips;
            for (int i = 0; i < w; ++i) {
                flips[locations[pick[i]]] = kLetters[letter[i]];
            }
            if (!visit(ErrorSet(std::move(flips)))) {
                return false;
            }
            int j = w - 1;
            while (j >= 0 && letter[j] == 2) {
                letter[j] = 0;
                --j;
            }
            if (j < 0) {
                break;
            }
            ++letter[j];
        }
        int i = w - 1;
        while (i >= 0 && pick[i] == n - w + i) {
            --i;
        }
        if (i < 0) {
            return true;
        }
        ++pick[i];
        for (int k = i + 1; k < w; ++k) {
            pick[k] = pick[k - 1] + 1;
        }
    }
}

}  // namespace zxfloq
