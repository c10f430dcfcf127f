#pragma once

#include "zxfloq/diagram.hpp"
#include "zxfloq/f2.hpp"
#include "zxfloq/pauli.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace zxfloq {

// Edge highlighting. Letters are 'Z', 'X' or 'Y' (both); absent edges are plain.
struct PauliWeb {
    std::map<int, char> highlights;

    [[nodiscard]] bool empty() const { return highlights.empty(); }
    [[nodiscard]] bool z(int e) const;
    [[nodiscard]] bool x(int e) const;
    bool operator==(const PauliWeb&) const = default;
};

// Symmetric difference of highlights.
PauliWeb operator^(const PauliWeb& a, const PauliWeb& b);

enum class WebClass { Detecting, Stabilising, CoStabilising, Logical, MixedTrivial };

const char* web_class_name(WebClass c);

class WebError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Variables are two bits per edge in edge-id order: bit 2i is the Z highlight
// of the i-th edge, bit 2i+1 its X highlight.
BitMatrix web_system(const ZXDiagram& d);

BitVec web_to_bits(const ZXDiagram& d, const PauliWeb& w);
PauliWeb web_from_bits(const ZXDiagram& d, const BitVec& v);

[[nodiscard]] bool is_web(const ZXDiagram& d, const PauliWeb& w);

std::vector<PauliWeb> web_basis(const ZXDiagram& d);
std::vector<PauliWeb> detecting_regions(const ZXDiagram& d);
std::vector<PauliWeb> stabilising_webs(const ZXDiagram& d);
std::vector<PauliWeb> costabilising_webs(const ZXDiagram& d);

enum class Side { In, Out };

// Pauli letter per boundary qubit, in the order of d.inputs() or d.outputs().
PauliString boundary_pauli(const ZXDiagram& d, const PauliWeb& w, Side side);

// Precomputed spans used for classification and class counting.
class WebAnalysis {
public:
    explicit WebAnalysis(const ZXDiagram& d);

    [[nodiscard]] WebClass classify(const PauliWeb& w) const;

    [[nodiscard]] std::size_t web_dim() const { return web_dim_; }
    [[nodiscard]] std::size_t detecting_dim() const { return detecting_dim_; }
    [[nodiscard]] std::size_t stabilising_dim() const { return stabilising_dim_; }
    // log2 of the number of stabilising webs modulo detecting regions.
    [[nodiscard]] std::size_t stabilising_class_log2() const { return stabilising_class_log2_; }
    // log2 of the number of webs modulo stabilising and co-stabilising webs.
    [[nodiscard]] std::size_t logical_class_log2() const { return web_dim_ - trivial_.dim(); }
    // One output Pauli per stabilising class generator.
    [[nodiscard]] const std::vector<PauliString>& stabiliser_generators() const { return stab_out_; }

private:
    const ZXDiagram* d_;
    BitMatrix system_;
    SpanBasis trivial_;
    std::size_t web_dim_ = 0;
    std::size_t detecting_dim_ = 0;
    std::size_t stabilising_dim_ = 0;
    std::size_t stabilising_class_log2_ = 0;
    std::vector<PauliString> stab_out_;
};

inline WebClass classify(const ZXDiagram& d, const PauliWeb& w) { return WebAnalysis(d).classify(w); }

// Inserts a pi spider of the highlighted colour on every highlighted leg of s
// (both colours for Y).
ZXDiagram fire(const ZXDiagram& d, int s, const PauliWeb& w);

// Fires every spider covered by w.
ZXDiagram fire_all(const ZXDiagram& d, const PauliWeb& w);

// Text format: one `hl <src> <dst> <Z|X|Y>` line per highlighted edge.
void write_web(std::ostream& out, const ZXDiagram& d, const PauliWeb& w);
std::string format_web(const ZXDiagram& d, const PauliWeb& w);
PauliWeb read_web(std::istream& in, const ZXDiagram& d);

}  // namespace zxfloq
