#pragma once

#include "zxfloq/diagram.hpp"
#include "zxfloq/error.hpp"
#include "zxfloq/interpret.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zxfloq {

class RuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Both sides share boundary vertex ids, which is the boundary bijection.
// flow_paths describe how the rhs carries directed paths: each entry is a
// vertex sequence over rhs ids whose end points are boundary ids (joined to
// the host path) or rhs spiders (a path that starts and ends inside).
struct RewriteRule {
    std::string name;
    int n = 0;
    ZXDiagram lhs;
    ZXDiagram rhs;
    std::vector<std::vector<int>> flow_paths;

    [[nodiscard]] std::vector<int> boundary() const;
};

// Names: r_elim, r_fuse, r_4, r_5, r_n+, r_n, r_pauli1, r_naive.
// n is the leg count for r_fuse (lhs spider degree, default 3) and r_n+;
// r_n covers n+1 legs. The decomposed spider has the given colour and phase;
// the phase is carried by the first new spider of the rhs.
RewriteRule rule(const std::string& name, int n = 0, VertexKind colour = VertexKind::Z, Phase phase = {});

RewriteRule inverse(const RewriteRule& r);
RewriteRule colour_swapped(const RewriteRule& r);

struct CatalogueEntry {
    std::string name;
    int n;
};

// Instances certified by the acceptance suite.
std::vector<CatalogueEntry> catalogue();

// One embedding per distinct image (interior vertices plus matched edges).
// Legs at each host vertex are assigned to pattern legs in incident order.
std::vector<Embedding> find_matches(const ZXDiagram& d, const RewriteRule& r);

ZXDiagram apply(const ZXDiagram& d, const RewriteRule& r, const Embedding& occ);

bool verify_semantics(const RewriteRule& r, double tol = kDefaultTol);

enum class Verdict { Preserving, NonDecreasingOnly, Refuted };

const char* verdict_name(Verdict v);

struct DirectionReport {
    bool ok = true;
    std::size_t errors_checked = 0;
    std::size_t detectable = 0;
    // First failing error (over the source side's internal edges) and the
    // least weight of an equivalent error on the other side, if one exists
    // within the search cap.
    ErrorSet witness;
    std::optional<int> cheapest_equivalent;
};

struct PreservationReport {
    Verdict verdict = Verdict::Preserving;
    DirectionReport forward;
    DirectionReport backward;
    bool backward_checked = false;
};

struct PreservationOptions {
    std::size_t max_internal_edges = 10;
    // If positive, only errors up to this weight are checked and the edge cap
    // does not apply.
    int max_error_weight = 0;
    double tol = kDefaultTol;
};

// For every error E2 on internal edges of `to`: either D2+E2 vanishes, or
// some E1 on any edge of `from` with |E1| <= |E2| has [D1+E1] ~ [D2+E2].
DirectionReport check_non_decreasing(const ZXDiagram& from, const ZXDiagram& to,
                                     const PreservationOptions& opts = {});

PreservationReport verify_distance_preserving(const RewriteRule& r, const PreservationOptions& opts = {});

std::string format_report(const RewriteRule& r, const PreservationReport& rep);

}  // namespace zxfloq
