// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "zxfloq/error.hpp"
#include "zxfloq/floquet.hpp"
#include "zxfloq/flow.hpp"
#include "zxfloq/rewrite.hpp"
#include "zxfloq/synth.hpp"
#include "zxfloq/tableau.hpp"
#include "zxfloq/web.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace zxfloq;

namespace {

constexpr double kTol = 1e-9;
constexpr unsigned kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << ']';
        }
    }
};

const char* kFourTwoTwo = "n 4\nXXXX\nZZZZ\n";
const char* kFiveOneThree = "n 5\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n";

Eigen::MatrixXcd projector(const PauliString& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < p.size(); ++q) {
        Eigen::Matrix2cd s;
        switch (p.letter(q)) {
            case 'X': s << 0, 1, 1, 0; break;
            case 'Y': s << 0, cplx(0, -1), cplx(0, 1), 0; break;
            case 'Z': s << 1, 0, 0, -1; break;
            default: s << 1, 0, 0, 1; break;
        }
        m = Eigen::kroneckerProduct(m, s).eval();
    }
    return Eigen::MatrixXcd::Identity(m.rows(), m.cols()) + m;
}

PauliString all_z(int n) {
    PauliString p(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        p.set_letter(static_cast<std::size_t>(q), 'Z');
    }
    return p;
}

void rewrite_certification(Outcome& o) {
    int certified = 0;
    for (const auto& entry : catalogue()) {
        if (entry.name == "r_naive") {
            continue;
        }
        const RewriteRule r = rule(entry.name, entry.n);
        const std::string label = entry.name + " " + std::to_string(entry.n);
        o.require(verify_semantics(r, kTol), label + " semantics");
        PreservationOptions opts;
        opts.tol = kTol;
        o.require(verify_distance_preserving(r, opts).verdict == Verdict::Preserving, label + " preserving");
        ++certified;
    }
    const RewriteRule naive = rule("r_naive");
    o.require(verify_semantics(naive, kTol), "r_naive semantics");
    const PreservationReport rep = verify_distance_preserving(naive);
    o.require(rep.verdict == Verdict::Refuted, "r_naive refuted");
    o.require(rep.forward.witness.weight() == 1, "r_naive witness weight 1");
    o.require(rep.forward.cheapest_equivalent == 2, "r_naive cheapest equivalent 2");
    o.detail << certified << " rules preserving; r_naive witness " << rep.forward.witness.weight() << " -> "
             << rep.forward.cheapest_equivalent.value_or(-1);
}

void golden_four_two_two(Outcome& o) {
    const FloquetResult r = floquetify(parse_code(kFourTwoTwo));
    o.require(r.schedule.qubits == 6, "6 qubits");
    o.require(r.params.k == 2, "k'=2");
    o.require(r.params.d == 2, "d'=2");
    bool light = true;
    bool swaps = false;
    for (const auto& op : r.schedule.body) {
        light = light && op.weight() <= 2;
        swaps = swaps || op.kind == OpKind::SWAP;
    }
    o.require(light, "body weight <= 2");
    o.require(!swaps, "no SWAP in body");
    o.detail << "n=" << r.params.n << " k=" << r.params.k << " d=" << r.params.d.value_or(-1) << ", body "
             << r.schedule.body.size() << " ops";
}

void distance_oracle(Outcome& o) {
    // Three rounds, errors on the middle one: the first and last rounds play
    // the established past and future.
    const MeasurementCircuit mc = build_measurement_circuit(parse_code(kFourTwoTwo), 3);
    const auto window = round_vertices(mc, 1);
    const auto base = zx_distance(mc.diagram, 2, edges_touching(mc.diagram, window));
    o.require(base.distance == 2, "established round distance 2");

    const RewriteRule naive = rule("r_naive");
    std::optional<int> spliced;
    for (const auto& occ : find_matches(mc.diagram, naive)) {
        if (window.count(occ.vertex_map.begin()->second) == 0) {
            continue;
        }
        std::map<int, int> placed;
        const ZXDiagram d = substitute(mc.diagram, occ, naive.rhs, placed);
        std::set<int> vertices;
        for (int v : window) {
            if (d.has_vertex(v)) {
                vertices.insert(v);
            }
        }
        for (const auto& [from, to] : placed) {
            if (!d.is_boundary_vertex(to)) {
                vertices.insert(to);
            }
        }
        spliced = zx_distance(d, 2, edges_touching(d, vertices)).distance;
        break;
    }
    o.require(spliced == 1, "r_naive splice distance 1");
    o.detail << "distance " << base.distance.value_or(-1) << ", after r_naive " << spliced.value_or(-1);
}

void overhead_bounds(Outcome& o) {
    for (int n = 4; n <= 4096; n += 2) {
        const double lg = std::log2(static_cast<double>(n));
        if (f_overhead(n) > lg) {
            o.require(false, "f(" + std::to_string(n) + ") <= log2 n");
        }
        if (static_cast<double>(g_overhead(n)) > 2.0 * n * lg) {
            o.require(false, "g(" + std::to_string(n) + ") <= 2 n log2 n");
        }
    }
    for (int n = 4; n <= 4096; n *= 2) {
        o.require(f_overhead(n) == 0, "f(2^k) = 0");
    }
    o.require(f_overhead(4) == 0, "f(4)=0");
    o.require(f_overhead(6) == 1, "f(6)=1");
    o.require(g_overhead(4) == 2, "g(4)=2");
    o.detail << "even n in [4, 4096]";
}

void measurement_decomposition(Outcome& o) {
    const Circuit four = measurement_circuit_for(all_z(4));
    o.require(four.qubits == 6, "weight 4 uses 6 qubits");
    o.require(equal_up_to_scalar(interpret(circuit_to_diagram(four)), {4, 4, projector(all_z(4))}, kTol),
              "weight 4 projector");
    std::ostringstream counts;
    for (int n = 2; n <= 6; ++n) {
        const Circuit c = measurement_circuit_for(all_z(n));
        counts << ' ' << n << ':' << c.qubits;
        o.require(c.qubits <= measurement_qubit_bound(n), "qubit bound n=" + std::to_string(n));
        const LinearMap m = interpret(circuit_to_diagram(c));
        const LinearMap sq{n, n, m.entries * m.entries};
        o.require(equal_up_to_scalar(sq, m, kTol), "idempotent n=" + std::to_string(n));
    }
    o.detail << "qubits" << counts.str();
}

void web_bijection(Outcome& o) {
    std::mt19937 rng(kSeed);
    int agreed = 0;
    for (int t = 0; t < 200; ++t) {
        Circuit c;
        c.qubits = 1 + static_cast<int>(rng() % 3);
        const int ops = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < ops; ++i) {
            const int a = static_cast<int>(rng() % static_cast<unsigned>(c.qubits));
            const int b = (a + 1 + static_cast<int>(rng() % 2)) % c.qubits;
            const bool two = c.qubits > 1 && b != a;
            switch (rng() % (two ? 7 : 4)) {
                case 0: c.add(OpKind::C, {a}, "H"); break;
                case 1: c.add(OpKind::C, {a}, "S"); break;
                case 2: c.add(OpKind::M1Z, {a}); break;
                case 3: c.add(OpKind::M1X, {a}); break;
                case 4: c.add(OpKind::CX, {a, b}); break;
                case 5: c.add(OpKind::M2Z, {a, b}); break;
                default: c.add(OpKind::M2X, {a, b}); break;
            }
        }
        const WebAnalysis wa(circuit_to_diagram(c));
        const StabiliserTableau s = simulate_circuit(c).back();
        const std::size_t logical = 2 * (static_cast<std::size_t>(c.qubits) - s.rank());
        if (wa.stabilising_class_log2() == s.rank() && wa.logical_class_log2() == logical) {
            ++agreed;
        }
    }
    o.require(agreed == 200, "all circuits agree");
    o.detail << agreed << "/200 circuits, seed " << kSeed;
}

void detecting_region_soundness(Outcome& o) {
    std::vector<std::pair<std::string, ZXDiagram>> hosts;
    hosts.emplace_back("two ZZ", circuit_to_diagram(parse_circuit("qubits 2\nM2Z 0 1\nM2Z 0 1\n")));
    for (const auto& entry : catalogue()) {
        hosts.emplace_back(entry.name + " " + std::to_string(entry.n), rule(entry.name, entry.n).rhs);
    }
    std::size_t odd = 0;
    for (const auto& [label, d] : hosts) {
        const auto regions = detecting_regions(d);
        if (regions.empty()) {
            continue;
        }
        const auto m = detector_matrix(d, regions);
        const ErrorOracle oracle(d, {}, kTol);
        for (int w = 1; w <= 3; ++w) {
            for_each_error(m.edges, w, [&](const ErrorSet& e) {
                if (syndrome(m, error_vector(m, e)).any()) {
                    ++odd;
                    if (oracle.classify(e) != ErrorClass::Detectable) {
                        o.require(false, label + ": " + format_error(d, e));
                    }
                }
                return true;
            });
        }
    }
    o.detail << odd << " odd-overlap errors up to weight 3 on " << hosts.size() << " diagrams";
}

void five_one_three(Outcome& o) {
    const StabiliserCode code = parse_code(kFiveOneThree);
    const FloquetResult r = floquetify(code);
    o.require(r.params.k == 1, "k'=1");
    o.require(r.params.d == 3, "d'=3");
    o.require(r.schedule.qubits == 7 + r.f_term, "n' = 7 + f-term");
    o.detail << "n=" << r.params.n << " k=" << r.params.k << " d=" << r.params.d.value_or(-1) << ", f-term "
             << r.f_term;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"rewrite certification", rewrite_certification},
        {"[[4,2,2]] golden path", golden_four_two_two},
        {"ZX distance oracle", distance_oracle},
        {"overhead bounds", overhead_bounds},
        {"measurement decomposition", measurement_decomposition},
        {"web/stabiliser bijection", web_bijection},
        {"detecting-region soundness", detecting_region_soundness},
        {"[[5,1,3]] end-to-end", five_one_three},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << ']';
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail.str() << "; " << std::fixed << std::setprecision(2) << secs << "s)\n";
    }
    return failed == 0 ? 0 : 1;
}
