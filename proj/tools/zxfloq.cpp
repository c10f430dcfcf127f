#include "zxfloq/error.hpp"
#include "zxfloq/floquet.hpp"
#include "zxfloq/rewrite.hpp"
#include "zxfloq/synth.hpp"
#include "zxfloq/tableau.hpp"
#include "zxfloq/web.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace zxfloq;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct Globals {
    double tol = kDefaultTol;
    int budget = InterpretOptions{}.max_rank;
    unsigned seed = 4242;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
}

bool is_code_file(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::getline(in, tok);
            continue;
        }
        return tok == "n";
    }
    return false;
}

int run_floquetify(const std::string& path, const std::string& out, bool audit, int w_max) {
    const StabiliserCode code = parse_code(slurp(path));
    FloquetOptions opts;
    opts.w_max = w_max;
    const FloquetResult r = floquetify(code, opts);
    std::ostringstream text;
    write_schedule(text, r.schedule);
    if (audit) {
        for (const auto& line : r.audit) {
            text << "# " << line << '\n';
        }
    }
    emit(out, text.str());
    if (!out.empty()) {
        std::cout << format_params(r.params);
    }
    std::cerr << "ancillas " << r.ancillas << " f-term " << r.f_term << '\n';
    return kOk;
}

int run_params(const std::string& path, int w_max) {
    const std::string text = slurp(path);
    const CodeParams p = is_code_file(text) ? code_params(parse_code(text), w_max)
                                            : code_params(parse_schedule(text), w_max);
    std::cout << format_params(p);
    return kOk;
}

int run_distance(const Globals& g, const std::string& path, int w_max, const std::string& witness) {
    const ZXDiagram d = parse_diagram(slurp(path));
    InterpretOptions opts;
    opts.max_rank = g.budget;
    const DistanceResult r = zx_distance(d, w_max, {}, opts, g.tol);
    std::cout << format_distance(d, r);
    if (!witness.empty() && r.distance) {
        emit(witness, format_error(d, r.witness));
    }
    return kOk;
}

int run_check_rule(const Globals& g, const std::string& name, int n, const std::string& colour,
                   const std::string& witness) {
    const RewriteRule r = rule(name, n, kind_from_char(colour.empty() ? 'Z' : colour[0]));
    const bool sound = verify_semantics(r, g.tol);
    std::cout << "semantics " << (sound ? "ok" : "FAILED") << '\n';
    PreservationOptions opts;
    opts.tol = g.tol;
    const PreservationReport rep = verify_distance_preserving(r, opts);
    std::cout << format_report(r, rep);
    const bool refuted = rep.verdict == Verdict::Refuted;
    if (refuted) {
        const bool fwd = !rep.forward.ok;
        const ZXDiagram& side = fwd ? r.rhs : r.lhs;
        const ErrorSet& e = fwd ? rep.forward.witness : rep.backward.witness;
        if (!witness.empty()) {
            emit(witness, format_error(side, e));
        }
    }
    return sound && !refuted ? kOk : kRefuted;
}

int run_webs(const std::string& path) {
    const ZXDiagram d = parse_diagram(slurp(path));
    const WebAnalysis a(d);
    std::cout << "webs " << a.web_dim() << "\ndetecting " << a.detecting_dim() << "\nstabilising_classes_log2 "
              << a.stabilising_class_log2() << "\nlogical_classes_log2 " << a.logical_class_log2() << '\n';
    for (const auto& p : a.stabiliser_generators()) {
        std::cout << "stabiliser " << p.str() << '\n';
    }
    const auto basis = web_basis(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::cout << "web " << i << ' ' << web_class_name(a.classify(basis[i])) << '\n' << format_web(d, basis[i]);
    }
    return kOk;
}

int run_decompose(const std::string& pauli, bool diagram) {
    const PauliString p = PauliString::parse(pauli);
    if (diagram) {
        std::cout << format_diagram(decompose_measurement(p).diagram);
        return kOk;
    }
    const Circuit c = measurement_circuit_for(p);
    std::cout << format_circuit(c);
    std::cerr << "qubits " << c.qubits << " bound " << measurement_qubit_bound(static_cast<int>(p.weight())) << '\n';
    return kOk;
}

// Random Clifford measurement circuits: web class counts against the tableau.
int run_selfcheck(const Globals& g, int trials) {
    std::mt19937 rng(g.seed);
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        Circuit c;
        c.qubits = 1 + static_cast<int>(rng() % 3);
        const int ops = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < ops; ++i) {
            const int a = static_cast<int>(rng() % static_cast<unsigned>(c.qubits));
            const int b = (a + 1) % c.qubits;
            switch (rng() % (c.qubits > 1 ? 7 : 4)) {
                case 0: c.add(OpKind::C, {a}, "H"); break;
                case 1: c.add(OpKind::C, {a}, "S"); break;
                case 2: c.add(OpKind::M1Z, {a}); break;
                case 3: c.add(OpKind::M1X, {a}); break;
                case 4: c.add(OpKind::CX, {a, b}); break;
                case 5: c.add(OpKind::M2Z, {a, b}); break;
                default: c.add(OpKind::M2X, {a, b}); break;
            }
        }
        const ZXDiagram d = circuit_to_diagram(c);
        const WebAnalysis a(d);
        const StabiliserTableau s = simulate_circuit(c).back();
        const auto logical = static_cast<std::size_t>(2 * c.qubits) - 2 * s.rank();
        if (a.stabilising_class_log2() != s.rank() || a.logical_class_log2() != logical) {
            ++bad;
            std::cout << "mismatch on\n" << format_circuit(c);
        }
    }
    std::cout << "selfcheck " << trials - bad << '/' << trials << " seed " << g.seed << '\n';
    return bad == 0 ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZX rewriting and Floquetification of stabiliser codes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "Tolerance for semantic comparisons")->capture_default_str();
    app.add_option("--budget", g.budget, "Largest intermediate tensor rank during contraction")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomised checks")->capture_default_str();

    std::string file;
    std::string out;
    std::string witness;
    std::string name;
    std::string colour = "Z";
    std::string pauli;
    bool audit = false;
    bool as_diagram = false;
    int w_max = 0;
    int n = 0;
    int trials = 200;

    auto* floq = app.add_subcommand("floquetify", "Turn a stabiliser code into a periodic schedule");
    floq->add_option("code", file, "Code file")->required();
    floq->add_option("--out", out, "Schedule output file (default stdout)");
    floq->add_flag("--audit", audit, "Append the rewrite audit trail as comments");
    floq->add_option("--wmax", w_max, "Distance search bound (0: all qubits)");

    auto* params = app.add_subcommand("params", "Report n k d of a schedule or code file");
    params->add_option("file", file, "Schedule or code file")->required();
    params->add_option("--wmax", w_max, "Distance search bound (0: all qubits)");

    auto* dist = app.add_subcommand("distance", "ZX distance of a diagram");
    dist->add_option("--diagram", file, "Diagram file")->required();
    dist->add_option("--wmax", w_max, "Largest error weight searched")->required();
    dist->add_option("--witness", witness, "Write the witness error here");

    auto* check = app.add_subcommand("check-rule", "Certify a rewrite rule");
    check->add_option("name", name, "r_elim, r_fuse, r_4, r_5, r_n+, r_n, r_pauli1 or r_naive")->required();
    check->add_option("--n", n, "Leg parameter for r_fuse, r_n+ and r_n");
    check->add_option("--colour", colour, "Z or X")->check(CLI::IsMember({"Z", "X"}));
    check->add_option("--witness", witness, "Write the refuting error here");

    auto* webs = app.add_subcommand("webs", "Pauli web basis and classes of a diagram");
    webs->add_option("diagram", file, "Diagram file")->required();

    auto* decomp = app.add_subcommand("decompose", "Low-weight circuit for one Pauli measurement");
    decomp->add_option("--pauli", pauli, "Pauli string, e.g. ZZZZ")->required();
    decomp->add_flag("--diagram", as_diagram, "Print the decomposed diagram instead");

    auto* self = app.add_subcommand("selfcheck", "Web classes against the tableau on random circuits");
    self->add_option("--trials", trials, "Number of circuits")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*floq) {
            return run_floquetify(file, out, audit, w_max);
        }
        if (*params) {
            return run_params(file, w_max);
        }
        if (*dist) {
            return run_distance(g, file, w_max, witness);
        }
        if (*check) {
            return run_check_rule(g, name, n, colour, witness);
        }
        if (*webs) {
            return run_webs(file);
        }
        if (*decomp) {
            return run_decompose(pauli, as_diagram);
        }
        return run_selfcheck(g, trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
