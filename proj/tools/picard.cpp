#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "picard/checks.hpp"
#include "picard/literal.hpp"
#include "picard/report.hpp"
#include "picard/svg.hpp"

using namespace picard;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariantViolation = 3;

long require_d(long d) {
    FieldDescriptor::make(d);  // validates squarefree positive
    return d;
}

std::vector<Int> parse_primes(const std::string& csv) {
    std::vector<Int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad prime list: " + csv);
        }
    }
    return out;
}

int run_classify(long d, const std::string& delta_text) {
    FieldElement delta = parse_field_element(delta_text, d);
    ClassReport report = make_class_report(d, delta);
    Json j = to_json(report);
    j["command"] = "classify";
    std::cout << j.dump() << "\n";
    return 0;
}

int run_reduce(long d, const std::vector<std::string>& entries) {
    if (entries.size() != 9)
        throw std::invalid_argument("reduce expects nine field-element literals");
    std::array<FieldElement, 9> parsed;
    for (size_t i = 0; i < 9; i++) parsed[i] = parse_field_element(entries[i], d);
    MatK m(d, parsed);
    if (auto broken = unitarity_defect(m))
        throw std::logic_error("unitarity identity " + std::to_string(*broken) + " of 6 fails");
    UnitarySymmetric y = [&] {
        try {
            return UnitarySymmetric(m);
        } catch (const std::invalid_argument& e) {
            throw std::logic_error(e.what());  // symmetry identity broke
        }
    }();
    ReductionResult res = reduce_to_delta(y);
    ClassReport report = make_class_report(d, res.delta);
    Json j = to_json(report);
    j["command"] = "reduce";
    j["conjugator"] = matrix_json(res.conjugator.rep());
    std::cout << j.dump() << "\n";
    return 0;
}

int run_construct(long d, const std::string& primes_csv, bool recipe) {
    RamificationSet target;
    target.finite_places = parse_primes(primes_csv);
    std::sort(target.finite_places.begin(), target.finite_places.end());
    ConstructResult res = construct_delta(
        target, d, recipe ? ConstructStrategy::CongruenceRecipe : ConstructStrategy::VerifiedScan);
    ClassReport report = make_class_report(d, FieldElement::integer(d, res.delta));
    Json j = to_json(report);
    j["command"] = "construct";
    Json t = Json::array();
    for (const Int& p : target.finite_places) t.push_back(p.get_si());
    j["target"] = t;
    j["delta"] = res.delta.get_si();
    if (res.recipe_q != 0) j["recipe_q"] = res.recipe_q.get_si();
    j["verified"] = true;
    std::cout << j.dump() << "\n";
    return 0;
}

int run_commensurable(long d, const std::string& a_text, const std::string& b_text) {
    FieldElement a = parse_field_element(a_text, d);
    FieldElement b = parse_field_element(b_text, d);
    ClassReport ra = make_class_report(d, a), rb = make_class_report(d, b);
    Json j;
    j["command"] = "commensurable";
    j["d"] = d;
    j["delta1"] = field_element_json(a);
    j["delta2"] = field_element_json(b);
    j["algebra1"] = algebra_json(ra.algebra);
    j["algebra2"] = algebra_json(rb.algebra);
    j["ramification1"] = ramification_json(ra.ram);
    j["ramification2"] = ramification_json(rb.ram);
    j["commensurable"] = commensurable(a, b);
    std::cout << j.dump() << "\n";
    return 0;
}

int run_orbit_svg(long d, int radius, int density, const std::string& out_path) {
    SvgConfig cfg;
    cfg.d = d;
    cfg.radius = radius;
    cfg.density = density;
    std::string svg = render_orbit_svg(cfg);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << svg;
    out.close();
    if (!out) throw std::runtime_error("write failed: " + out_path);
    Json j;
    j["command"] = "orbit-svg";
    j["d"] = d;
    j["radius"] = radius;
    j["density"] = density;
    j["out"] = out_path;
    j["bytes"] = svg.size();
    std::cout << j.dump() << "\n";
    return 0;
}

int run_selfcheck_cmd(std::uint64_t seed, bool corrupt) {
    auto results = run_selfcheck(seed, corrupt);
    for (const auto& r : results) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
    }
    bool ok = all_passed(results);
    std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << " (" << results.size()
              << " suites)\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of the real Fuchsian stabilizers in Picard modular "
                 "groups: normal forms, quaternion algebra invariants, commensurability, "
                 "and orbit pictures"};
    app.require_subcommand(1);

    long d = 1;
    std::string delta_text, delta2_text, primes_csv, out_path = "orbit.svg";
    std::vector<std::string> entries;
    int radius = 3, density = 96;
    std::uint64_t seed = 1;
    bool json_flag = false, recipe = false, corrupt = false;
    app.add_flag("--json", json_flag, "emit JSON on stdout (the default)");

    auto* classify = app.add_subcommand("classify", "quaternion algebra of an invariant");
    classify->add_option("--d", d, "squarefree positive field parameter")->required();
    classify->add_option("--delta", delta_text, "invariant, e.g. 2+3*sqrt(-5)")->required();

    auto* reduce = app.add_subcommand("reduce", "normal form of a unitary-symmetric matrix");
    reduce->add_option("--d", d)->required();
    reduce->add_option("entries", entries, "nine field-element literals, row-major")
        ->expected(9);

    auto* construct = app.add_subcommand("construct", "realize a ramification set");
    construct->add_option("--d", d)->required();
    construct->add_option("--primes", primes_csv, "comma-separated finite places");
    construct->add_flag("--recipe", recipe, "use the congruence recipe instead of the scan");

    auto* comm = app.add_subcommand("commensurable", "compare two invariants");
    comm->add_option("--d", d)->required();
    comm->add_option("--delta", delta_text, "first invariant")->required();
    comm->add_option("delta2", delta2_text, "second invariant")->required();

    auto* orbit = app.add_subcommand("orbit-svg", "render an orbit of the standard circle");
    orbit->add_option("--d", d)->required();
    orbit->add_option("--radius", radius, "word-ball radius (0..6)");
    orbit->add_option("--density", density, "sample points per circle (8..4096)");
    orbit->add_option("--out", out_path, "output SVG path");

    auto* selfcheck = app.add_subcommand("selfcheck", "run the module invariant suites");
    selfcheck->add_option("--seed", seed, "suite seed");
    selfcheck->add_flag("--corrupt", corrupt)->group("");  // test-only

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidInput;  // help stays 0, bad usage is 2
    }

    try {
        if (classify->parsed()) return run_classify(require_d(d), delta_text);
        if (reduce->parsed()) return run_reduce(require_d(d), entries);
        if (construct->parsed()) return run_construct(require_d(d), primes_csv, recipe);
        if (comm->parsed()) return run_commensurable(require_d(d), delta_text, delta2_text);
        if (orbit->parsed()) return run_orbit_svg(require_d(d), radius, density, out_path);
        if (selfcheck->parsed()) return run_selfcheck_cmd(seed, corrupt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
