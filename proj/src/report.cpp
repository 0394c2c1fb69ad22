#include "picard/report.hpp"

#include "picard/literal.hpp"

namespace picard {

ClassReport make_class_report(long d, const FieldElement& delta) {
    if (delta.is_zero() || !delta.is_integer())
        throw std::invalid_argument("classification needs a nonzero integer of K");
    FieldElement canon = squarefree_delta(delta);
    QuaternionAlgebraQ alg = delta_algebra(delta);
    return {d, delta, canon, alg, ramification_set(alg)};
}

Json rational_json(const Rational& r) { return r.str(); }

Json field_element_json(const FieldElement& z) {
    Json j;
    j["re"] = z.re().str();
    j["im"] = z.im().str();
    return j;
}

Json ramification_json(const RamificationSet& ram) {
    Json j;
    j["finite"] = Json::array();
    for (const Int& p : ram.finite_places) j["finite"].push_back(p.get_si());
    j["infinite"] = ram.infinite_place;
    return j;
}

Json algebra_json(const QuaternionAlgebraQ& alg) {
    Json j;
    j["a"] = alg.a.get_si();
    j["b"] = alg.b.get_si();
    return j;
}

Json matrix_json(const MatK& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; i++) {
        Json row = Json::array();
        for (int j = 0; j < 3; j++) row.push_back(format_field_element(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const ClassReport& report) {
    Json j;
    j["d"] = report.d;
    j["input_delta"] = field_element_json(report.input_delta);
    j["canonical_delta"] = field_element_json(report.canonical_delta);
    j["algebra"] = algebra_json(report.algebra);
    j["ramification"] = ramification_json(report.ram);
    return j;
}

}  // namespace picard
