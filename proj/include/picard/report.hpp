#pragma once

#include <json.hpp>

#include "picard/fuchsian.hpp"

namespace picard {

using Json = nlohmann::ordered_json;

/// Classification payload shared by the reporting commands: canonical
/// invariant, Hilbert pair and ramification, all fields mutually consistent.
struct ClassReport {
    long d;
    FieldElement input_delta;
    FieldElement canonical_delta;
    QuaternionAlgebraQ algebra;
    RamificationSet ram;
};

ClassReport make_class_report(long d, const FieldElement& delta);

Json to_json(const ClassReport& report);
Json rational_json(const Rational& r);        // "num/den"
Json field_element_json(const FieldElement& z);
Json ramification_json(const RamificationSet& ram);
Json algebra_json(const QuaternionAlgebraQ& alg);
Json matrix_json(const MatK& m);  // 3x3 array of literals

}  // namespace picard
