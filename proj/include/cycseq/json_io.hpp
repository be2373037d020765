#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycseq/cyclofield.hpp"
#include "cycseq/increments.hpp"
#include "cycseq/intpoly.hpp"

namespace cycseq {

using json = nlohmann::json;

/// Polynomials travel as arrays of decimal integer strings, ascending degree:
/// "3x^2+5x+2" <-> ["2","5","3"]. Plain numbers are accepted on input.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json increments_to_json(const IncrementSeq& s);
IncrementSeq increments_from_json(const json& j);

json cyc_to_json(const CycElement& e);

/// Sequence values: rational strings/numbers, or [re, im] pairs for complex
/// entries.
std::vector<Rat> values_rat_from_json(const json& j);
std::vector<std::complex<double>> values_complex_from_json(const json& j);
bool values_all_rational(const json& j);

json values_to_json(const std::vector<Rat>& values);
json values_to_json(const std::vector<Int>& values);

} // namespace cycseq
