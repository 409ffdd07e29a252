#pragma once

#include <string>

#include "nilfields/algebra.hpp"
#include "nilfields/classifier.hpp"
#include "nilfields/connection.hpp"
#include "nilfields/verify.hpp"

namespace nilfields {

// Plain-text views used by the CLI; deterministic byte-for-byte.

std::string render_validate_text(const MetricLieAlgebra& alg);
std::string render_christoffel_text(const ChristoffelTensor& g);
std::string render_report_text(const ClassificationReport& report);
std::string render_verify_text(const VerifyReport& report);
std::string render_families_text();

}  // namespace nilfields
