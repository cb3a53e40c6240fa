#pragma once

#include <string>

#include "witt/bialgebra.hpp"
#include "witt/suites.hpp"

namespace witt {

enum class ReportFormat { kText, kDoc };

ReportFormat report_format_from_name(const std::string& name);

/// Deterministic renderings: one fixed line order for text, one fixed key
/// order for the machine-readable document.
std::string render_report(const ClassificationReport& rep,
                          const AlgebraConfig& cfg, int samples,
                          ReportFormat format);
std::string render_report(const SuiteReport& rep, ReportFormat format);

}  // namespace witt
