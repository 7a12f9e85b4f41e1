#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jostlab/arcscan.hpp"
#include "jostlab/qat.hpp"

namespace jostlab::cli {

//! Log-scale plot of the max modulus against the radius, with the fitted curve when given.
/*! Throws PreconditionError on an empty report. */
std::string render_svg(const ArcScanReport& report, const std::optional<GrowthFit>& fit);

//! |phi(t)| against t with a marker at t = 0 and the oracle (if any) dashed.
std::string render_svg(const TimeSignal& signal, const std::vector<cplx>& oracle = {});

//! Render and write. Nothing is written when rendering fails.
void emit_plot(const ArcScanReport& report, const std::optional<GrowthFit>& fit,
               const std::filesystem::path& path);
void emit_plot(const TimeSignal& signal, const std::vector<cplx>& oracle,
               const std::filesystem::path& path);

}  // namespace jostlab::cli
