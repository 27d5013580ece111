#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "merger_er/interval.hpp"
#include "merger_er/kulpa.hpp"
#include "merger_er/model.hpp"

namespace merger_er {

inline constexpr std::size_t kDefaultSamples = 512;

struct SeriesSample {
    double parameter = 0.0;
    double low = 0.0;
    double high = 0.0;
};

/// Envelope of a bargaining region against the post-merger parameter.
/// Parameters are strictly increasing and low <= high at every sample.
struct Series {
    std::string name;
    std::string parameter_name;  // "mu_m" or "rho_m"
    std::vector<SeriesSample> points;
};

/// n evenly spaced samples of br_mu over mu_range (which must lie in
/// [mu_A + mu_B, inf) and have positive width).
Series sweep_br_mu(const MergerPair& pair, const Interval& mu_range, std::size_t n);

/// n samples of br_rho over rho_range inside (max rho, rho_A + rho_B]. A range
/// starting at the excluded lower end is sampled from half a step inside.
Series sweep_br_rho(const MergerPair& pair, const Interval& rho_range, std::size_t n);

enum class CurveRole { GammaBranch, DeltaBranch, Asymptote, Locus };

std::string_view to_string(CurveRole role) noexcept;

/// Sampled curve plus the exact curve it was sampled from.
struct Polyline {
    std::string label;
    CurveRole role = CurveRole::GammaBranch;
    std::variant<HyperbolaKind, Line> source;
    std::vector<KulpaPoint> points;
};

/// n samples of the admissible branch for parameters in clamp ∩ domain, ordered
/// by parameter. An excluded domain end is replaced by a point half a step inside.
Polyline sweep_curve(const Hyperbola& hyperbola, std::size_t n, const Interval& clamp);

struct Marker {
    std::string label;
    KulpaPoint point;
};

/// World-coordinate bounds of a scene.
struct Frame {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
};

struct Scene {
    std::vector<Polyline> curves;
    std::vector<Marker> markers;
    /// The resulting interval drawn on the horizontal axis, (lo, 0) - (hi, 0).
    std::optional<std::array<KulpaPoint, 2>> result_segment;
    std::vector<std::string> annotations;
    RegionReport report;
    Frame frame;
};

struct SceneOptions {
    std::size_t samples = kDefaultSamples;
    /// Upper end of the gamma sweep; 0 picks max(2 (mu_A + mu_B), 1.5 mu_M).
    double mu_extent = 0.0;
    double eps = kDefaultEpsilon;
};

/// Kulpa diagram for one outcome: both admissible branches, their asymptotes,
/// P_mu and P_rho, and for non-empty cases the result point with the locus of
/// its case at fixed rho_M.
Scene build_scene(const MergerPair& pair, double mu_m, double rho_m, const SceneOptions& options = {});

struct SvgStyle {
    double width = 720.0;  // pixels; scene height follows from equal aspect
    double series_height = 480.0;
    double margin = 0.12;  // fraction of the feature span added on each side
    bool legend = true;
    std::string font_family = "sans-serif";
    double font_size = 12.0;
};

/// SVG 1.1 document. Output is byte-identical for identical input and style.
std::string emit_svg(const Scene& scene, const SvgStyle& style = {});
std::string emit_svg(const Series& series, const SvgStyle& style = {});

/// RFC 4180 CSV with header "<parameter_name>,r_lower,r_upper" and CRLF line ends.
std::string emit_csv(const Series& series);

/// Writes bytes to path; Error(EncodingFailure) on I/O failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace merger_er
