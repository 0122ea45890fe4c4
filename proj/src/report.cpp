#include "bigrade/report.hpp"

#include <algorithm>
#include <sstream>

namespace bigrade {

nlohmann::json to_json(Bidegree d) { return nlohmann::json::array({d.a, d.b}); }

nlohmann::json to_json(const Region& r) {
    nlohmann::json mins = nlohmann::json::array();
    for (const auto& m : r.minimal_elements()) mins.push_back(to_json(m));
    return {{"floor", to_json(r.floor())}, {"minimal_elements", mins}};
}

nlohmann::json to_json(const Certificate& c, const RingDescriptor& ring) {
    nlohmann::json j;
    switch (c.kind) {
        case CertificateKind::Absence: j["kind"] = "absence"; break;
        case CertificateKind::Presence: j["kind"] = "presence"; break;
        case CertificateKind::ExactCriterion: j["kind"] = "exact-criterion"; break;
    }
    if (c.bidegree) j["bidegree"] = to_json(*c.bidegree);
    j["region"] = to_json(c.region);
    j["verdict"] = c.verdict;
    if (c.witness) j["witness"] = c.witness->str(ring);
    return j;
}

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 40;

// Lattice point (a,b) to pixel center, origin bottom-left.
std::pair<int, int> center(Bidegree d, int height) {
    return {kMargin + d.a * kCell + kCell / 2,
            height - kMargin - d.b * kCell - kCell / 2};
}

} // namespace

std::string render_svg(const PlotSpec& spec) {
    int W = kMargin * 2 + (spec.box.a + 1) * kCell;
    int H = kMargin * 2 + (spec.box.b + 1) * kCell;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    static const char* kFills[] = {"#b3d9ff", "#c6e5b3", "#f5c6c6", "#e0cce8"};
    int fill_idx = 0;
    for (const auto& [label, region] : spec.regions) {
        const char* fill = kFills[fill_idx++ % 4];
        svg << "<g fill=\"" << fill << "\" fill-opacity=\"0.6\">\n";
        for (int a = 0; a <= spec.box.a; ++a)
            for (int b = 0; b <= spec.box.b; ++b)
                if (region.contains({a, b})) {
                    auto [cx, cy] = center({a, b}, H);
                    svg << "<rect x=\"" << cx - kCell / 2 << "\" y=\""
                        << cy - kCell / 2 << "\" width=\"" << kCell
                        << "\" height=\"" << kCell << "\"/>\n";
                }
        svg << "</g>\n";
        if (!label.empty()) {
            // Label near the first in-box corner of the region.
            for (const auto& m : region.minimal_elements())
                if (m.a <= spec.box.a && m.b <= spec.box.b) {
                    auto [cx, cy] = center(m, H);
                    svg << "<text x=\"" << cx + kCell << "\" y=\"" << cy
                        << "\" font-size=\"12\">" << label << "</text>\n";
                    break;
                }
        }
    }

    // Grid.
    svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int a = 0; a <= spec.box.a + 1; ++a)
        svg << "<line x1=\"" << kMargin + a * kCell << "\" y1=\"" << kMargin
            << "\" x2=\"" << kMargin + a * kCell << "\" y2=\"" << H - kMargin
            << "\"/>\n";
    for (int b = 0; b <= spec.box.b + 1; ++b)
        svg << "<line x1=\"" << kMargin << "\" y1=\"" << H - kMargin - b * kCell
            << "\" x2=\"" << W - kMargin << "\" y2=\"" << H - kMargin - b * kCell
            << "\"/>\n";
    svg << "</g>\n";

    // Axes and tick labels.
    svg << "<g font-size=\"11\" text-anchor=\"middle\">\n";
    for (int a = 0; a <= spec.box.a; ++a)
        svg << "<text x=\"" << kMargin + a * kCell + kCell / 2 << "\" y=\""
            << H - kMargin + 16 << "\">" << a << "</text>\n";
    for (int b = 0; b <= spec.box.b; ++b)
        svg << "<text x=\"" << kMargin - 14 << "\" y=\""
            << H - kMargin - b * kCell - kCell / 2 + 4 << "\">" << b << "</text>\n";
    svg << "<text x=\"" << W - kMargin + 18 << "\" y=\"" << H - kMargin + 16
        << "\" font-style=\"italic\">a</text>\n";
    svg << "<text x=\"" << kMargin - 14 << "\" y=\"" << kMargin - 10
        << "\" font-style=\"italic\">b</text>\n";
    svg << "</g>\n";

    // Generator dots on top.
    svg << "<g fill=\"#1a7f1a\">\n";
    for (const auto& d : spec.generator_dots)
        if (d.a <= spec.box.a && d.b <= spec.box.b) {
            auto [cx, cy] = center(d, H);
            svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\"/>\n";
        }
    svg << "</g>\n";

    svg << "</svg>\n";
    return svg.str();
}

} // namespace bigrade
