#include "muspectra/coloring.hpp"

namespace muspectra {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::string text = "invalid coloring:";
  for (const Violation& v : violations) text += "\n  " + v.message;
  return text;
}

}  // namespace

std::string to_string(const ColorSet& s) {
  std::string out = "{";
  bool first = true;
  for (int c : s.members()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

std::string_view kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Length: return "length";
    case Violation::Kind::PaletteSize: return "palette-size";
    case Violation::Kind::ColorRange: return "color-range";
    case Violation::Kind::Properness: return "properness";
    case Violation::Kind::Surjectivity: return "surjectivity";
  }
  return "unknown";
}

InvalidColoring::InvalidColoring(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Graph& g, const EdgeColoring& c) {
  std::vector<Violation> out;
  if (c.size() != g.edge_count()) {
    out.push_back({Violation::Kind::Length,
                   "coloring has " + std::to_string(c.size()) + " entries, graph has " +
                       std::to_string(g.edge_count()) + " edges"});
    return out;
  }
  const int t = c.t();
  if (t < 1 || t > g.edge_count()) {
    out.push_back({Violation::Kind::PaletteSize,
                   "t=" + std::to_string(t) + " outside [1," +
                       std::to_string(g.edge_count()) + "]"});
    return out;
  }
  std::vector<int> uses(t + 1, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int col = c.color(e);
    if (col < 1 || col > t) {
      out.push_back({Violation::Kind::ColorRange,
                     "edge " + g.edge_label(e) + " has color " + std::to_string(col) +
                         " outside [1," + std::to_string(t) + "]"});
    } else {
      ++uses[col];
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (c.color(inc[i].edge) != c.color(inc[j].edge)) continue;
        out.push_back({Violation::Kind::Properness,
                       "vertex " + g.label(v) + ": edges " + g.edge_label(inc[i].edge) +
                           " and " + g.edge_label(inc[j].edge) + " share color " +
                           std::to_string(c.color(inc[i].edge))});
      }
    }
  }
  for (int col = 1; col <= t; ++col) {
    if (uses[col] == 0) {
      out.push_back({Violation::Kind::Surjectivity,
                     "color " + std::to_string(col) + " is not used"});
    }
  }
  return out;
}

ColorSet spectrum(const Graph& g, const EdgeColoring& c, int v) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("unknown vertex index " + std::to_string(v));
  ColorSet s;
  for (const Incidence& inc : g.incident(v)) s.insert(c.color(inc.edge));
  return s;
}

bool is_interval(const ColorSet& s) {
  if (s.empty()) throw std::invalid_argument("an empty color set is not a spectrum");
  return s.max() - s.min() == s.size() - 1;
}

SpectrumReport analyze(const Graph& g, const EdgeColoring& c) {
  if (auto violations = validate(g, c); !violations.empty()) {
    throw InvalidColoring(std::move(violations));
  }
  SpectrumReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    ColorSet s = spectrum(g, c, v);
    const bool flag = is_interval(s);
    report.spectra.push_back(s);
    report.interval.push_back(flag);
    if (flag) report.v_int.insert(v);
  }
  report.f = report.v_int.size();
  return report;
}

EdgeColoring reflect(const EdgeColoring& c) {
  std::vector<int> colors(c.colors().begin(), c.colors().end());
  for (int& col : colors) col = c.t() + 1 - col;
  return EdgeColoring(c.t(), std::move(colors));
}

}  // namespace muspectra
