#include "muspectra/fixtures.hpp"

#include <initializer_list>
#include <utility>

namespace muspectra {

namespace {

using EdgeKey = std::pair<const char*, const char*>;

struct ColorClass {
  int color;
  std::initializer_list<EdgeKey> edges;
};

// One step of a recoloring sequence: every listed edge takes `color`, all
// other edges keep the predecessor's color.
struct Patch {
  const char* name;
  int t;
  int f;
  ColorClass recolor;
};

int edge_of(const Graph& g, const EdgeKey& key) {
  const auto e = g.find_edge(g.vertex(key.first), g.vertex(key.second));
  if (!e) throw std::logic_error(std::string("fixture edge ") + key.first + "-" + key.second);
  return *e;
}

std::vector<int> from_classes(const Graph& g, std::initializer_list<ColorClass> classes) {
  std::vector<int> colors(g.edge_count(), 0);
  for (const ColorClass& cls : classes) {
    for (const EdgeKey& key : cls.edges) colors[edge_of(g, key)] = cls.color;
  }
  return colors;
}

Certificate claim(const Graph& g, std::string name, int t, std::vector<int> colors, int f) {
  Certificate cert{std::move(name), "petersen", g, EdgeColoring(t, std::move(colors)), f, {}};
  return cert;
}

void apply_sequence(const Graph& g, std::map<std::string, Certificate>& out,
                    const Certificate& base, std::initializer_list<Patch> patches) {
  std::vector<int> colors(base.coloring.colors().begin(), base.coloring.colors().end());
  for (const Patch& p : patches) {
    for (const EdgeKey& key : p.recolor.edges) colors[edge_of(g, key)] = p.recolor.color;
    out.emplace(p.name, claim(g, p.name, p.t, colors, p.f));
  }
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"phi", "psi", "epsilon", "sigma"};
    for (int k = 0; k <= 10; ++k) n.push_back("psi" + std::to_string(k));
    for (int k = 0; k <= 10; ++k) n.push_back("lambda" + std::to_string(k));
    return n;
  }();
  return names;
}

std::map<std::string, Certificate> fixtures() {
  const Graph g = petersen();
  std::map<std::string, Certificate> out;

  const Certificate phi = claim(g, "phi", 15,
                                from_classes(g, {{1, {{"x1", "x2"}}},
                                                 {2, {{"x1", "y1"}}},
                                                 {3, {{"y1", "y3"}}},
                                                 {4, {{"x1", "x5"}}},
                                                 {5, {{"x5", "y5"}}},
                                                 {6, {{"y1", "y4"}}},
                                                 {7, {{"x4", "x5"}}},
                                                 {8, {{"x4", "y4"}}},
                                                 {9, {{"y2", "y5"}}},
                                                 {10, {{"x3", "x4"}}},
                                                 {11, {{"x3", "y3"}}},
                                                 {12, {{"y3", "y5"}}},
                                                 {13, {{"x2", "x3"}}},
                                                 {14, {{"x2", "y2"}}},
                                                 {15, {{"y2", "y4"}}}}),
                                0);
  const Certificate psi = claim(g, "psi", 15,
                                from_classes(g, {{1, {{"y1", "y3"}}},
                                                 {2, {{"y3", "y5"}}},
                                                 {3, {{"x3", "y3"}}},
                                                 {4, {{"x2", "x3"}}},
                                                 {5, {{"x3", "x4"}}},
                                                 {6, {{"x4", "y4"}}},
                                                 {7, {{"x4", "x5"}}},
                                                 {8, {{"x5", "y5"}}},
                                                 {9, {{"x1", "x5"}}},
                                                 {10, {{"x1", "y1"}}},
                                                 {11, {{"x1", "x2"}}},
                                                 {12, {{"x2", "y2"}}},
                                                 {13, {{"y2", "y5"}}},
                                                 {14, {{"y2", "y4"}}},
                                                 {15, {{"y1", "y4"}}}}),
                                6);
  const Certificate epsilon =
      claim(g, "epsilon", 4,
            from_classes(g, {{1, {{"x1", "y1"}, {"x2", "x3"}, {"y3", "y5"}, {"x4", "x5"}, {"y2", "y4"}}},
                             {2, {{"x1", "x2"}, {"x3", "x4"}, {"y2", "y5"}}},
                             {3, {{"y1", "y4"}, {"x3", "y3"}, {"x5", "y5"}}},
                             {4, {{"x1", "x5"}, {"y1", "y3"}, {"x4", "y4"}, {"x2", "y2"}}}}),
            2);
  const Certificate sigma =
      claim(g, "sigma", 4,
            from_classes(g, {{1, {{"y1", "y4"}, {"y3", "y5"}}},
                             {2, {{"x1", "x2"}, {"y1", "y3"}, {"x3", "x4"}, {"y2", "y4"}, {"x5", "y5"}}},
                             {3, {{"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}, {"x1", "x5"}}},
                             {4, {{"x1", "y1"}, {"x2", "x3"}, {"x4", "x5"}, {"y2", "y5"}}}}),
            8);

  for (const Certificate* c : {&phi, &psi, &epsilon, &sigma}) out.emplace(c->name, *c);

  Certificate psi0 = psi;
  psi0.name = "psi0";
  out.emplace("psi0", psi0);
  apply_sequence(g, out, psi0,
                 {{"psi1", 14, 6, {2, {{"y1", "y4"}}}},
                  {"psi2", 13, 6, {11, {{"y2", "y4"}}}},
                  {"psi3", 12, 6, {10, {{"y2", "y5"}}}},
                  {"psi4", 11, 6, {9, {{"x2", "y2"}}}},
                  {"psi5", 10, 6, {8, {{"x1", "x2"}, {"y2", "y4"}}}},
                  {"psi6", 9, 6, {7, {{"x1", "y1"}, {"y2", "y5"}}}},
                  {"psi7", 8, 6, {6, {{"x1", "x5"}, {"x2", "y2"}}}},
                  {"psi8", 7, 7, {5, {{"x1", "x2"}, {"x5", "y5"}, {"y2", "y4"}}}},
                  {"psi9", 6, 7, {4, {{"x1", "y1"}, {"x4", "x5"}, {"y2", "y5"}}}},
                  {"psi10", 5, 7, {3, {{"x1", "x5"}, {"x4", "y4"}, {"x2", "y2"}}}}});

  Certificate lambda0 = epsilon;
  lambda0.name = "lambda0";
  out.emplace("lambda0", lambda0);
  apply_sequence(g, out, lambda0,
                 {{"lambda1", 5, 0, {5, {{"x2", "x3"}, {"y2", "y5"}}}},
                  {"lambda2", 6, 0, {6, {{"y3", "y5"}}}},
                  {"lambda3", 7, 0, {7, {{"y2", "y4"}}}},
                  {"lambda4", 8, 0, {8, {{"x4", "x5"}}}},
                  {"lambda5", 9, 0, {9, {{"x1", "x2"}}}},
                  {"lambda6", 10, 0, {10, {{"x5", "y5"}}}},
                  {"lambda7", 11, 0, {11, {{"x3", "y3"}}}},
                  {"lambda8", 12, 0, {12, {{"x4", "y4"}}}},
                  {"lambda9", 13, 0, {13, {{"y1", "y3"}}}},
                  {"lambda10", 14, 0, {14, {{"x2", "y2"}}}}});
  return out;
}

}  // namespace muspectra
