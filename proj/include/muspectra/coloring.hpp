#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "muspectra/graph.hpp"

namespace muspectra {

/// Set of colors drawn from [1,64]. Color k is stored in bit k-1.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) insert(c);
  }
  static ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = BitSet64<ColorSet>(bits);
    return s;
  }

  void insert(int color) { bits_.insert(color - 1); }
  bool contains(int color) const { return bits_.contains(color - 1); }
  bool empty() const { return bits_.empty(); }
  int size() const { return bits_.size(); }
  int min() const { return bits_.min() + 1; }
  int max() const { return bits_.max() + 1; }
  std::uint64_t bits() const { return bits_.bits(); }

  std::vector<int> members() const {
    std::vector<int> out = bits_.members();
    for (int& c : out) ++c;
    return out;
  }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

 private:
  BitSet64<ColorSet> bits_;
};

std::string to_string(const ColorSet& s);  // "{1,2,4}"

/// Colors per edge index, 1-based, with the palette size t. This is a plain
/// container: it may hold an improper assignment until `validate` says
/// otherwise.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int t, std::vector<int> colors) : t_(t), colors_(std::move(colors)) {}

  int t() const { return t_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int color(int e) const { return colors_.at(e); }
  std::span<const int> colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int t_ = 0;
  std::vector<int> colors_;
};

struct Violation {
  enum class Kind { Length, PaletteSize, ColorRange, Properness, Surjectivity };
  Kind kind;
  std::string message;
};

std::string_view kind_name(Violation::Kind kind);

/// Every way `c` fails to be a proper edge t-coloring of `g`; empty when it is
/// one. Never throws.
std::vector<Violation> validate(const Graph& g, const EdgeColoring& c);

class InvalidColoring : public std::invalid_argument {
 public:
  explicit InvalidColoring(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

ColorSet spectrum(const Graph& g, const EdgeColoring& c, int v);

/// True iff `s` is a set of consecutive integers. Throws on an empty set.
bool is_interval(const ColorSet& s);

struct SpectrumReport {
  std::vector<ColorSet> spectra;
  std::vector<bool> interval;
  VertexSet v_int;
  int f = 0;
};

/// Spectra, interval flags and f for a proper coloring. Throws
/// InvalidColoring if `c` does not validate.
SpectrumReport analyze(const Graph& g, const EdgeColoring& c);

/// Maps color k to t+1-k.
EdgeColoring reflect(const EdgeColoring& c);

}  // namespace muspectra
