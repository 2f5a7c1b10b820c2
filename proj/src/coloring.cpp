#include "socolor/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "socolor/error.hpp"

namespace soc {

Coloring::Coloring(std::vector<Color> assignment) : assignment_(std::move(assignment)) {
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == 0) {
      throw InvalidColoring("vertex " + std::to_string(v) + " has color 0; colors are positive");
    }
  }
}

std::vector<Color> Coloring::palette() const {
  std::vector<Color> p(assignment_);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

Coloring Coloring::normalized() const {
  std::unordered_map<Color, Color> relabel;
  std::vector<Color> out;
  out.reserve(assignment_.size());
  for (Color c : assignment_) {
    auto [it, inserted] = relabel.try_emplace(c, static_cast<Color>(relabel.size() + 1));
    out.push_back(it->second);
  }
  return Coloring(std::move(out));
}

Coloring all_distinct(std::size_t n) {
  std::vector<Color> a(n);
  std::iota(a.begin(), a.end(), Color{1});
  return Coloring(std::move(a));
}

}  // namespace soc
