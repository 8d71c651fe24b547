#pragma once
// Weighted generator sets for free Lie algebras. Weights share one sign
// (motivic data uses negative even weights); the engine works with positive
// magnitudes internally and keeps the sign as metadata.

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradedlie/errors.hpp"

namespace gradedlie {

struct Generator {
  std::string label;
  int weight = 0;

  bool operator==(const Generator&) const = default;
};

inline bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(label[0])) || label[0] == '_')) return false;
  for (char c : label)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

class GeneratorSpec {
 public:
  static constexpr std::size_t kMaxGenerators = 255;

  GeneratorSpec() = default;

  explicit GeneratorSpec(std::vector<Generator> generators) : generators_(std::move(generators)) {
    if (generators_.size() > kMaxGenerators) throw DomainError("too many generators");
    std::set<std::string> seen;
    for (const Generator& g : generators_) {
      if (!is_valid_label(g.label)) throw DomainError("invalid generator label '" + g.label + "'");
      if (!seen.insert(g.label).second) throw DomainError("duplicate generator label '" + g.label + "'");
      if (g.weight == 0) throw DomainError("generator '" + g.label + "' has zero weight");
      if ((g.weight > 0) != (generators_.front().weight > 0))
        throw DomainError("generator weights must share one sign");
    }
    std::sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
      const int ma = a.weight < 0 ? -a.weight : a.weight;
      const int mb = b.weight < 0 ? -b.weight : b.weight;
      return ma != mb ? ma < mb : a.label < b.label;
    });
  }

  const std::vector<Generator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }
  const Generator& at(std::size_t i) const { return generators_.at(i); }

  // +1 or -1; an empty spec has no inherent sign and reports +1.
  int sign() const {
    if (generators_.empty()) return 1;
    return generators_.front().weight > 0 ? 1 : -1;
  }

  int magnitude(std::size_t i) const {
    const int w = generators_.at(i).weight;
    return w < 0 ? -w : w;
  }

  int min_magnitude() const {
    if (generators_.empty()) return 0;
    return magnitude(0);
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].label == label) return i;
    return std::nullopt;
  }

  bool operator==(const GeneratorSpec&) const = default;

 private:
  std::vector<Generator> generators_;
};

}  // namespace gradedlie
