#pragma once
// Lyndon word bases of free Lie algebras on weighted generators. Bases are
// built per weight from standard factorization pairs and cached; brackets of
// basis elements are rewritten into the basis by the standard factorization
// climb (antisymmetry plus Jacobi), memoized per ordered pair.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/generator_spec.hpp"
#include "gradedlie/rational.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Identifies a Lyndon basis element by weight magnitude and its position in
// the lexicographically sorted word list of that magnitude.
struct BasisKey {
  int mag = 0;
  std::uint32_t idx = 0;

  auto operator<=>(const BasisKey&) const = default;
};

struct LyndonBasisElement {
  Word word;
  int weight = 0;         // signed, user facing
  std::size_t split = 0;  // left factor length of the standard factorization; 0 for letters
};

using TermMap = std::map<BasisKey, Scalar>;

namespace detail {

inline void accumulate(TermMap& dst, const TermMap& src, const Scalar& scale) {
  if (scale == 0) return;
  for (const auto& [k, c] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, scale * c);
    } else {
      it->second += scale * c;
      if (it->second == 0) dst.erase(it);
    }
  }
}

}  // namespace detail

class FreeLieAlgebra {
 public:
  static constexpr std::size_t kMaxMaterializedWords = 5'000'000;

  static std::shared_ptr<const FreeLieAlgebra> make(GeneratorSpec spec) {
    return std::shared_ptr<const FreeLieAlgebra>(new FreeLieAlgebra(std::move(spec)));
  }

  const GeneratorSpec& spec() const { return spec_; }
  int sign() const { return spec_.sign(); }

  // Witt dimension of the weight slice, without materializing words.
  std::size_t dim(int mag) const {
    std::lock_guard<std::mutex> guard(lock_);
    return checked_dim(mag);
  }

  const std::vector<Word>& words(int mag) const {
    std::lock_guard<std::mutex> guard(lock_);
    ensure_built(mag);
    return slices_.at(mag).words;
  }

  const Word& word(BasisKey k) const {
    std::lock_guard<std::mutex> guard(lock_);
    ensure_built(k.mag);
    return slices_.at(k.mag).words.at(k.idx);
  }

  std::size_t split_of(BasisKey k) const {
    std::lock_guard<std::mutex> guard(lock_);
    ensure_built(k.mag);
    return slices_.at(k.mag).splits.at(k.idx);
  }

  BasisKey find(const Word& w) const {
    std::lock_guard<std::mutex> guard(lock_);
    return find_locked(w);
  }

  int word_magnitude(const Word& w) const {
    int mag = 0;
    for (Letter l : w) mag += spec_.magnitude(l);
    return mag;
  }

  TermMap pair_bracket(BasisKey a, BasisKey b) const {
    std::lock_guard<std::mutex> guard(lock_);
    return pair_bracket_locked(a, b, 0);
  }

 private:
  struct Slice {
    std::vector<Word> words;
    std::vector<std::uint32_t> splits;
  };

  explicit FreeLieAlgebra(GeneratorSpec spec) : spec_(std::move(spec)) {}

  std::size_t checked_dim(int mag) const {
    if (mag <= 0) throw DomainError("weight magnitude must be positive");
    if (static_cast<std::size_t>(mag) >= witt_.size()) {
      std::vector<int> magnitudes;
      for (std::size_t i = 0; i < spec_.size(); ++i) magnitudes.push_back(spec_.magnitude(i));
      witt_ = detail::witt_magnitudes(magnitudes, mag);
    }
    const Int& d = witt_[mag];
    if (d > kMaxMaterializedWords) throw DomainError("basis slice too large to materialize");
    return static_cast<std::size_t>(d);
  }

  void ensure_built(int mag) const {
    if (mag <= 0) throw DomainError("weight magnitude must be positive");
    for (int m = 1; m <= mag; ++m) {
      if (slices_.count(m)) continue;
      const std::size_t expected = checked_dim(m);
      if (materialized_ + expected > kMaxMaterializedWords)
        throw DomainError("basis materialization exceeds the size cap");
      slices_.emplace(m, build_slice(m, expected));
      materialized_ += expected;
    }
  }

  Slice build_slice(int mag, std::size_t expected) const {
    std::vector<std::pair<Word, std::uint32_t>> found;
    for (std::size_t i = 0; i < spec_.size(); ++i)
      if (spec_.magnitude(i) == mag) found.push_back({Word{static_cast<Letter>(i)}, 0});
    for (int wl = 1; wl < mag; ++wl) {
      const int wr = mag - wl;
      const auto lit = slices_.find(wl);
      const auto rit = slices_.find(wr);
      if (lit == slices_.end() || rit == slices_.end()) continue;
      const Slice& left = lit->second;
      const Slice& right = rit->second;
      for (std::size_t ui = 0; ui < left.words.size(); ++ui) {
        const Word& u = left.words[ui];
        const std::uint32_t su = left.splits[ui];
        for (const Word& v : right.words) {
          if (!(u < v)) continue;
          // (u, v) is a standard pair iff u is a letter or the right factor
          // of u is >= v; then uv is Lyndon with standard split at |u|.
          if (u.size() > 1 &&
              std::lexicographical_compare(u.begin() + su, u.end(), v.begin(), v.end()))
            continue;
          Word w = u;
          w.insert(w.end(), v.begin(), v.end());
          found.push_back({std::move(w), static_cast<std::uint32_t>(u.size())});
        }
      }
    }
    std::sort(found.begin(), found.end());
    for (std::size_t i = 1; i < found.size(); ++i)
      if (found[i].first == found[i - 1].first)
        throw std::logic_error("duplicate Lyndon word from pair construction");
    if (found.size() != expected)
      throw std::logic_error("Lyndon slice size disagrees with the Witt dimension");
    Slice s;
    s.words.reserve(found.size());
    s.splits.reserve(found.size());
    for (auto& [w, split] : found) {
      s.words.push_back(std::move(w));
      s.splits.push_back(split);
    }
    return s;
  }

  BasisKey find_locked(const Word& w) const {
    const int mag = word_magnitude(w);
    ensure_built(mag);
    const Slice& s = slices_.at(mag);
    const auto it = std::lower_bound(s.words.begin(), s.words.end(), w);
    if (it == s.words.end() || *it != w) throw std::logic_error("word is not a Lyndon basis element");
    return BasisKey{mag, static_cast<std::uint32_t>(it - s.words.begin())};
  }

  bool standard_pair_locked(BasisKey a, const Word& wa, const Word& wb) const {
    if (wa.size() == 1) return true;
    const std::uint32_t split = slices_.at(a.mag).splits.at(a.idx);
    return !std::lexicographical_compare(wa.begin() + split, wa.end(), wb.begin(), wb.end());
  }

  TermMap pair_bracket_locked(BasisKey a, BasisKey b, int depth) const {
    if (depth > 10000) throw std::logic_error("bracket rewriting recursion too deep");
    if (a == b) return {};
    ensure_built(a.mag);
    ensure_built(b.mag);
    const Word& wa = slices_.at(a.mag).words.at(a.idx);
    const Word& wb = slices_.at(b.mag).words.at(b.idx);
    if (wb < wa) {
      TermMap flipped = pair_bracket_locked(b, a, depth + 1);
      for (auto& [k, c] : flipped) c = -c;
      return flipped;
    }
    const auto memo = bracket_memo_.find({a, b});
    if (memo != bracket_memo_.end()) return memo->second;

    TermMap result;
    if (standard_pair_locked(a, wa, wb)) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      result.emplace(find_locked(w), Scalar(1));
    } else {
      const std::uint32_t split = slices_.at(a.mag).splits.at(a.idx);
      const BasisKey a1 = find_locked(Word(wa.begin(), wa.begin() + split));
      const BasisKey a2 = find_locked(Word(wa.begin() + split, wa.end()));
      // [a, b] = [a1, [a2, b]] - [a2, [a1, b]] for a = [a1, a2]
      for (const auto& [t, c] : pair_bracket_locked(a2, b, depth + 1))
        detail::accumulate(result, pair_bracket_locked(a1, t, depth + 1), c);
      for (const auto& [t, c] : pair_bracket_locked(a1, b, depth + 1))
        detail::accumulate(result, pair_bracket_locked(a2, t, depth + 1), -c);
    }
    bracket_memo_.emplace(std::make_pair(a, b), result);
    return result;
  }

  GeneratorSpec spec_;
  mutable std::mutex lock_;
  mutable std::map<int, Slice> slices_;
  mutable std::vector<Int> witt_;
  mutable std::map<std::pair<BasisKey, BasisKey>, TermMap> bracket_memo_;
  mutable std::size_t materialized_ = 0;
};

inline std::vector<LyndonBasisElement> lyndon_basis(const GeneratorSpec& spec, int weight_bound) {
  const int bound = detail::checked_magnitude_bound(spec, weight_bound);
  std::vector<LyndonBasisElement> out;
  if (spec.empty()) return out;
  const auto alg = FreeLieAlgebra::make(spec);
  for (int m = 1; m <= bound; ++m) {
    const auto& words = alg->words(m);
    for (std::uint32_t i = 0; i < words.size(); ++i) {
      const BasisKey key{m, i};
      out.push_back({words[i], spec.sign() * m, alg->split_of(key)});
    }
  }
  return out;
}

}  // namespace gradedlie
