#pragma once
// Elements of a free Lie algebra as exact rational combinations of Lyndon
// basis elements, with bilinear bracket and canonical text rendering.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "gradedlie/errors.hpp"
#include "gradedlie/lyndon.hpp"

namespace gradedlie {

class LieElement {
 public:
  LieElement() = default;  // zero of no particular algebra

  static LieElement zero(std::shared_ptr<const FreeLieAlgebra> alg) {
    return LieElement(std::move(alg), {});
  }

  static LieElement basis_element(std::shared_ptr<const FreeLieAlgebra> alg, BasisKey key) {
    TermMap terms;
    terms.emplace(key, Scalar(1));
    return LieElement(std::move(alg), std::move(terms));
  }

  static LieElement generator(std::shared_ptr<const FreeLieAlgebra> alg, const std::string& label) {
    const auto index = alg->spec().index_of(label);
    if (!index) throw DomainError("unknown generator '" + label + "'");
    const BasisKey key = alg->find(Word{static_cast<Letter>(*index)});
    return basis_element(std::move(alg), key);
  }

  LieElement(std::shared_ptr<const FreeLieAlgebra> alg, TermMap terms)
      : alg_(std::move(alg)), terms_(std::move(terms)) {}

  const std::shared_ptr<const FreeLieAlgebra>& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int mag = terms_.begin()->first.mag;
    for (const auto& [k, c] : terms_)
      if (k.mag != mag) return false;
    return true;
  }

  // Signed weight of a nonzero homogeneous element.
  std::optional<int> weight() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return alg_->sign() * terms_.begin()->first.mag;
  }

  LieElement& operator+=(const LieElement& other) {
    merge_algebra(other);
    detail::accumulate(terms_, other.terms_, Scalar(1));
    return *this;
  }

  LieElement& operator-=(const LieElement& other) {
    merge_algebra(other);
    detail::accumulate(terms_, other.terms_, Scalar(-1));
    return *this;
  }

  LieElement& operator*=(const Scalar& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }

  bool operator==(const LieElement& other) const {
    if (terms_.empty() && other.terms_.empty()) return true;
    return same_algebra(other) && terms_ == other.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " ; ";
      out += scalar_to_string(c) + " " + basis_word_string(*alg_, k);
    }
    return out;
  }

  static std::string basis_word_string(const FreeLieAlgebra& alg, BasisKey key) {
    const Word w = alg.word(key);
    if (w.size() == 1) return alg.spec().at(w[0]).label;
    const std::size_t split = alg.split_of(key);
    const Word left(w.begin(), w.begin() + split);
    const Word right(w.begin() + split, w.end());
    return "[" + basis_word_string(alg, alg.find(left)) + "," +
           basis_word_string(alg, alg.find(right)) + "]";
  }

 private:
  bool same_algebra(const LieElement& other) const {
    if (!alg_ || !other.alg_) return true;  // a bare zero matches any algebra
    return alg_ == other.alg_ || alg_->spec() == other.alg_->spec();
  }

  void merge_algebra(const LieElement& other) {
    if (!same_algebra(other)) throw DomainError("elements belong to different algebras");
    if (!alg_) alg_ = other.alg_;
  }

  std::shared_ptr<const FreeLieAlgebra> alg_;
  TermMap terms_;
};

inline LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() ? a : b.is_zero() ? b : LieElement();
  if (!(a.algebra() == b.algebra() || a.algebra()->spec() == b.algebra()->spec()))
    throw DomainError("bracket of elements from different algebras");
  const auto& alg = a.algebra();
  TermMap acc;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      detail::accumulate(acc, alg->pair_bracket(ka, kb), ca * cb);
  return LieElement(alg, std::move(acc));
}

}  // namespace gradedlie
