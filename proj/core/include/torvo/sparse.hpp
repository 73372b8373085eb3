#pragma once

#include <torvo/scalar.hpp>

#include <cstddef>
#include <map>
#include <utility>

namespace torvo {

// Finite formal combination of basis keys with rational coefficients.
// Zero coefficients are never stored, so equality is plain map equality.
template <class Key>
class SparseVector {
 public:
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  SparseVector() = default;
  SparseVector(const Key& k, const Scalar& c) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(Key&& k, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const SparseVector& other, const Scalar& c) {
    if (is_zero(c)) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  SparseVector& operator*=(const Scalar& c) {
    if (is_zero(c)) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Scalar(-1); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

 private:
  map_type terms_;
};

}  // namespace torvo
