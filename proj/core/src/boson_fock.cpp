#include <torvo/boson_fock.hpp>

#include <algorithm>
#include <stdexcept>

namespace torvo {

std::int64_t BosonKey::energy2() const {
  std::int64_t e = 0;
  for (const auto& b : phi) e -= b.mode2;
  for (const auto& b : phi_star) e -= b.mode2;
  return e;
}

std::int64_t BosonKey::depth() const {
  std::int64_t d = 0;
  for (const auto& b : phi) d = std::max<std::int64_t>(d, -b.mode2);
  for (const auto& b : phi_star) d = std::max<std::int64_t>(d, -b.mode2);
  return d;
}

void BosonKey::canonicalize() {
  for (const auto* part : {&phi, &phi_star})
    for (const auto& b : *part)
      if (b.mode2 > -1 || b.mode2 % 2 == 0)
        throw std::invalid_argument("boson creation modes need odd negative doubled index");
  std::sort(phi.begin(), phi.end());
  std::sort(phi_star.begin(), phi_star.end());
}

void BosonSpace::validate() const {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
}

BosonState boson_vacuum() { return BosonState(BosonKey{}, Scalar(1)); }

namespace {

void check_flavor(const BosonSpace& space, int flavor) {
  if (flavor < 1 || flavor > space.N) throw std::out_of_range("boson flavor out of range");
}

void check_key(const BosonSpace& space, const BosonKey& key) {
  for (const auto* part : {&key.phi, &key.phi_star})
    for (const auto& b : *part) check_flavor(space, b.flavor);
}

void insert_sorted(std::vector<BosonMode>& v, BosonMode m) {
  v.insert(std::upper_bound(v.begin(), v.end(), m), m);
}

// removes one copy of m from `from`; the coefficient is its multiplicity
BosonState contract(const BosonKey& key, bool from_phi, BosonMode m, const Scalar& sign) {
  BosonState out;
  const auto& from = from_phi ? key.phi : key.phi_star;
  auto range = std::equal_range(from.begin(), from.end(), m);
  auto count = std::distance(range.first, range.second);
  if (count == 0) return out;
  BosonKey next = key;
  auto& target = from_phi ? next.phi : next.phi_star;
  target.erase(std::lower_bound(target.begin(), target.end(), m));
  out.add(std::move(next), sign * Scalar(count));
  return out;
}

}  // namespace

BosonState phi_image(const BosonSpace& space, int flavor, std::int64_t r, const BosonKey& key) {
  check_flavor(space, flavor);
  check_key(space, key);
  if (r <= 0) {
    BosonKey next = key;
    insert_sorted(next.phi, {flavor, static_cast<int>(2 * r - 1)});
    return BosonState(std::move(next), Scalar(1));
  }
  // [φ^i_{r-1/2}, φ^{i*}_{1/2-r}] = -1
  return contract(key, false, {flavor, static_cast<int>(1 - 2 * r)}, Scalar(-1));
}

BosonState phi_star_image(const BosonSpace& space, int flavor, std::int64_t r, const BosonKey& key) {
  check_flavor(space, flavor);
  check_key(space, key);
  if (r <= 0) {
    BosonKey next = key;
    insert_sorted(next.phi_star, {flavor, static_cast<int>(2 * r - 1)});
    return BosonState(std::move(next), Scalar(1));
  }
  return contract(key, true, {flavor, static_cast<int>(1 - 2 * r)}, Scalar(1));
}

BosonState phi_apply(const BosonSpace& space, int flavor, std::int64_t r, const BosonState& s) {
  BosonState out;
  for (const auto& [key, c] : s) out.add_scaled(phi_image(space, flavor, r, key), c);
  return out;
}

BosonState phi_star_apply(const BosonSpace& space, int flavor, std::int64_t r, const BosonState& s) {
  BosonState out;
  for (const auto& [key, c] : s) out.add_scaled(phi_star_image(space, flavor, r, key), c);
  return out;
}

std::int64_t depth(const BosonState& s) {
  std::int64_t d = kNoBound;
  for (const auto& [key, c] : s) d = std::max(d, key.depth());
  return d;
}

}  // namespace torvo
