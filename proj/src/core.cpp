#include "twistcolor/core.hpp"

#include <algorithm>
#include <cstdio>

namespace twistcolor {

ElemMap identity_map(std::size_t n) {
  ElemMap f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<Elem>(i);
  return f;
}

bool is_permutation(const ElemMap& f) {
  std::vector<bool> seen(f.size(), false);
  for (Elem v : f) {
    if (v >= f.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

ElemMap inverse_permutation(const ElemMap& f) {
  if (!is_permutation(f)) throw Error(ErrorKind::precondition, "map is not a permutation");
  ElemMap inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<Elem>(i);
  return inv;
}

ElemMap compose(const ElemMap& outer, const ElemMap& inner) {
  ElemMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer.at(inner[i]);
  return out;
}

PairMap::PairMap(std::size_t n, std::vector<Pair> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw Error(ErrorKind::malformed, "pair table has " + std::to_string(values_.size()) +
                                          " entries, expected " + std::to_string(n_ * n_));
  }
  require_in_range(n_, values_, "pair table");
}

PairMap PairMap::identity(std::size_t n) {
  std::vector<Pair> v;
  v.reserve(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) v.push_back({x, y});
  return PairMap(n, std::move(v));
}

PairMap PairMap::transposition(std::size_t n) {
  std::vector<Pair> v;
  v.reserve(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) v.push_back({y, x});
  return PairMap(n, std::move(v));
}

bool PairMap::is_bijection() const {
  std::vector<bool> seen(values_.size(), false);
  for (const Pair& p : values_) {
    std::size_t i = index(p.first, p.second);
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

PairMap PairMap::inverse() const {
  if (!is_bijection()) throw Error(ErrorKind::precondition, "pair map is not a bijection");
  std::vector<Pair> inv(values_.size());
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      Pair p = (*this)(x, y);
      inv[index(p.first, p.second)] = {x, y};
    }
  return PairMap(n_, std::move(inv));
}

PairMap PairMap::conjugate_by_tau() const {
  std::vector<Pair> v(values_.size());
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      Pair p = (*this)(y, x);
      v[index(x, y)] = {p.second, p.first};
    }
  return PairMap(n_, std::move(v));
}

PairMap PairMap::after(const PairMap& inner) const {
  if (inner.n_ != n_) throw Error(ErrorKind::precondition, "carrier sizes differ");
  std::vector<Pair> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = (*this)(inner.values_[i]);
  return PairMap(n_, std::move(v));
}

bool AxiomReport::all_pass() const noexcept {
  return std::all_of(results_.begin(), results_.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult& AxiomReport::at(std::string_view name) const {
  for (const auto& r : results_)
    if (r.name == name) return r;
  throw Error(ErrorKind::precondition, "no axiom named '" + std::string(name) + "' in report");
}

const AxiomResult* AxiomReport::first_failure() const noexcept {
  for (const auto& r : results_)
    if (!r.pass) return &r;
  return nullptr;
}

std::string AxiomReport::digest() const {
  // FNV-1a over "name=0|1;" records
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  };
  for (const auto& r : results_) {
    for (char c : r.name) mix(c);
    mix('=');
    mix(r.pass ? '1' : '0');
    mix(';');
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void require_in_range(std::size_t n, const ElemMap& table, std::string_view what) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw Error(ErrorKind::malformed, std::string(what) + ": entry " + std::to_string(i) +
                                            " = " + std::to_string(table[i]) +
                                            " is outside the carrier of size " + std::to_string(n));
}

void require_in_range(std::size_t n, const std::vector<Pair>& table, std::string_view what) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].first >= n || table[i].second >= n)
      throw Error(ErrorKind::malformed, std::string(what) + ": entry " + std::to_string(i) +
                                            " is outside the carrier of size " + std::to_string(n));
}

}  // namespace twistcolor
