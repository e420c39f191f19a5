#include "sp2brst/sym_tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sp2brst {

namespace {

int count_twos(std::span<const int> indices) {
  int twos = 0;
  for (int a : indices) {
    if (a == 2) {
      ++twos;
    } else if (a != 1) {
      throw std::out_of_range("Sp(2) index must be 1 or 2");
    }
  }
  return twos;
}

template <typename F>
std::optional<int> fold_optional(const std::vector<GradedPoly>& comps, F f,
                                 bool take_min) {
  std::optional<int> out;
  for (const auto& c : comps) {
    auto v = f(c);
    if (!v) continue;
    if (!out || (take_min ? *v < *out : *v > *out)) out = v;
  }
  return out;
}

template <typename F>
std::optional<int> common_value(const std::vector<GradedPoly>& comps, F f) {
  std::optional<int> out;
  bool any_mixed = false;
  for (const auto& c : comps) {
    if (c.is_zero()) continue;
    auto v = f(c);
    if (!v) any_mixed = true;
    else if (out && *out != *v) any_mixed = true;
    else out = v;
  }
  if (any_mixed) return std::nullopt;
  return out;
}

}  // namespace

SymTensor::SymTensor(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative tensor rank");
  components_.resize(static_cast<std::size_t>(rank) + 1);
}

SymTensor SymTensor::scalar(GradedPoly x) {
  SymTensor t(0);
  t.components_[0] = std::move(x);
  return t;
}

SymTensor SymTensor::vector(GradedPoly first, GradedPoly second) {
  SymTensor t(1);
  t.components_[0] = std::move(first);
  t.components_[1] = std::move(second);
  return t;
}

const GradedPoly& SymTensor::operator()(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != rank_) {
    throw std::out_of_range("index tuple length does not match tensor rank");
  }
  return components_[static_cast<std::size_t>(count_twos(indices))];
}

GradedPoly& SymTensor::at(std::span<const int> indices) {
  if (static_cast<int>(indices.size()) != rank_) {
    throw std::out_of_range("index tuple length does not match tensor rank");
  }
  return components_[static_cast<std::size_t>(count_twos(indices))];
}

bool SymTensor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const GradedPoly& p) { return p.is_zero(); });
}

std::size_t SymTensor::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

std::optional<int> SymTensor::min_cp_degree() const {
  return fold_optional(
      components_, [](const GradedPoly& p) { return p.min_cp_degree(); }, true);
}

std::optional<int> SymTensor::max_cp_degree() const {
  return fold_optional(
      components_, [](const GradedPoly& p) { return p.max_cp_degree(); },
      false);
}

std::optional<int> SymTensor::parity() const {
  return common_value(components_,
                      [](const GradedPoly& p) { return p.parity(); });
}

std::optional<int> SymTensor::ngh() const {
  return common_value(components_, [](const GradedPoly& p) { return p.ngh(); });
}

SymTensor SymTensor::truncate_cp(int k) const {
  SymTensor t(rank_);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    t.components_[i] = components_[i].truncate_cp(k);
  }
  return t;
}

SymTensor SymTensor::cp_part(int d) const {
  SymTensor t(rank_);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    t.components_[i] = components_[i].cp_part(d);
  }
  return t;
}

void SymTensor::check_rank(const SymTensor& o) const {
  if (o.rank_ != rank_) {
    throw std::invalid_argument("tensor rank mismatch: " +
                                std::to_string(rank_) + " vs " +
                                std::to_string(o.rank_));
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  check_rank(o);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i] += o.components_[i];
  }
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  check_rank(o);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i] -= o.components_[i];
  }
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

std::vector<int> canonical_indices(int rank, int twos) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 1);
  for (int i = rank - twos; i < rank; ++i) idx[static_cast<std::size_t>(i)] = 2;
  return idx;
}

std::string to_string(const SymTensor& t, const std::string& name) {
  std::string out;
  for (int twos = 0; twos <= t.rank(); ++twos) {
    out += name;
    if (t.rank() > 0) {
      out += '[';
      const auto idx = canonical_indices(t.rank(), twos);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
      }
      out += ']';
    }
    out += " = " + to_string(t.by_count(twos)) + "\n";
  }
  return out;
}

}  // namespace sp2brst
