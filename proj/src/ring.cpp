#include "fsk/ring.hpp"

#include <algorithm>

#include "fsk/error.hpp"

namespace fsk {

Ring::Ring(std::uint64_t p, std::vector<std::string> names, MonomialOrder order,
           std::vector<std::uint32_t> weights)
    : field_(p), names_(std::move(names)), order_(order), weights_(std::move(weights)) {
  if (names_.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "too many variables");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw Error(ErrorKind::InvalidArgument, "weight count differs from variable count");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate variable " + names_[i]);
}

RingPtr Ring::make(std::uint64_t p, std::vector<std::string> names, MonomialOrder order,
                   std::vector<std::uint32_t> weights) {
  return std::make_shared<const Ring>(p, std::move(names), order, std::move(weights));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::uint64_t Ring::weighted_degree(const Monomial& m) const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::uint64_t>(weights_[i]) * m[i];
  return d;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  return make(p(), names_, order, weights_);
}

RingPtr Ring::with_prefix(const std::vector<std::string>& front, MonomialOrder order) const {
  std::vector<std::string> names = front;
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<std::uint32_t> w(front.size(), 1);
  w.insert(w.end(), weights_.begin(), weights_.end());
  return make(p(), std::move(names), order, std::move(w));
}

RingPtr Ring::with_suffix(const std::vector<std::string>& back, MonomialOrder order) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), back.begin(), back.end());
  std::vector<std::uint32_t> w = weights_;
  w.resize(names.size(), 1);
  return make(p(), std::move(names), order, std::move(w));
}

}  // namespace fsk
