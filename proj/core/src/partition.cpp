#include "whitmod/partition.hpp"

#include <algorithm>

namespace whitmod {

Partition::Partition(std::vector<Degree> parts, bool presorted) : parts_(std::move(parts)) {
  if (!presorted) std::sort(parts_.begin(), parts_.end());
}

Degree Partition::weight(int rank) const {
  Degree w = Degree::zero(rank);
  for (const auto& p : parts_) w = w + p;
  return w;
}

int Partition::multiplicity(const Degree& alpha) const {
  int n = 0;
  for (const auto& p : parts_)
    if (p == alpha) ++n;
  return n;
}

Partition Partition::prefix(std::size_t i) const {
  return Partition(std::vector<Degree>(parts_.begin(), parts_.begin() + i), true);
}

Partition Partition::suffix(std::size_t j) const {
  return Partition(std::vector<Degree>(parts_.begin() + j, parts_.end()), true);
}

Partition Partition::erased(std::size_t i) const {
  std::vector<Degree> v = parts_;
  v.erase(v.begin() + i);
  return Partition(std::move(v), true);
}

Partition Partition::with_part(const Degree& d) const {
  std::vector<Degree> v = parts_;
  v.insert(std::upper_bound(v.begin(), v.end(), d), d);
  return Partition(std::move(v), true);
}

Partition Partition::concat_sorted(const Partition& o) const {
  std::vector<Degree> v;
  v.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
             std::back_inserter(v));
  return Partition(std::move(v), true);
}

}  // namespace whitmod
