#include "tw/backbone.hpp"

#include <algorithm>
#include <numeric>

namespace tw {

int BackboneVector::order() const { return k() + 2 + std::accumulate(x.begin(), x.end(), 0); }

bool BackboneVector::valid() const {
  return !x.empty() && std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
}

BackboneVector BackboneVector::reversed() const { return {std::vector<int>(x.rbegin(), x.rend())}; }

BackboneVector BackboneVector::oriented() const {
  BackboneVector r = reversed();
  return r.x > x ? r : *this;
}

std::optional<BackboneVector> backbone_vector(const Tree& t) {
  auto spine = caterpillar_backbone(t);
  if (!spine) return std::nullopt;
  if (spine->size() > 1 && spine->front() > spine->back()) std::reverse(spine->begin(), spine->end());
  BackboneVector b;
  for (int v : *spine) b.x.push_back(t.degree(v) - 2);
  return b;
}

}  // namespace tw
