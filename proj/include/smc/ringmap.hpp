#pragma once

#include <vector>

#include "smc/polynomial.hpp"

namespace smc {

// Graded substitution homomorphism: one homogeneous target image per source
// variable, of the variable's weight. Validated at construction, so applying
// the map preserves weighted degrees.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->nvars())
      throw std::invalid_argument("RingMap: need one image per source variable");
    for (int i = 0; i < source_->nvars(); ++i) {
      const Polynomial& img = images_[static_cast<std::size_t>(i)];
      require_same_ring(target_, img.ring(), "RingMap");
      if (img.is_zero()) continue;
      if (!img.is_homogeneous() || *img.weighted_degree() != source_->weight(i))
        throw std::invalid_argument("RingMap: image of '" + source_->var(i).name +
                                    "' is not homogeneous of weight " +
                                    std::to_string(source_->weight(i)));
    }
  }

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const Polynomial& image(int i) const { return images_[static_cast<std::size_t>(i)]; }

  Polynomial apply(const Polynomial& p) const {
    require_same_ring(source_, p.ring(), "apply_ring_map");
    Polynomial out = Polynomial::zero(target_);
    for (const auto& t : p.terms()) {
      Polynomial prod = Polynomial::constant(target_, t.coeff);
      for (int i = 0; i < source_->nvars(); ++i) {
        int e = t.mono[i];
        if (e > 0) prod = prod * images_[static_cast<std::size_t>(i)].pow(e);
      }
      out = out + prod;
    }
    return out;
  }

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

}  // namespace smc
