#include "ahe/stack.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ahe {

OrientationStack::OrientationStack(int size, int layers, double fill)
    : size_(size),
      layers_(layers),
      values_(static_cast<std::size_t>(size) * size * layers, fill) {
    if (size <= 0) throw std::invalid_argument("stack size must be positive");
    if (layers <= 0) throw std::invalid_argument("layer count must be positive");
}

double OrientationStack::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

double OrientationStack::layer_sum(int k, int l) const {
    double s = 0.0;
    for (int r = 0; r < layers_; ++r) s += (*this)(k, l, r);
    return s;
}

void OrientationStack::clamp_negative() {
    for (double& v : values_)
        if (v < 0.0) v = 0.0;
}

double OrientationStack::layer_angle(int r, int n) {
    return static_cast<double>(r) * std::numbers::pi / static_cast<double>(n);
}

} // namespace ahe
