#pragma once

#include <cstddef>
#include <vector>

#include "ahe/image.hpp"

namespace ahe {

/** Orientation stack: an image lifted over N discrete line directions.
 *
 * Layer r holds the response at angle theta_r = r*pi/N, r = 0..N-1. The
 * angle is an undirected line direction, so the layer index is cyclic with
 * period N (theta and theta+pi are identified). Spatial indices wrap like
 * PeriodicImage. Each layer is stored contiguously.
 */
class OrientationStack {
public:
    OrientationStack(int size, int layers, double fill = 0.0);

    int size() const { return size_; }
    int layers() const { return layers_; }

    double operator()(int k, int l, int r) const { return values_[index(k, l, r)]; }
    void set(int k, int l, int r, double v) { values_[index(k, l, r)] = v; }

    double* layer_data(int r) {
        return values_.data() + static_cast<std::size_t>(r) * size_ * size_;
    }
    const double* layer_data(int r) const {
        return values_.data() + static_cast<std::size_t>(r) * size_ * size_;
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /** Sum over all pixels and layers. */
    double sum() const;

    /** Sum over the N layers at one pixel. */
    double layer_sum(int k, int l) const;

    /** In-place pointwise max(v, 0). */
    void clamp_negative();

    /** Angle represented by layer r out of n. */
    static double layer_angle(int r, int n);

    std::size_t index(int k, int l, int r) const {
        const int m = size_;
        return (static_cast<std::size_t>(PeriodicImage::wrap(r, layers_)) * m +
                PeriodicImage::wrap(l, m)) * m + PeriodicImage::wrap(k, m);
    }

private:
    int size_;
    int layers_;
    std::vector<double> values_;
};

} // namespace ahe
