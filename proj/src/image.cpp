#include "ahe/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace ahe {

PeriodicImage::PeriodicImage(int size, double fill)
    : size_(size), values_(static_cast<std::size_t>(size) * size, fill) {
    if (size <= 0) throw std::invalid_argument("image size must be positive");
}

PeriodicImage::PeriodicImage(int size, std::vector<double> values)
    : size_(size), values_(std::move(values)) {
    if (size <= 0) throw std::invalid_argument("image size must be positive");
    if (values_.size() != static_cast<std::size_t>(size) * size)
        throw std::invalid_argument("value count does not match size*size");
}

double PeriodicImage::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double PeriodicImage::sum() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

CorruptionMask::CorruptionMask(int size, bool good)
    : size_(size),
      labels_(static_cast<std::size_t>(size) * size, good ? 1 : 0) {
    if (size <= 0) throw std::invalid_argument("mask size must be positive");
}

CorruptionMask CorruptionMask::from_image(const PeriodicImage& img) {
    CorruptionMask mask(img.size(), true);
    const auto& v = img.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == 0.0) mask.labels_[i] = 0;
    return mask;
}

int CorruptionMask::good_count() const {
    int n = 0;
    for (auto b : labels_) n += b;
    return n;
}

int CorruptionMask::bad_count() const {
    return static_cast<int>(labels_.size()) - good_count();
}

double CorruptionMask::bad_fraction() const {
    return static_cast<double>(bad_count()) / static_cast<double>(labels_.size());
}

Gradient finite_gradient(const PeriodicImage& img, int k, int l) {
    return {(img(k + 1, l) - img(k - 1, l)) / 2.0,
            (img(k, l + 1) - img(k, l - 1)) / 2.0};
}

std::vector<std::pair<int, int>> boundary_bad(const CorruptionMask& mask) {
    const int m = mask.size();
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < m; ++l) {
        for (int k = 0; k < m; ++k) {
            if (mask.good(k, l)) continue;
            bool has_good = false;
            for (int dl = -1; dl <= 1 && !has_good; ++dl)
                for (int dk = -1; dk <= 1; ++dk)
                    if (mask.good(k + dk, l + dl)) {
                        has_good = true;
                        break;
                    }
            if (has_good) out.emplace_back(k, l);
        }
    }
    return out;
}

PeriodicImage clamp_good_zeros(PeriodicImage img, const CorruptionMask& mask) {
    const int m = img.size();
    for (int l = 0; l < m; ++l)
        for (int k = 0; k < m; ++k)
            if (mask.good(k, l) && img(k, l) == 0.0) img.set(k, l, 1.0 / 255.0);
    return img;
}

} // namespace ahe
