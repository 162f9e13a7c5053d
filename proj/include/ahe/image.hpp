#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ahe {

/** Square gray-level image with torus topology.
 *
 * Values are gray levels in [0,1] (0 = white, 1 = black). Pixel (k,l)
 * addresses column k (the x direction) and row l (the y direction); both
 * indices wrap modulo size(), so any integer pair is a valid index.
 * Storage is row-major by l.
 */
class PeriodicImage {
public:
    explicit PeriodicImage(int size, double fill = 0.0);
    PeriodicImage(int size, std::vector<double> values);

    int size() const { return size_; }

    double operator()(int k, int l) const { return values_[index(k, l)]; }
    void set(int k, int l, double v) { values_[index(k, l)] = v; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double max_value() const;
    double sum() const;

    std::size_t index(int k, int l) const {
        return static_cast<std::size_t>(wrap(l, size_)) * size_ + wrap(k, size_);
    }

    static int wrap(int i, int m) {
        int r = i % m;
        return r < 0 ? r + m : r;
    }

private:
    int size_;
    std::vector<double> values_;
};

/** Per-pixel GOOD/BAD labels over the same torus grid.
 *
 * GOOD marks non-corrupted (or already reconstructed) pixels, BAD marks
 * corrupted ones; the two sets partition the grid.
 */
class CorruptionMask {
public:
    explicit CorruptionMask(int size, bool good = true);

    static CorruptionMask all_good(int size) { return CorruptionMask(size, true); }

    /** Labels BAD exactly where the image value is 0 (the convention for a
     * corrupted input whose damaged pixels were zeroed). */
    static CorruptionMask from_image(const PeriodicImage& img);

    int size() const { return size_; }

    bool good(int k, int l) const { return labels_[index(k, l)] != 0; }
    bool bad(int k, int l) const { return labels_[index(k, l)] == 0; }
    void set_good(int k, int l) { labels_[index(k, l)] = 1; }
    void set_bad(int k, int l) { labels_[index(k, l)] = 0; }

    int good_count() const;
    int bad_count() const;
    double bad_fraction() const;

    const std::vector<std::uint8_t>& labels() const { return labels_; }

    std::size_t index(int k, int l) const {
        return static_cast<std::size_t>(PeriodicImage::wrap(l, size_)) * size_ +
               PeriodicImage::wrap(k, size_);
    }

private:
    int size_;
    std::vector<std::uint8_t> labels_; // 1 = GOOD, 0 = BAD
};

struct Gradient {
    double gx;
    double gy;
};

/** Centered finite differences with periodic wrap:
 * gx = (f(k+1,l) - f(k-1,l))/2, gy = (f(k,l+1) - f(k,l-1))/2. */
Gradient finite_gradient(const PeriodicImage& img, int k, int l);

/** All BAD pixels whose 9-point neighborhood contains at least one GOOD
 * pixel. Neighborhoods wrap around the torus. */
std::vector<std::pair<int, int>> boundary_bad(const CorruptionMask& mask);

/** Ingestion convention: GOOD pixels with value exactly 0 are raised to the
 * smallest 8-bit gray step (1/255) so that non-corrupted pixels are always
 * strictly positive. */
PeriodicImage clamp_good_zeros(PeriodicImage img, const CorruptionMask& mask);

} // namespace ahe
