#pragma once

// Finite weighted point sets and the real-valued fields over them, together
// with the lattice / L2 / Linf structure everything else consumes.  Every
// atom carries strictly positive mass, so "almost everywhere" statements
// become pointwise ones and the sup-norm is an exact maximum.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dirichlet {

class MeasureSpace;
using SpacePtr = std::shared_ptr<const MeasureSpace>;

/// A finite measure space: ordered point identifiers with one strictly
/// positive weight per point.  Immutable after construction.
class MeasureSpace {
 public:
  MeasureSpace(std::vector<std::string> points, std::vector<double> weights)
      : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.empty()) throw std::invalid_argument("MeasureSpace: empty point set");
    if (points_.size() != weights_.size())
      throw std::invalid_argument("MeasureSpace: points/weights size mismatch");
    for (double w : weights_) {
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("MeasureSpace: weights must be finite and positive");
    }
    std::vector<std::string> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("MeasureSpace: duplicate point identifier");
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_.at(i); }

  double total_mass() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

  bool same_as(const MeasureSpace& other) const {
    if (this == &other) return true;
    return points_ == other.points_ && weights_ == other.weights_;
  }

  static SpacePtr make(std::vector<std::string> points, std::vector<double> weights) {
    return std::make_shared<const MeasureSpace>(std::move(points), std::move(weights));
  }

  /// n points "p0".."p{n-1}" with a common weight.
  static SpacePtr uniform(std::size_t n, double w = 1.0, const std::string& prefix = "p") {
    std::vector<std::string> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = prefix + std::to_string(i);
    return make(std::move(pts), std::vector<double>(n, w));
  }

  /// Uniform grid on [0,1] with n nodes and trapezoidal masses, total mass 1.
  static SpacePtr unit_interval_grid(std::size_t n) {
    if (n < 2) throw std::invalid_argument("unit_interval_grid: need n >= 2");
    const double dx = 1.0 / static_cast<double>(n - 1);
    std::vector<std::string> pts(n);
    std::vector<double> w(n, dx);
    w.front() = 0.5 * dx;
    w.back() = 0.5 * dx;
    for (std::size_t i = 0; i < n; ++i) pts[i] = "x" + std::to_string(i);
    return make(std::move(pts), std::move(w));
  }

 private:
  std::vector<std::string> points_;
  std::vector<double> weights_;
};

/// One finite real per point of a MeasureSpace.  Infinities live in energy
/// values, never in fields.
class Field {
 public:
  Field(SpacePtr space, std::vector<double> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw std::invalid_argument("Field: null space");
    if (values_.size() != space_->size())
      throw std::invalid_argument("Field: value count does not match space");
    for (double v : values_)
      if (!std::isfinite(v)) throw std::invalid_argument("Field: non-finite entry");
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

inline bool same_space(const Field& u, const Field& v) {
  return u.space() == v.space() || u.space()->same_as(*v.space());
}

inline void require_same_space(const Field& u, const Field& v, const char* where) {
  if (!same_space(u, v))
    throw std::invalid_argument(std::string(where) + ": fields live on different spaces");
}

/// A pair of fields over one common space, an element of the doubled space.
struct FieldPair {
  Field first;
  Field second;

  FieldPair(Field a, Field b) : first(std::move(a)), second(std::move(b)) {
    require_same_space(first, second, "FieldPair");
  }
};

inline Field zero_field(const SpacePtr& s) {
  return Field(s, std::vector<double>(s->size(), 0.0));
}

inline Field constant_field(const SpacePtr& s, double c) {
  return Field(s, std::vector<double>(s->size(), c));
}

template <typename Fn>
inline Field map_field(const Field& u, Fn&& fn) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = fn(u[i]);
  return Field(u.space(), std::move(out));
}

template <typename Fn>
inline Field zip_fields(const Field& u, const Field& v, Fn&& fn) {
  require_same_space(u, v, "zip_fields");
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = fn(u[i], v[i]);
  return Field(u.space(), std::move(out));
}

/// m-weighted inner product realizing the L2 pairing.
inline double inner(const Field& u, const Field& v) {
  require_same_space(u, v, "inner");
  const auto& w = u.space()->weights();
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += w[i] * u[i] * v[i];
  return s;
}

inline double norm_l2(const Field& u) { return std::sqrt(inner(u, u)); }

inline double norm_linf(const Field& u) {
  double m = 0.0;
  for (double v : u.values()) m = std::max(m, std::abs(v));
  return m;
}

inline Field add(const Field& u, const Field& v) {
  return zip_fields(u, v, [](double a, double b) { return a + b; });
}

inline Field sub(const Field& u, const Field& v) {
  return zip_fields(u, v, [](double a, double b) { return a - b; });
}

inline Field scale(double c, const Field& u) {
  return map_field(u, [c](double a) { return c * a; });
}

/// u + c*v.
inline Field axpy(const Field& u, double c, const Field& v) {
  return zip_fields(u, v, [c](double a, double b) { return a + c * b; });
}

inline Field shift(const Field& u, double c) {
  return map_field(u, [c](double a) { return a + c; });
}

inline Field join(const Field& u, const Field& v) {
  return zip_fields(u, v, [](double a, double b) { return std::max(a, b); });
}

inline Field meet(const Field& u, const Field& v) {
  return zip_fields(u, v, [](double a, double b) { return std::min(a, b); });
}

inline Field pos_part(const Field& u) {
  return map_field(u, [](double a) { return a > 0.0 ? a : 0.0; });
}

/// Non-negative negative part, so that u = pos_part(u) - neg_part(u) exactly.
inline Field neg_part(const Field& u) {
  return map_field(u, [](double a) { return a < 0.0 ? -a : 0.0; });
}

/// Point subsets are sorted index sets; deterministic iteration order keeps
/// reports reproducible.
using PointSubset = std::vector<std::size_t>;

inline PointSubset normalize_subset(const MeasureSpace& s, PointSubset y) {
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  if (!y.empty() && y.back() >= s.size())
    throw std::invalid_argument("point subset: index out of range");
  return y;
}

inline PointSubset complement_subset(const MeasureSpace& s, const PointSubset& y) {
  PointSubset sorted = normalize_subset(s, y);
  PointSubset out;
  out.reserve(s.size() - sorted.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (k < sorted.size() && sorted[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// Multiplication by the indicator of Y: u on Y, zero elsewhere.
inline Field indicator_multiply(const PointSubset& y, const Field& u) {
  PointSubset sorted = normalize_subset(*u.space(), y);
  std::vector<double> out(u.size(), 0.0);
  for (std::size_t i : sorted) out[i] = u[i];
  return Field(u.space(), std::move(out));
}

inline double pair_inner(const FieldPair& a, const FieldPair& b) {
  return inner(a.first, b.first) + inner(a.second, b.second);
}

inline double pair_norm(const FieldPair& a) {
  return std::sqrt(pair_inner(a, a));
}

inline FieldPair pair_sub(const FieldPair& a, const FieldPair& b) {
  return FieldPair(sub(a.first, b.first), sub(a.second, b.second));
}

// Small deterministic RNG (splitmix64 core + Box-Muller).  Used everywhere a
// seeded stream is required; behaviour is identical across platforms, unlike
// <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Field gaussian_field(const SpacePtr& s, double magnitude) {
    std::vector<double> v(s->size());
    for (double& x : v) x = magnitude * gaussian();
    return Field(s, std::move(v));
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a over raw bytes; seeds per-call RNG streams deterministically.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t hash_field(const Field& f, std::uint64_t salt = 0) {
  std::uint64_t h = fnv1a(&salt, sizeof(salt));
  h = fnv1a(f.values().data(), f.values().size() * sizeof(double), h);
  return h;
}

}  // namespace dirichlet
