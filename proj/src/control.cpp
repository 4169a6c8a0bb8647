#include "lvc/control.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "lvc/errors.hpp"

namespace lvc {

bool admissible(const BoundaryValues& b, double a, double tol) {
  auto in = [tol](double v, double hi) { return v >= -tol && v <= hi + tol; };
  return in(b.u_left, 1.0) && in(b.u_right, 1.0) && in(b.v_left, a) && in(b.v_right, a);
}

BoundaryControl::BoundaryControl() : eval_([](double) { return BoundaryValues{}; }) {}

BoundaryControl BoundaryControl::constant(const BoundaryValues& values) {
  BoundaryControl c;
  c.eval_ = [values](double) { return values; };
  return c;
}

namespace {

struct Samples {
  std::vector<double> times;
  std::vector<BoundaryValues> values;

  std::size_t interval(double t) const {
    // index of the last sample time <= t (0 when t precedes the range)
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return 0;
    return static_cast<std::size_t>(it - times.begin()) - 1;
  }
};

std::shared_ptr<Samples> make_samples(std::vector<double> times,
                                      std::vector<BoundaryValues> values) {
  if (times.empty() || times.size() != values.size())
    throw ConfigError("sampled control: need matching, non-empty times and values");
  if (!std::is_sorted(times.begin(), times.end()))
    throw ConfigError("sampled control: times must be non-decreasing");
  auto s = std::make_shared<Samples>();
  s->times = std::move(times);
  s->values = std::move(values);
  return s;
}

}  // namespace

BoundaryControl BoundaryControl::sampled(std::vector<double> times,
                                         std::vector<BoundaryValues> values) {
  auto s = make_samples(std::move(times), std::move(values));
  BoundaryControl c;
  c.eval_ = [s](double t) {
    if (t <= s->times.front()) return s->values.front();
    if (t >= s->times.back()) return s->values.back();
    std::size_t i = s->interval(t);
    const double t0 = s->times[i], t1 = s->times[i + 1];
    const double w = (t1 > t0) ? (t - t0) / (t1 - t0) : 0.0;
    const BoundaryValues& x = s->values[i];
    const BoundaryValues& y = s->values[i + 1];
    auto lerp = [w](double p, double q) { return p + w * (q - p); };
    return BoundaryValues{lerp(x.u_left, y.u_left), lerp(x.u_right, y.u_right),
                          lerp(x.v_left, y.v_left), lerp(x.v_right, y.v_right)};
  };
  return c;
}

BoundaryControl BoundaryControl::piecewise_constant(std::vector<double> times,
                                                    std::vector<BoundaryValues> values) {
  auto s = make_samples(std::move(times), std::move(values));
  BoundaryControl c;
  c.eval_ = [s](double t) { return s->values[s->interval(t)]; };
  return c;
}

BoundaryControl BoundaryControl::from_function(std::function<BoundaryValues(double)> f) {
  BoundaryControl c;
  c.eval_ = std::move(f);
  return c;
}

}  // namespace lvc
