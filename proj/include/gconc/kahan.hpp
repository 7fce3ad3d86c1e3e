#pragma once
// Kahan compensated accumulator.  Works for double and std::complex<double>
// (complex add/subtract act componentwise, so the compensation carries
// through each component).

namespace gconc {

template <class T>
struct kahan {
  T sum{};
  T comp{};

  void add(T x) {
    T y = x - comp;
    T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  T value() const { return sum; }
};

}  // namespace gconc
