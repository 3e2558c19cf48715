#pragma once

#include <array>
#include <cstddef>

namespace nullcone {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
State<N> axpy(const State<N>& y, double a, const State<N>& k) {
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * k[i];
  return out;
}

/// One classical fourth-order Runge-Kutta step of y' = f(y).
template <std::size_t N, class F>
State<N> rk4_step(F&& f, const State<N>& y, double h) {
  const State<N> k1 = f(y);
  const State<N> k2 = f(axpy(y, 0.5 * h, k1));
  const State<N> k3 = f(axpy(y, 0.5 * h, k2));
  const State<N> k4 = f(axpy(y, h, k3));
  State<N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace nullcone
