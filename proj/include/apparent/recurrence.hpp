#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace apparent {

/// The equation sum_k P_k(x0 + x) d^{n-k}/dx^{n-k} written around x = 0.
/// Acting on x^s it produces sum_h f_h(s) x^{s - n + mu + h}, where mu is the
/// order of P_0 at the point and
///   f_h(s) = sum_k p_{k, mu + h - k} * s (s-1) ... (s-n+k+1).
/// f_0 is the indicial polynomial. The scalar type is either an exact
/// rational or a floating type; only ring operations are used.
template <class T>
class LocalOperator {
 public:
  /// `shifted[k]` holds the ascending coefficients of P_k(x0 + x); `mu` must
  /// satisfy ord(P_k) + k >= mu for every k (regular or ordinary point).
  LocalOperator(std::vector<std::vector<T>> shifted, int mu) : p_(std::move(shifted)), mu_(mu) {
    n_ = static_cast<int>(p_.size()) - 1;
    span_ = 0;
    for (int k = 0; k <= n_; ++k)
      if (!p_[static_cast<std::size_t>(k)].empty())
        span_ = std::max(span_, static_cast<int>(p_[static_cast<std::size_t>(k)].size()) - 1 + k - mu_);
  }

  int order() const { return n_; }
  int mu() const { return mu_; }
  /// Largest h with f_h possibly nonzero.
  int span() const { return span_; }

  T f(int h, const T& s) const {
    T total(0);
    for (int k = 0; k <= n_; ++k) {
      const auto& pk = p_[static_cast<std::size_t>(k)];
      const int l = mu_ + h - k;
      if (l < 0 || l >= static_cast<int>(pk.size())) continue;
      if (pk[static_cast<std::size_t>(l)] == T(0)) continue;
      T ff(1);
      for (int i = 0; i < n_ - k; ++i) ff *= (s - T(i));
      total += pk[static_cast<std::size_t>(l)] * ff;
    }
    return total;
  }

  /// Series coefficients a_0 = 1, a_1..a_N for exponent `rho`. At a resonance
  /// (f_0(rho + j) = 0) the right-hand side is handed to `on_resonance(j, value)`
  /// and a_j is set to zero.
  std::vector<T> series(const T& rho, int terms,
                        const std::function<void(int, const T&)>& on_resonance = {}) const {
    std::vector<T> a;
    a.reserve(static_cast<std::size_t>(terms) + 1);
    a.emplace_back(1);
    for (int j = 1; j <= terms; ++j) {
      T rhs(0);
      for (int h = 1; h <= std::min(j, span_); ++h) {
        const T& prev = a[static_cast<std::size_t>(j - h)];
        if (prev == T(0)) continue;
        rhs -= f(h, rho + T(j - h)) * prev;
      }
      T lead = f(0, rho + T(j));
      if (lead == T(0)) {
        if (on_resonance) on_resonance(j, rhs);
        a.emplace_back(0);
      } else {
        a.push_back(rhs / lead);
      }
    }
    return a;
  }

  /// Coefficients r_j of L[x^rho * sum a_i x^i] = sum_j r_j x^{rho - n + mu + j}.
  std::vector<T> residual(const T& rho, const std::vector<T>& a) const {
    if (a.empty()) return {};
    std::vector<T> r(a.size() + static_cast<std::size_t>(span_), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == T(0)) continue;
      for (int h = 0; h <= span_; ++h) r[i + static_cast<std::size_t>(h)] += f(h, rho + T(static_cast<long>(i))) * a[i];
    }
    return r;
  }

 private:
  std::vector<std::vector<T>> p_;
  int n_ = 0;
  int mu_ = 0;
  int span_ = 0;
};

}  // namespace apparent
