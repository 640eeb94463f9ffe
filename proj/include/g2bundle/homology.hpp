#pragma once

// First homology of a finitely presented group: exponent-sum matrix,
// Smith normal form over unbounded integers, Betti number and torsion.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "g2bundle/errors.hpp"
#include "g2bundle/presentation.hpp"

namespace g2bundle {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw InputError("matrix entry count mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntMatrix transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  bool operator==(const IntMatrix&) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> entries_;
};

/// One row per relator, one column per generator; entries are exponent sums.
inline IntMatrix abelianize(const Presentation& p) {
  IntMatrix m(p.relators().size(), static_cast<std::size_t>(p.generator_count()));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, static_cast<std::size_t>(l.generator())) += l.exponent();
  return m;
}

/// Invariant factors d1 | d2 | ... (min(rows, cols) of them, zeros last).
/// The pivot is always the smallest nonzero |entry| of the active block.
inline std::vector<BigInt> smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t diag = std::min(rows, cols);
  std::vector<BigInt> factors;
  factors.reserve(diag);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };

  std::size_t t = 0;
  for (; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      BigInt best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const BigInt& v = a(r, c);
          if (v != 0 && (pr == rows || abs(v) < best)) {
            best = abs(v);
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const BigInt pivot = a(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const BigInt q = a(r, t) / pivot;
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const BigInt q = a(t, c) / pivot;
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % pivot != 0) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(r, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) == 0) break;
    factors.push_back(abs(a(t, t)));
  }
  factors.resize(diag, BigInt(0));
  return factors;
}

struct HomologySummary {
  long long betti_1 = 0;
  std::vector<BigInt> torsion;  // each >= 2, each dividing the next

  /// Minimal number of generators of H_1.
  long long rank() const { return betti_1 + static_cast<long long>(torsion.size()); }

  bool operator==(const HomologySummary&) const = default;
};

inline HomologySummary homology_of(const Presentation& p) {
  const auto factors = smith_normal_form(abelianize(p));
  HomologySummary h;
  long long nonzero = 0;
  for (const BigInt& d : factors) {
    if (d != 0) ++nonzero;
    if (d > 1) h.torsion.push_back(d);
  }
  h.betti_1 = p.generator_count() - nonzero;
  return h;
}

inline std::string format_torsion(const std::vector<BigInt>& torsion, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += sep;
    out += torsion[i].str();
  }
  return out;
}

}  // namespace g2bundle
