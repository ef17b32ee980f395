#include "segsec/la/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#if defined(__AVX2__) || defined(__AVX512F__)
#include <immintrin.h>
#endif

namespace segsec::la {

namespace {

// y += w * x (mod p) using Shoup's precomputed quotient w_shoup = floor(w * 2^32 / p).
// With p < 2^31 every intermediate fits in 32 bits after the high-half multiply.
void axpy_shoup(Elem* __restrict y, const Elem* __restrict x, std::size_t n, Elem w, Elem w_shoup,
                Elem p) {
  std::size_t c = 0;
#if defined(__AVX512F__)
  const __m512i vw = _mm512_set1_epi32(static_cast<int>(w));
  const __m512i vws = _mm512_set1_epi32(static_cast<int>(w_shoup));
  const __m512i vp = _mm512_set1_epi32(static_cast<int>(p));
  for (; c + 16 <= n; c += 16) {
    const __m512i xv = _mm512_loadu_si512(x + c);
    const __m512i lo = _mm512_srli_epi64(_mm512_mul_epu32(vws, xv), 32);
    const __m512i hi = _mm512_mul_epu32(vws, _mm512_srli_epi64(xv, 32));
    const __m512i q = _mm512_mask_blend_epi32(0xAAAA, lo, hi);
    __m512i r = _mm512_sub_epi32(_mm512_mullo_epi32(vw, xv), _mm512_mullo_epi32(q, vp));
    r = _mm512_min_epu32(r, _mm512_sub_epi32(r, vp));
    __m512i s = _mm512_add_epi32(_mm512_loadu_si512(y + c), r);
    s = _mm512_min_epu32(s, _mm512_sub_epi32(s, vp));
    _mm512_storeu_si512(y + c, s);
  }
#elif defined(__AVX2__)
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  const __m256i vws = _mm256_set1_epi32(static_cast<int>(w_shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  for (; c + 8 <= n; c += 8) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + c));
    const __m256i lo = _mm256_srli_epi64(_mm256_mul_epu32(vws, xv), 32);
    const __m256i hi = _mm256_mul_epu32(vws, _mm256_srli_epi64(xv, 32));
    const __m256i q = _mm256_blend_epi32(lo, hi, 0xAA);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(vw, xv), _mm256_mullo_epi32(q, vp));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
    __m256i s = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + c)), r);
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + c), s);
  }
#endif
  for (; c < n; ++c) {
    const Elem xv = x[c];
    const Elem q = static_cast<Elem>((std::uint64_t{w_shoup} * xv) >> 32);
    Elem r = w * xv - q * p;  // exact value lies in [0, 2p)
    r = std::min(r, r - p);
    const Elem s = y[c] + r;
    y[c] = std::min(s, s - p);
  }
}

Elem shoup_quotient(Elem w, Elem p) {
  return static_cast<Elem>((std::uint64_t{w} << 32) / p);
}

constexpr std::size_t kBlockRows = 32;

// Row-order elimination: each row, reduced against all earlier pivots, contributes a pivot
// at its first nonzero active column, which is swapped into position k so the active block
// [k, cols) stays contiguous. Pivots are gathered in blocks whose rows are kept mutually
// reduced; the rows below a block are then updated one row at a time against the whole
// block, which keeps the target row and the block in cache.
std::vector<std::size_t> eliminate_profile(std::vector<Elem> a, std::size_t rows, std::size_t cols,
                                           const PrimeField& f) {
  std::vector<std::size_t> profile(rows, 0);
  const Elem p = f.modulus();
  auto row_ptr = [&](std::size_t r) { return a.data() + r * cols; };

  std::size_t k = 0;
  std::size_t next = 0;
  std::vector<std::size_t> block;
  block.reserve(kBlockRows);
  std::vector<Elem> coef(kBlockRows);

  while (next < rows) {
    if (k == cols) {
      std::fill(profile.begin() + static_cast<std::ptrdiff_t>(next), profile.end(), k);
      break;
    }
    block.clear();
    const std::size_t block_k = k;
    std::size_t j = next;
    for (; j < rows && block.size() < kBlockRows && k < cols; ++j) {
      Elem* rj = row_ptr(j);
      for (std::size_t g = 0; g < block.size(); ++g) coef[g] = f.neg(rj[block_k + g]);
      for (std::size_t g = 0; g < block.size(); ++g) {
        if (coef[g] == 0) continue;
        axpy_shoup(rj + k, row_ptr(block[g]) + k, cols - k, coef[g], shoup_quotient(coef[g], p), p);
      }
      std::size_t c = k;
      while (c < cols && rj[c] == 0) ++c;
      if (c == cols) {
        profile[j] = k;
        continue;
      }
      if (c != k) {
        for (std::size_t b : block) std::swap(row_ptr(b)[c], row_ptr(b)[k]);
        for (std::size_t t = j; t < rows; ++t) std::swap(row_ptr(t)[c], row_ptr(t)[k]);
      }
      const Elem inv = f.inv(rj[k]);
      for (std::size_t c2 = k; c2 < cols; ++c2) rj[c2] = f.mul(rj[c2], inv);
      for (std::size_t b : block) {
        Elem* rb = row_ptr(b);
        const Elem w = f.neg(rb[k]);
        if (w == 0) continue;
        axpy_shoup(rb + k, rj + k, cols - k, w, shoup_quotient(w, p), p);
      }
      block.push_back(j);
      ++k;
      profile[j] = k;
    }
    // Rows below the block: one fused pass each against every block pivot.
    for (std::size_t t = j; t < rows; ++t) {
      Elem* rt = row_ptr(t);
      for (std::size_t g = 0; g < block.size(); ++g) coef[g] = f.neg(rt[block_k + g]);
      for (std::size_t g = 0; g < block.size(); ++g) {
        if (coef[g] == 0) continue;
        axpy_shoup(rt + k, row_ptr(block[g]) + k, cols - k, coef[g], shoup_quotient(coef[g], p), p);
      }
    }
    next = j;
  }
  return profile;
}

}  // namespace

std::vector<std::size_t> rank_profile(const PrimeMatrix& m) {
  if (m.rows() == 0) return {};
  std::vector<Elem> data;
  data.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    data.insert(data.end(), row.begin(), row.end());
  }
  return eliminate_profile(std::move(data), m.rows(), m.cols(), m.field());
}

std::size_t rank(const PrimeMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminating along the shorter dimension is cheaper.
  if (m.rows() > 2 * m.cols()) return rank_profile(m.transpose()).back();
  return rank_profile(m).back();
}

Echelon rref(const PrimeMatrix& m) {
  const PrimeField& f = m.field();
  PrimeMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Elem tmp = a(r, j);
        a.set(r, j, a(sel, j));
        a.set(sel, j, tmp);
      }
    }
    const Elem inv = f.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(a(r, j), inv));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem factor = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a.set(i, j, f.sub(a(i, j), f.mul(factor, a(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  PrimeMatrix reduced(f, a.cols());
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
  return {std::move(reduced), std::move(pivots)};
}

PrimeMatrix kernel_basis(const PrimeMatrix& m) {
  const PrimeField& f = m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  PrimeMatrix basis(f, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

std::optional<PrimeMatrix> inverse(const PrimeMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  const PrimeField& f = m.field();
  PrimeMatrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  PrimeMatrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, e.reduced(i, n + j));
  return inv;
}

}  // namespace segsec::la
