/* Copyright 2026 The unitconv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "unitconv/matrix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace unitconv {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= rows_) throw Error(ErrorCode::kIndexOutOfRange, "row index out of range");
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[k] * cols_), cols_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(k * cols_));
  }
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= cols_) throw Error(ErrorCode::kIndexOutOfRange, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, idx[k]);
  }
  return out;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) const {
  return select_rows(rows).select_cols(cols);
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::size_t Matrix::row_weight(std::size_t i) const { return weight(row(i)); }

std::size_t Matrix::col_weight(std::size_t j) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < rows_; ++i) w += (*this)(i, j) != 0;
  return w;
}

Matrix Matrix::vstack(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  Matrix out(parts.front().field_, 0, parts.front().cols_);
  for (const auto& p : parts) {
    if (p.cols_ != out.cols_) throw Error(ErrorCode::kDimensionMismatch, "vstack widths differ");
    require_same_field(out, p);
    out.data_.insert(out.data_.end(), p.data_.begin(), p.data_.end());
    out.rows_ += p.rows_;
  }
  return out;
}

Matrix Matrix::hstack(std::span<const Matrix> parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != parts.front().rows_) {
      throw Error(ErrorCode::kDimensionMismatch, "hstack heights differ");
    }
    require_same_field(parts.front(), p);
    cols += p.cols_;
  }
  Matrix out(parts.front().field_, parts.front().rows_, cols);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows_; ++i)
      for (std::size_t j = 0; j < p.cols_; ++j) out(i, offset + j) = p(i, j);
    offset += p.cols_;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum of different shapes");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k)
    out.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference of different shapes");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k)
    out.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  const Field& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  if (f.is_binary()) {
    // Packed rows of b, XOR-accumulated.
    const std::size_t words = (b.cols_ + 63) / 64;
    std::vector<std::uint64_t> packed(b.rows_ * words, 0);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j)) packed[k * words + j / 64] |= 1ull << (j % 64);
    std::vector<std::uint64_t> acc(words);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k)) continue;
        const std::uint64_t* src = packed.data() + k * words;
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= src[w];
      }
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = (acc[j / 64] >> (j % 64)) & 1u;
    }
    return out;
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Elem* orow = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      const Elem* brow = b.data_.data() + k * b.cols_;
      if (x == 1) {
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (brow[j] != 0) orow[j] = f.add(orow[j], brow[j]);
      } else {
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (brow[j] != 0) orow[j] = f.add(orow[j], f.mul(x, brow[j]));
      }
    }
  }
  return out;
}

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

namespace {

// Row echelon form in place; returns rank and the product of pivots with the
// sign of the row permutation (meaningful for square input only).
struct Echelon {
  std::size_t rank = 0;
  Elem det = 1;
};

Echelon echelon(Matrix& m) {
  const Field& f = m.field();
  Echelon e;
  bool negate = false;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) {
      e.det = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      negate = !negate;
    }
    const Elem pinv = f.inv(m(row, col));
    e.det = f.mul(e.det, m(row, col));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const Elem x = m(i, col);
      if (x == 0) continue;
      const Elem factor = f.mul(x, pinv);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    ++row;
  }
  e.rank = row;
  if (e.rank < m.rows()) e.det = 0;
  if (negate) e.det = f.neg(e.det);
  return e;
}

using Bits = std::vector<std::uint64_t>;

// GF(2) elimination over packed rows; returns rank, and fills `inverse` when
// requested and the matrix is invertible.
std::size_t binary_gauss_jordan(const Matrix& m, Matrix* inverse) {
  const std::size_t n = m.rows(), c = m.cols();
  const std::size_t width = c + (inverse ? n : 0);
  const std::size_t words = (width + 63) / 64;
  std::vector<Bits> rows(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j)
      if (m(i, j)) rows[i][j / 64] |= 1ull << (j % 64);
    if (inverse) rows[i][(c + i) / 64] |= 1ull << ((c + i) % 64);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < c && r < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = 1ull << (col % 64);
    std::size_t piv = r;
    while (piv < n && !(rows[piv][w] & bit)) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && (rows[i][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[i][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  if (inverse && r == n) {
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        inv(i, j) = (rows[i][(c + j) / 64] >> ((c + j) % 64)) & 1u;
    *inverse = std::move(inv);
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  if (m.field().is_binary()) return binary_gauss_jordan(m, nullptr);
  Matrix work = m;
  return echelon(work).rank;
}

Elem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square");
  if (m.rows() == 0) return 1;
  Matrix work = m;
  return echelon(work).det;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square");
  const std::size_t n = m.rows();
  if (m.field().is_binary()) {
    Matrix inv;
    if (binary_gauss_jordan(m, &inv) != n) throw Error(ErrorCode::kSingular, "matrix is singular");
    return inv;
  }
  const Field& f = m.field();
  Matrix a = m;
  Matrix inv = Matrix::identity(f, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::kSingular, "matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Elem pinv = f.inv(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = f.mul(a(col, j), pinv);
      inv(col, j) = f.mul(inv(col, j), pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Elem x = a(i, col);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a(col, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(x, a(col, j)));
        if (inv(col, j) != 0) inv(i, j) = f.sub(inv(i, j), f.mul(x, inv(col, j)));
      }
    }
  }
  return inv;
}

FourierPair fourier_matrix(const Field& field, std::size_t n) {
  const FieldElement w = root_of_unity(field, n);
  const Elem w_inv = field.inv(w.value());
  const Elem n_inv = field.inv(field.from_int(static_cast<std::int64_t>(n)));
  FourierPair out{Matrix(field, n, n), Matrix(field, n, n), w};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t e = (i * j) % n;
      out.U(i, j) = field.pow(w.value(), e);
      out.V(i, j) = field.mul(n_inv, field.pow(w_inv, e));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

bool small_det_is_zero(const Field& f, std::array<Elem, 13 * 13>& a, std::size_t k) {
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv * k + col] == 0) ++piv;
    if (piv == k) return true;
    if (piv != col)
      for (std::size_t j = col; j < k; ++j) std::swap(a[piv * k + j], a[col * k + j]);
    const Elem pinv = f.inv(a[col * k + col]);
    for (std::size_t i = col + 1; i < k; ++i) {
      const Elem x = a[i * k + col];
      if (x == 0) continue;
      const Elem factor = f.mul(x, pinv);
      for (std::size_t j = col + 1; j < k; ++j)
        a[i * k + j] = f.sub(a[i * k + j], f.mul(factor, a[col * k + j]));
    }
  }
  return false;
}

}  // namespace

ChebotarevResult chebotarev_check(const Matrix& m, std::size_t guard, unsigned jobs) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "Chebotarev check needs a square matrix");
  const std::size_t n = m.rows();
  if (n > guard || n > 13) {
    throw Error(ErrorCode::kGuardExceeded,
                "Chebotarev check of size " + std::to_string(n) + " exceeds guard " +
                    std::to_string(std::min<std::size_t>(guard, 13)));
  }
  const Field& f = m.field();
  ChebotarevResult result;
  jobs = std::max(1u, jobs);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto subsets = combinations(n, k);
    const std::size_t total = subsets.size();
    // Smallest failing (row subset, column subset) pair, encoded as r*total+c.
    std::atomic<std::uint64_t> first_fail{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> dets{0};
    auto worker = [&](std::size_t start) {
      std::array<Elem, 13 * 13> buf{};
      std::uint64_t local = 0;
      for (std::size_t r = start; r < total; r += jobs) {
        if (static_cast<std::uint64_t>(r) * total > first_fail.load()) break;
        const auto& rows = subsets[r];
        for (std::size_t c = 0; c < total; ++c) {
          const auto& cols = subsets[c];
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = m(rows[i], cols[j]);
          ++local;
          if (small_det_is_zero(f, buf, k)) {
            std::uint64_t code = static_cast<std::uint64_t>(r) * total + c;
            std::uint64_t prev = first_fail.load();
            while (code < prev && !first_fail.compare_exchange_weak(prev, code)) {
            }
            break;
          }
        }
      }
      dets += local;
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
      for (auto& t : pool) t.join();
    }
    result.determinants += dets.load();
    const std::uint64_t fail = first_fail.load();
    if (fail != std::numeric_limits<std::uint64_t>::max()) {
      result.holds = false;
      result.failing_rows = subsets[fail / total];
      result.failing_cols = subsets[fail % total];
      return result;
    }
  }
  return result;
}

std::uint32_t linear_min_distance(const Matrix& g, std::uint64_t guard, unsigned jobs) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "empty generator");
  const std::uint64_t q = f.cardinality();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (words > guard / q + 1) {
      words = guard + 1;
      break;
    }
    words *= q;
  }
  if (words > guard) {
    throw Error(ErrorCode::kGuardExceeded,
                "q^r exceeds the enumeration guard " + std::to_string(guard));
  }
  if (rank(g) != r) throw Error(ErrorCode::kInvalidArgument, "generator is not of full row rank");

  // Information words are normalized so that the leading nonzero coordinate
  // is 1; weight is invariant under scalars.
  std::atomic<std::uint32_t> best{static_cast<std::uint32_t>(n)};
  auto search = [&](std::size_t lead, Elem first_free_lo, Elem first_free_step) {
    // partial[level] holds the codeword accumulated over rows lead..level.
    std::vector<std::vector<Elem>> partial(r + 1, std::vector<Elem>(n, 0));
    auto row0 = g.row(lead);
    std::copy(row0.begin(), row0.end(), partial[lead].begin());
    std::uint32_t local = best.load();
    // Iterative DFS over coordinates lead+1..r-1.
    std::vector<Elem> value(r, 0);
    auto leaf = [&](const std::vector<Elem>& v) {
      const auto w = static_cast<std::uint32_t>(weight(v));
      if (w < local) local = w;
    };
    if (lead + 1 == r) {
      leaf(partial[lead]);
    } else {
      std::size_t level = lead + 1;
      value[level] = first_free_lo;
      auto fill = [&](std::size_t lv) {
        const auto row = g.row(lv);
        const Elem c = value[lv];
        for (std::size_t j = 0; j < n; ++j)
          partial[lv][j] = c == 0 ? partial[lv - 1][j]
                                  : f.add(partial[lv - 1][j], f.mul(c, row[j]));
      };
      fill(level);
      while (true) {
        if (level + 1 < r) {
          ++level;
          value[level] = 0;
          fill(level);
          continue;
        }
        leaf(partial[level]);
        // Advance.
        while (true) {
          const Elem step = level == lead + 1 ? first_free_step : 1;
          if (value[level] + step < q) {
            value[level] += step;
            fill(level);
            break;
          }
          if (level == lead + 1) {
            level = 0;
            break;
          }
          --level;
        }
        if (level == 0) break;
      }
    }
    std::uint32_t prev = best.load();
    while (local < prev && !best.compare_exchange_weak(prev, local)) {
    }
  };
  jobs = std::max(1u, jobs);
  for (std::size_t lead = 0; lead < r; ++lead) {
    if (jobs == 1 || lead + 1 == r) {
      search(lead, 0, 1);
    } else {
      std::vector<std::thread> pool;
      const unsigned t_count = static_cast<unsigned>(std::min<std::uint64_t>(jobs, q));
      for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(search, lead, t, t_count);
      for (auto& t : pool) t.join();
    }
  }
  return best.load();
}

bool is_orthogonal(const Matrix& u) {
  if (u.rows() != u.cols()) return false;
  return (u * u.transpose()).is_identity();
}

std::string write_matrix_text(const Matrix& m) {
  const Field& f = m.field();
  std::ostringstream os;
  os << f.characteristic() << ' ' << f.degree() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  if (f.degree() > 1) {
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? " " : "") << f.modulus()[i];
    os << '\n';
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      if (f.degree() == 1) {
        os << m(i, j);
      } else {
        const auto c = f.coeffs(m(i, j));
        for (std::size_t t = 0; t < c.size(); ++t) os << (t ? ":" : "") << c[t];
      }
    }
    os << '\n';
  }
  return os.str();
}

Matrix read_matrix_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::uint32_t p = 0, m = 0;
  std::size_t rows = 0, cols = 0;
  if (!(is >> p >> m >> rows >> cols)) throw Error(ErrorCode::kParse, "bad matrix header");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (m > 1) {
    std::vector<std::uint32_t> mod(m + 1);
    for (auto& c : mod)
      if (!(is >> c)) throw Error(ErrorCode::kParse, "bad modulus line");
    modulus = std::move(mod);
  }
  const Field f = make_field(p, m, modulus);
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) throw Error(ErrorCode::kParse, "matrix has too few entries");
      std::vector<std::uint32_t> c;
      std::size_t pos = 0;
      while (pos <= tok.size()) {
        const std::size_t next = std::min(tok.find(':', pos), tok.size());
        try {
          c.push_back(static_cast<std::uint32_t>(std::stoul(tok.substr(pos, next - pos))));
        } catch (const std::exception&) {
          throw Error(ErrorCode::kParse, "bad matrix entry '" + tok + "'");
        }
        pos = next + 1;
      }
      if (m == 1) {
        if (c.size() != 1 || c[0] >= p) throw Error(ErrorCode::kParse, "bad entry '" + tok + "'");
        out(i, j) = c[0];
      } else {
        out(i, j) = f.from_coeffs(c);
      }
    }
  }
  return out;
}

}  // namespace unitconv
