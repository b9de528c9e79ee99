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

#include "unitconv/polymat.hpp"

#include <algorithm>

namespace unitconv {

namespace upoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly scale(const Field& f, const Poly& a, Elem s) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], s);
  trim(out);
  return out;
}

void divmod(const Field& f, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.empty()) throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  const Elem lead_inv = f.inv(b.back());
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Elem c = f.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    trim(rem);
  }
  trim(quot);
}

}  // namespace upoly

using upoly::Poly;

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {}

PolyMatrix::PolyMatrix(Matrix constant)
    : field_(constant.field()), rows_(constant.rows()), cols_(constant.cols()) {
  blocks_.push_back(std::move(constant));
  trim();
}

PolyMatrix PolyMatrix::from_blocks(std::vector<Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::kInvalidArgument, "no coefficient blocks");
  PolyMatrix p(blocks.front().field(), blocks.front().rows(), blocks.front().cols());
  for (const auto& b : blocks) {
    if (b.rows() != p.rows_ || b.cols() != p.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "coefficient blocks differ in shape");
    }
    if (!(b.field() == p.field_)) throw Error(ErrorCode::kFieldMismatch, "blocks over different fields");
  }
  p.blocks_ = std::move(blocks);
  p.trim();
  return p;
}

PolyMatrix PolyMatrix::identity(const Field& field, std::size_t n) {
  return PolyMatrix(Matrix::identity(field, n));
}

void PolyMatrix::trim() {
  while (!blocks_.empty() && blocks_.back().is_zero()) blocks_.pop_back();
}

Matrix PolyMatrix::block(std::size_t k) const {
  if (k < blocks_.size()) return blocks_[k];
  return Matrix(field_, rows_, cols_);
}

Poly PolyMatrix::entry(std::size_t i, std::size_t j) const {
  Poly p(blocks_.size());
  for (std::size_t k = 0; k < blocks_.size(); ++k) p[k] = blocks_[k](i, j);
  upoly::trim(p);
  return p;
}

void PolyMatrix::set_entry(std::size_t i, std::size_t j, const Poly& p) {
  while (blocks_.size() < p.size()) blocks_.emplace_back(field_, rows_, cols_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k](i, j) = k < p.size() ? p[k] : 0;
  trim();
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, cols_, rows_);
  for (const auto& b : blocks_) out.blocks_.push_back(b.transpose());
  return out;
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> idx) const {
  PolyMatrix out(field_, idx.size(), cols_);
  for (const auto& b : blocks_) out.blocks_.push_back(b.select_rows(idx));
  out.trim();
  return out;
}

PolyMatrix PolyMatrix::select_cols(std::span<const std::size_t> idx) const {
  PolyMatrix out(field_, rows_, idx.size());
  for (const auto& b : blocks_) out.blocks_.push_back(b.select_cols(idx));
  out.trim();
  return out;
}

PolyMatrix PolyMatrix::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  PolyMatrix out(field_, rows_, cols_);
  out.blocks_.assign(k, Matrix(field_, rows_, cols_));
  out.blocks_.insert(out.blocks_.end(), blocks_.begin(), blocks_.end());
  return out;
}

PolyMatrix PolyMatrix::hstack(std::span<const PolyMatrix> parts) {
  if (parts.empty()) return {};
  std::size_t deg = 0, cols = 0;
  for (const auto& p : parts) {
    deg = std::max<std::size_t>(deg, p.blocks_.size());
    cols += p.cols_;
  }
  PolyMatrix out(parts.front().field_, parts.front().rows_, cols);
  for (std::size_t k = 0; k < deg; ++k) {
    std::vector<Matrix> row;
    for (const auto& p : parts) row.push_back(p.block(k));
    out.blocks_.push_back(Matrix::hstack(row));
  }
  out.trim();
  return out;
}

PolyMatrix PolyMatrix::vstack(std::span<const PolyMatrix> parts) {
  if (parts.empty()) return {};
  std::size_t deg = 0, rows = 0;
  for (const auto& p : parts) {
    deg = std::max<std::size_t>(deg, p.blocks_.size());
    rows += p.rows_;
  }
  PolyMatrix out(parts.front().field_, rows, parts.front().cols_);
  for (std::size_t k = 0; k < deg; ++k) {
    std::vector<Matrix> col;
    for (const auto& p : parts) col.push_back(p.block(k));
    out.blocks_.push_back(Matrix::vstack(col));
  }
  out.trim();
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.blocks_ == b.blocks_;
}

namespace {

void require_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc, const char* what) {
  if (ar != br || ac != bc) throw Error(ErrorCode::kDimensionMismatch, std::string(what) + " of different shapes");
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a.rows_, a.cols_, b.rows_, b.cols_, "sum");
  PolyMatrix out(a.field_, a.rows_, a.cols_);
  const std::size_t deg = std::max(a.blocks_.size(), b.blocks_.size());
  for (std::size_t k = 0; k < deg; ++k) out.blocks_.push_back(a.block(k) + b.block(k));
  out.trim();
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a.rows_, a.cols_, b.rows_, b.cols_, "difference");
  PolyMatrix out(a.field_, a.rows_, a.cols_);
  const std::size_t deg = std::max(a.blocks_.size(), b.blocks_.size());
  for (std::size_t k = 0; k < deg; ++k) out.blocks_.push_back(a.block(k) - b.block(k));
  out.trim();
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "polynomial matrix product: inner dimensions differ");
  PolyMatrix out(a.field_, a.rows_, b.cols_);
  if (a.is_zero() || b.is_zero()) return out;
  out.blocks_.assign(a.blocks_.size() + b.blocks_.size() - 1, Matrix(a.field_, a.rows_, b.cols_));
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (a.blocks_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.blocks_.size(); ++j) {
      if (b.blocks_[j].is_zero()) continue;
      out.blocks_[i + j] = out.blocks_[i + j] + a.blocks_[i] * b.blocks_[j];
    }
  }
  out.trim();
  return out;
}

// ------------------------------------------------------------- LaurentMatrix

LaurentMatrix::LaurentMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {}

LaurentMatrix::LaurentMatrix(const PolyMatrix& p, int offset)
    : field_(p.field()), rows_(p.rows()), cols_(p.cols()), offset_(offset), blocks_(p.blocks()) {
  canonicalize();
}

LaurentMatrix LaurentMatrix::from_blocks(int offset, std::vector<Matrix> blocks) {
  return LaurentMatrix(PolyMatrix::from_blocks(std::move(blocks)), offset);
}

void LaurentMatrix::canonicalize() {
  while (!blocks_.empty() && blocks_.back().is_zero()) blocks_.pop_back();
  std::size_t lead = 0;
  while (lead < blocks_.size() && blocks_[lead].is_zero()) ++lead;
  if (lead > 0) {
    blocks_.erase(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<int>(lead);
  }
  if (blocks_.empty()) offset_ = 0;
}

Matrix LaurentMatrix::coefficient(int k) const {
  const int idx = k - offset_;
  if (idx >= 0 && idx < static_cast<int>(blocks_.size())) return blocks_[static_cast<std::size_t>(idx)];
  return Matrix(field_, rows_, cols_);
}

PolyMatrix LaurentMatrix::to_poly() const {
  if (!is_polynomial()) throw Error(ErrorCode::kInvalidArgument, "Laurent matrix has negative powers");
  if (is_zero()) return PolyMatrix(field_, rows_, cols_);
  std::vector<Matrix> blocks(static_cast<std::size_t>(offset_), Matrix(field_, rows_, cols_));
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  return PolyMatrix::from_blocks(std::move(blocks));
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
  LaurentMatrix out = *this;
  if (!out.is_zero()) out.offset_ += k;
  return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out(field_, cols_, rows_);
  out.offset_ = offset_;
  for (const auto& b : blocks_) out.blocks_.push_back(b.transpose());
  return out;
}

LaurentMatrix LaurentMatrix::conjugate_transpose() const {
  LaurentMatrix out(field_, cols_, rows_);
  if (is_zero()) return out;
  out.offset_ = -top();
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) out.blocks_.push_back(it->transpose());
  return out;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.offset_ == b.offset_ && a.blocks_ == b.blocks_;
}

namespace {

LaurentMatrix combine(const LaurentMatrix& a, const LaurentMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "Laurent sum of different shapes");
  }
  if (a.is_zero() && b.is_zero()) return a;
  int lo = 0, hi = 0;
  if (a.is_zero()) {
    lo = b.offset();
    hi = b.top();
  } else if (b.is_zero()) {
    lo = a.offset();
    hi = a.top();
  } else {
    lo = std::min(a.offset(), b.offset());
    hi = std::max(a.top(), b.top());
  }
  std::vector<Matrix> blocks;
  for (int k = lo; k <= hi; ++k)
    blocks.push_back(subtract ? a.coefficient(k) - b.coefficient(k) : a.coefficient(k) + b.coefficient(k));
  return LaurentMatrix::from_blocks(lo, std::move(blocks));
}

}  // namespace

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) { return combine(a, b, false); }
LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) { return combine(a, b, true); }

LaurentMatrix poly_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::kFieldMismatch, "Laurent product over different fields");
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.is_zero() || b.is_zero()) return LaurentMatrix(a.field(), a.rows(), b.cols());
  const PolyMatrix pa = PolyMatrix::from_blocks(a.blocks());
  const PolyMatrix pb = PolyMatrix::from_blocks(b.blocks());
  return LaurentMatrix(pa * pb, a.offset() + b.offset());
}

// ------------------------------------------------------ generators, inverses

PolyMatrix assemble_generator(const UnitScheme& unit, const SelectionScheme& scheme) {
  scheme.validate(unit.n());
  std::vector<Matrix> blocks;
  for (const auto& t : scheme.tuples()) blocks.push_back(unit.U().select_rows(t));
  return PolyMatrix::from_blocks(std::move(blocks));
}

namespace {

// N[k][c] = sum over m >= 1 of z^m [E_m[k] == E_0[c]].
PolyMatrix overlap_matrix(const SelectionScheme& scheme, const Field& f) {
  const std::size_t r = scheme.r();
  std::vector<Matrix> blocks(scheme.tuples().size(), Matrix(f, r, r));
  const auto& e0 = scheme.tuple(0);
  for (std::size_t m = 1; m < scheme.tuples().size(); ++m)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t c = 0; c < r; ++c)
        if (scheme.tuple(m)[k] == e0[c]) blocks[m](k, c) = 1;
  return PolyMatrix::from_blocks(std::move(blocks));
}

// (I + N)^{-1} as a finite alternating sum when N is nilpotent.
std::optional<PolyMatrix> neumann_inverse(const PolyMatrix& n) {
  const Field& f = n.field();
  const std::size_t r = n.rows();
  PolyMatrix w = PolyMatrix::identity(f, r);
  if (n.is_zero()) return w;
  PolyMatrix neg_n = PolyMatrix(f, r, r) - n;
  PolyMatrix power = PolyMatrix::identity(f, r);
  for (std::size_t j = 1; j <= r; ++j) {
    power = power * neg_n;
    if (power.is_zero()) return w;
    w = w + power;
  }
  return std::nullopt;
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& e0, std::size_t n) {
  std::vector<bool> in(n, false);
  for (auto i : e0) in[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j)
    if (!in[j]) rest.push_back(j);
  return rest;
}

void verify_right_inverse(const PolyMatrix& g, const PolyMatrix& h) {
  if (!(g * h == PolyMatrix::identity(g.field(), g.rows()))) {
    throw Error(ErrorCode::kVerificationFailed, "G H is not the identity");
  }
}

}  // namespace

PolyMatrix right_inverse_structured(const SelectionScheme& scheme, const UnitScheme& unit,
                                   std::string* method) {
  const SelectionClass cls = classify_selection(scheme);
  if (cls == SelectionClass::kUnknown) {
    throw Error(ErrorCode::kConditionNotMet, "every row of E_0 reappears in a later tuple");
  }
  const PolyMatrix g = assemble_generator(unit, scheme);
  const PolyMatrix h0(unit.V().select_cols(scheme.tuple(0)));
  if (cls == SelectionClass::kDisjoint) {
    verify_right_inverse(g, h0);
    if (method) *method = "disjoint";
    return h0;
  }
  if (auto w = neumann_inverse(overlap_matrix(scheme, unit.field()))) {
    PolyMatrix h = h0 * *w;
    verify_right_inverse(g, h);
    if (method) *method = "neumann";
    return h;
  }
  if (auto h = right_invertible_general(g)) {
    if (method) *method = "general";
    return *h;
  }
  throw Error(ErrorCode::kCatastrophic,
              "scheme " + scheme.to_string() + " has no polynomial right inverse");
}

ColumnReduction column_reduce(const PolyMatrix& g) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();
  std::vector<std::vector<Poly>> a(r, std::vector<Poly>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.entry(i, j);
  std::vector<std::vector<Poly>> q(n, std::vector<Poly>(n));
  for (std::size_t j = 0; j < n; ++j) q[j][j] = {1};

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : q) std::swap(row[x], row[y]);
  };
  // column c -= t * column i
  auto axpy = [&](std::size_t c, std::size_t i, const Poly& t) {
    for (auto& row : a)
      if (!row[i].empty()) row[c] = upoly::sub(f, row[c], upoly::mul(f, t, row[i]));
    for (auto& row : q)
      if (!row[i].empty()) row[c] = upoly::sub(f, row[c], upoly::mul(f, t, row[i]));
  };

  ColumnReduction out;
  out.full_rank = r <= n;
  for (std::size_t i = 0; i < r && out.full_rank; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = i; c < n; ++c) {
        if (a[i][c].empty()) continue;
        if (best == n || a[i][c].size() < a[i][best].size()) best = c;
      }
      if (best == n) {
        out.full_rank = false;
        break;
      }
      if (best != i) swap_cols(i, best);
      bool clean = true;
      for (std::size_t c = i + 1; c < n; ++c) {
        if (a[i][c].empty()) continue;
        Poly quot, rem;
        upoly::divmod(f, a[i][c], a[i][i], quot, rem);
        axpy(c, i, quot);
        if (!a[i][c].empty()) clean = false;
      }
      if (clean) break;
    }
  }

  out.L = PolyMatrix(f, r, std::min(r, n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < std::min(r, n); ++j) out.L.set_entry(i, j, a[i][j]);
  out.Q = PolyMatrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.Q.set_entry(i, j, q[i][j]);
  return out;
}

std::optional<PolyMatrix> right_invertible_general(const PolyMatrix& g) {
  const Field& f = g.field();
  const std::size_t r = g.rows();
  if (r > g.cols() || r == 0) return std::nullopt;
  const ColumnReduction red = column_reduce(g);
  if (!red.full_rank) return std::nullopt;
  std::vector<Elem> diag_inv(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Poly d = red.L.entry(i, i);
    if (d.size() != 1) return std::nullopt;
    diag_inv[i] = f.inv(d[0]);
  }
  // Forward substitution for L X = I.
  std::vector<std::vector<Poly>> x(r, std::vector<Poly>(r));
  for (std::size_t j = 0; j < r; ++j) {
    x[j][j] = {diag_inv[j]};
    for (std::size_t i = j + 1; i < r; ++i) {
      Poly acc;
      for (std::size_t k = j; k < i; ++k) acc = upoly::add(f, acc, upoly::mul(f, red.L.entry(i, k), x[k][j]));
      x[i][j] = upoly::scale(f, acc, f.neg(diag_inv[i]));
    }
  }
  PolyMatrix linv(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) linv.set_entry(i, j, x[i][j]);
  std::vector<std::size_t> first(r);
  for (std::size_t i = 0; i < r; ++i) first[i] = i;
  PolyMatrix h = red.Q.select_cols(first) * linv;
  verify_right_inverse(g, h);
  return h;
}

PolyMatrix polynomial_kernel(const PolyMatrix& g) {
  const ColumnReduction red = column_reduce(g);
  if (!red.full_rank) throw Error(ErrorCode::kInvalidArgument, "generator is not of full row rank");
  std::vector<std::size_t> rest;
  for (std::size_t j = g.rows(); j < g.cols(); ++j) rest.push_back(j);
  PolyMatrix k = red.Q.select_cols(rest);
  if (!(g * k).is_zero()) throw Error(ErrorCode::kVerificationFailed, "kernel basis does not annihilate G");
  return k;
}

PolyMatrix check_matrix(const SelectionScheme& scheme, const UnitScheme& unit) {
  const SelectionClass cls = classify_selection(scheme);
  if (cls == SelectionClass::kUnknown) {
    throw Error(ErrorCode::kConditionNotMet, "every row of E_0 reappears in a later tuple");
  }
  const Field& f = unit.field();
  const std::size_t n = unit.n(), r = scheme.r();
  const PolyMatrix g = assemble_generator(unit, scheme);
  std::optional<PolyMatrix> w = PolyMatrix::identity(f, r);
  if (cls == SelectionClass::kUniqueRow) w = neumann_inverse(overlap_matrix(scheme, f));
  if (!w) throw Error(ErrorCode::kConditionNotMet, "overlap with E_0 is not nilpotent");

  const auto rest = complement(scheme.tuple(0), n);
  // M_j = G f_j for j outside E_0: z^m in row k whenever E_m[k] == j.
  std::vector<std::size_t> pos(n, rest.size());
  for (std::size_t c = 0; c < rest.size(); ++c) pos[rest[c]] = c;
  std::vector<Matrix> mblocks(scheme.tuples().size(), Matrix(f, r, rest.size()));
  for (std::size_t m = 1; m < scheme.tuples().size(); ++m)
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t j = scheme.tuple(m)[k];
      if (pos[j] < rest.size()) mblocks[m](k, pos[j]) = f.add(mblocks[m](k, pos[j]), 1);
    }
  const PolyMatrix mm = PolyMatrix::from_blocks(std::move(mblocks));
  const PolyMatrix h0(unit.V().select_cols(scheme.tuple(0)));
  const PolyMatrix k = PolyMatrix(unit.V().select_cols(rest)) - h0 * (*w * mm);
  if (!(g * k).is_zero()) throw Error(ErrorCode::kVerificationFailed, "G K is not zero");
  if (rank(k.block(0)) != n - r) {
    throw Error(ErrorCode::kVerificationFailed, "constant term of K is rank deficient");
  }
  return k;
}

}  // namespace unitconv
