#include "chordidx/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chordidx/checked.hpp"
#include "chordidx/error.hpp"

namespace chordidx {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

struct ExtGcd {
  std::int64_t g, s, t;  // g = s*a + t*b, g >= 0
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = sub(old_r, mul(q, r));
    std::swap(old_r, r);
    old_s = sub(old_s, mul(q, s));
    std::swap(old_s, s);
    old_t = sub(old_t, mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// rows[i] <- a*rows[i] + b*rows[j]; rows[j] <- c*rows[i] + d*rows[j] (simultaneously)
void combine_rows(Matrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d) {
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    const std::int64_t x = m[i][k], y = m[j][k];
    m[i][k] = add(mul(a, x), mul(b, y));
    m[j][k] = add(mul(c, x), mul(d, y));
  }
}

void combine_cols(Matrix& m, std::size_t i, std::size_t j, std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d) {
  for (auto& row : m) {
    const std::int64_t x = row[i], y = row[j];
    row[i] = add(mul(a, x), mul(b, y));
    row[j] = add(mul(c, x), mul(d, y));
  }
}

// Row-style Hermite normal form of a full-row-rank integer matrix.
Matrix hermite_rows(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      const std::int64_t a = rows[pivot_row][col], b = rows[r][col];
      if (b == 0) continue;
      const ExtGcd e = ext_gcd(a, b);
      combine_rows(rows, pivot_row, r, e.s, e.t, neg(b / e.g), a / e.g);
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = neg(x);
    const std::int64_t p = rows[pivot_row][col];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      const std::int64_t q = (rows[r][col] - floor_mod(rows[r][col], p)) / p;
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = sub(rows[r][k], mul(q, rows[pivot_row][k]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

}  // namespace

HomologyClass::HomologyClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.size() % 2 != 0) fail(ErrorCode::kWrongLength, "homology class needs an even number of coordinates");
}

HomologyClass HomologyClass::basis(int genus, int k) {
  if (k < 1 || k > 2 * genus) fail(ErrorCode::kSideIndexOutOfRange, "basis index out of range");
  HomologyClass c = zero(genus);
  c.coords_[static_cast<std::size_t>(k - 1)] = 1;
  return c;
}

bool HomologyClass::is_zero() const {
  for (auto x : coords_)
    if (x != 0) return false;
  return true;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& o) {
  if (o.rank() != rank()) fail(ErrorCode::kLengthMismatch, "adding classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add(coords_[i], o.coords_[i]);
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& o) {
  if (o.rank() != rank()) fail(ErrorCode::kLengthMismatch, "subtracting classes of different rank");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = sub(coords_[i], o.coords_[i]);
  return *this;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r = *this;
  for (auto& x : r.coords_) x = neg(x);
  return r;
}

HomologyClass operator*(std::int64_t k, const HomologyClass& a) {
  HomologyClass r = a;
  for (auto& x : r.coords_) x = mul(k, x);
  return r;
}

std::string HomologyClass::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? ", " : "") << coords_[i];
  out << ')';
  return out.str();
}

std::int64_t intersection(const HomologyClass& x, const HomologyClass& y) {
  if (x.rank() != y.rank())
    fail(ErrorCode::kLengthMismatch,
         "intersection of classes of rank " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()));
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < x.rank(); i += 2) s = add(s, sub(mul(x[i], y[i + 1]), mul(x[i + 1], y[i])));
  return s;
}

HomologyClass walk_class(const ClosedWalk& walk, int genus) {
  HomologyClass c = HomologyClass::zero(genus);
  for (const Event& e : walk) {
    if (!e.is_side()) continue;
    if (e.basis_index < 1 || e.basis_index > 2 * genus)
      fail(ErrorCode::kSideIndexOutOfRange, "side index " + std::to_string(e.basis_index) + " outside genus");
    auto& x = c[static_cast<std::size_t>(e.basis_index - 1)];
    x = add(x, e.direction);
  }
  return c;
}

HomologyClass walk_class(const SurfaceDiagram& d) { return walk_class(d.events(), d.genus()); }

std::vector<HomologyClass> admissible_subgroup_basis(const SurfaceDiagram& d) {
  const HomologyClass k = walk_class(d);
  const std::size_t n = k.rank();
  if (n == 0) return {};
  // α·k = u·α with u = (k2, -k1, k4, -k3, ...); column-reduce u.
  std::vector<std::int64_t> u(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    u[i] = k[i + 1];
    u[i + 1] = neg(k[i]);
  }
  Matrix cols = identity(n);  // cols[r][c]: column c of the unimodular transform
  for (std::size_t j = 1; j < n; ++j) {
    const std::int64_t a = u[0], b = u[j];
    if (b == 0) continue;
    const ExtGcd e = ext_gcd(a, b);
    combine_cols(cols, 0, j, e.s, e.t, neg(b / e.g), a / e.g);
    u[0] = e.g;
    u[j] = 0;
  }
  Matrix kernel;
  const std::size_t first = u[0] == 0 ? 0 : 1;
  for (std::size_t c = first; c < n; ++c) {
    std::vector<std::int64_t> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = cols[r][c];
    kernel.push_back(std::move(v));
  }
  std::vector<HomologyClass> out;
  for (auto& row : hermite_rows(std::move(kernel))) out.emplace_back(std::move(row));
  return out;
}

bool is_admissible(const HomologyClass& alpha, const SurfaceDiagram& d) {
  return intersection(alpha, walk_class(d)) == 0;
}

SegmentClasses::SegmentClasses(const SurfaceDiagram& d) : diagram_(&d), rank_(2 * static_cast<std::size_t>(d.genus())) {
  prefix_.assign((d.size() + 1) * rank_, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d.events()[i];
    std::copy_n(prefix_.begin() + static_cast<std::ptrdiff_t>(i * rank_), rank_,
                prefix_.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank_));
    if (e.is_side()) {
      auto& x = prefix_[(i + 1) * rank_ + static_cast<std::size_t>(e.basis_index - 1)];
      x = add(x, e.direction);
    }
  }
  total_ = HomologyClass(std::vector<std::int64_t>(prefix_.end() - static_cast<std::ptrdiff_t>(rank_), prefix_.end()));
}

HomologyClass SegmentClasses::between(std::size_t from, std::size_t to) const {
  std::vector<std::int64_t> out(rank_);
  const std::int64_t* a = prefix_.data() + (from + 1) * rank_;
  const std::int64_t* b = prefix_.data() + to * rank_;
  if (from < to) {
    for (std::size_t k = 0; k < rank_; ++k) out[k] = sub(b[k], a[k]);
  } else {
    for (std::size_t k = 0; k < rank_; ++k) out[k] = add(sub(total_[k], a[k]), b[k]);
  }
  return HomologyClass(std::move(out));
}

HomologyClass SegmentClasses::under_to_over(CrossingId c) const {
  const auto& info = diagram_->crossing(c);
  return between(info.under_pos, info.over_pos);
}

HomologyClass SegmentClasses::over_to_under(CrossingId c) const {
  const auto& info = diagram_->crossing(c);
  return between(info.over_pos, info.under_pos);
}

CyclicQuotient::CyclicQuotient(const HomologyClass& generator) {
  const std::size_t n = generator.rank();
  forward_ = identity(n);
  inverse_ = identity(n);
  if (n == 0) return;
  std::vector<std::int64_t> v(generator.coords().begin(), generator.coords().end());
  for (std::size_t j = 1; j < n; ++j) {
    const std::int64_t a = v[0], b = v[j];
    if (b == 0) continue;
    const ExtGcd e = ext_gcd(a, b);
    const std::int64_t ag = a / e.g, bg = b / e.g;
    combine_rows(forward_, 0, j, e.s, e.t, neg(bg), ag);
    // inverse of [[s, t], [-b/g, a/g]] is [[a/g, -t], [b/g, s]], applied on columns
    combine_cols(inverse_, 0, j, ag, bg, neg(e.t), e.s);
    v[0] = e.g;
    v[j] = 0;
  }
  if (v[0] < 0) {
    for (auto& x : forward_[0]) x = neg(x);
    for (auto& row : inverse_) row[0] = neg(row[0]);
    v[0] = neg(v[0]);
  }
  gcd_ = v[0];
}

HomologyClass CyclicQuotient::canonical(const HomologyClass& x) const {
  const std::size_t n = x.rank();
  if (n != forward_.size()) fail(ErrorCode::kLengthMismatch, "quotient class rank mismatch");
  if (gcd_ == 0) return x;
  std::vector<std::int64_t> y(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) y[r] = add(y[r], mul(forward_[r][c], x[c]));
  y[0] = floor_mod(y[0], gcd_);
  std::vector<std::int64_t> back(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) back[r] = add(back[r], mul(inverse_[r][c], y[c]));
  return HomologyClass(std::move(back));
}

}  // namespace chordidx
