#include "glrank/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace glrank {

namespace {

void make_primitive(ZVector& v, std::size_t from) {
  Integer g = 0;
  for (std::size_t j = from; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (std::size_t j = from; j < v.size(); ++j)
      if (sgn(v[j]) != 0) mpz_divexact(v[j].get_mpz_t(), v[j].get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool IntegerEchelon::insert(ZVector v) {
  if (v.size() != cols_) throw std::invalid_argument("IntegerEchelon::insert: wrong row length");
  Integer g, a, b;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t piv = pivots_[k];
    if (sgn(v[piv]) == 0) continue;
    const ZVector& row = rows_[k];
    mpz_gcd(g.get_mpz_t(), row[piv].get_mpz_t(), v[piv].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), row[piv].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[piv].get_mpz_t(), g.get_mpz_t());
    // v <- a*v - b*row, which clears column piv. Columns before piv can hold free-column
    // entries of v, so the scaling has to cover the whole row.
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(row[j]) == 0) {
        if (sgn(v[j]) != 0 && a != 1) v[j] *= a;
      } else {
        v[j] *= a;
        mpz_submul(v[j].get_mpz_t(), b.get_mpz_t(), row[j].get_mpz_t());
      }
    }
    make_primitive(v, 0);
  }
  std::size_t lead = 0;
  while (lead < cols_ && sgn(v[lead]) == 0) ++lead;
  if (lead == cols_) return false;
  make_primitive(v, lead);
  if (sgn(v[lead]) < 0)
    for (std::size_t j = lead; j < cols_; ++j) v[j] = -v[j];
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  auto offset = at - pivots_.begin();
  pivots_.insert(at, lead);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool IntegerEchelon::is_pivot(std::size_t col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

void IntegerEchelon::back_substitute(QVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntegerEchelon::back_substitute: wrong length");
  for (std::size_t k = rows_.size(); k-- > 0;) {
    const ZVector& row = rows_[k];
    const std::size_t piv = pivots_[k];
    Rational acc = 0;
    for (std::size_t j = piv + 1; j < cols_; ++j)
      if (sgn(row[j]) != 0 && sgn(x[j]) != 0) acc += Rational(row[j]) * x[j];
    x[piv] = -acc / Rational(row[piv]);
  }
}

std::vector<QVector> IntegerEchelon::kernel() const {
  // Fraction-free Gauss-Jordan on a copy: afterwards row k is nonzero only at its pivot and
  // at free columns, so every kernel entry is a single quotient. Rational back-substitution
  // pays a gcd per addition and is far slower on large entries.
  std::vector<ZVector> red = rows_;
  Integer g, a, b;
  for (std::size_t k = red.size(); k-- > 0;) {
    const std::size_t piv = pivots_[k];
    for (std::size_t up = 0; up < k; ++up) {
      ZVector& v = red[up];
      if (sgn(v[piv]) == 0) continue;
      const ZVector& row = red[k];
      mpz_gcd(g.get_mpz_t(), row[piv].get_mpz_t(), v[piv].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), row[piv].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), v[piv].get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = pivots_[up]; j < cols_; ++j) {
        if (sgn(row[j]) == 0) {
          if (sgn(v[j]) != 0 && a != 1) v[j] *= a;
        } else {
          v[j] *= a;
          mpz_submul(v[j].get_mpz_t(), b.get_mpz_t(), row[j].get_mpz_t());
        }
      }
      make_primitive(v, pivots_[up]);
    }
  }
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot(f)) continue;
    QVector x(cols_);
    x[f] = 1;
    for (std::size_t k = 0; k < red.size(); ++k) {
      if (sgn(red[k][f]) == 0) continue;
      x[pivots_[k]] = Rational(-red[k][f], red[k][pivots_[k]]);
      x[pivots_[k]].canonicalize();
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const QMatrix& m) {
  IntegerEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  IntegerEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.kernel();
}

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  u128 z = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer& z) {
  std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
  return r;
}

}  // namespace

std::size_t modular_rank(const std::vector<ZVector>& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("modular_rank: wrong row length");
    std::vector<std::uint64_t> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = sgn(row[j]) == 0 ? 0 : reduce(row[j]);
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (m[rank][j] == 0) continue;
        std::uint64_t sub = mul_mod(f, m[rank][j]);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace glrank
