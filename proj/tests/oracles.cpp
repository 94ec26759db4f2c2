#include "oracles.hpp"

#include <vector>

namespace curvetop::oracles {

namespace {

using QVec = std::vector<BigRat>;

QVec to_q(const UnivariatePolynomial& p) {
  QVec q(p.coeffs().size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = BigRat(p.coeffs()[i]);
  return q;
}

void q_trim(QVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QVec q_rem(QVec a, const QVec& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    q_trim(a);
  }
  return a;
}

int q_sign_at(const QVec& p, const BigRat& x) {
  BigRat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return sgn(acc);
}

int sturm_variations(const std::vector<QVec>& seq, const BigRat& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = q_sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::vector<QVec> sturm_sequence(const UnivariatePolynomial& p) {
  std::vector<QVec> seq;
  QVec p0 = to_q(p);
  q_trim(p0);
  seq.push_back(p0);
  QVec p1 = to_q(p.derivative());
  q_trim(p1);
  if (p1.empty()) return seq;
  seq.push_back(p1);
  while (true) {
    QVec r = q_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

}  // namespace

int sturm_count(const UnivariatePolynomial& p, const BigRat& a, const BigRat& b) {
  auto seq = sturm_sequence(p);
  return sturm_variations(seq, a) - sturm_variations(seq, b);
}

int sturm_count_all(const UnivariatePolynomial& p) {
  if (p.degree() < 1) return 0;
  long k = p.cauchy_root_bound_log2();
  BigInt bound(1);
  bound <<= static_cast<unsigned long>(k);
  return sturm_count(p, BigRat(-bound), BigRat(bound));
}

UnivariatePolynomial sylvester_resultant_y(const BivariatePolynomial& p,
                                           const BivariatePolynomial& q) {
  int n = p.degree_y(), m = q.degree_y();
  if (n < 0 || m < 0) throw Error("sylvester_resultant_y: zero input");
  int size = n + m;
  if (size == 0) return UnivariatePolynomial::constant(1);
  auto pc = p.y_coeffs(), qc = q.y_coeffs();
  std::vector<std::vector<UnivariatePolynomial>> M(
      size, std::vector<UnivariatePolynomial>(size, UnivariatePolynomial()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[i][i + j] = pc[static_cast<size_t>(n - j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[m + i][i + j] = qc[static_cast<size_t>(m - j)];

  // Bareiss fraction-free elimination.
  UnivariatePolynomial prev = UnivariatePolynomial::constant(1);
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (!M[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return UnivariatePolynomial();  // singular: resultant 0
      std::swap(M[k], M[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divexact(prev);
      M[i][k] = UnivariatePolynomial();
    }
    prev = M[k][k];
  }
  UnivariatePolynomial det = M[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

int grid_component_count(const BivariatePolynomial& f, double x0, double y0, double x1, double y1,
                         int res) {
  // Double-precision Horner over the y-view.
  std::vector<std::vector<double>> coeff;  // coeff[i][j]: y^i x^j
  for (const auto& fi : f.y_coeffs()) {
    std::vector<double> row;
    for (const auto& c : fi.coeffs()) row.push_back(c.get_d());
    coeff.push_back(std::move(row));
  }
  auto eval = [&](double x, double y) {
    double acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) {
      double cx = 0;
      for (size_t j = coeff[i].size(); j-- > 0;) cx = cx * x + coeff[i][j];
      acc = acc * y + cx;
    }
    return acc;
  };

  int nx = res + 1;
  std::vector<signed char> sign(static_cast<size_t>(nx) * nx);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j) {
      double x = x0 + (x1 - x0) * i / res;
      double y = y0 + (y1 - y0) * j / res;
      double v = eval(x, y);
      sign[static_cast<size_t>(i) * nx + j] = v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
  auto s = [&](int i, int j) { return sign[static_cast<size_t>(i) * nx + j]; };
  auto crossing = [&](int a, int b) { return a == 0 || b == 0 || a != b; };

  std::vector<char> mark(static_cast<size_t>(res) * res, 0);
  auto midx = [&](int i, int j) { return static_cast<size_t>(i) * res + j; };
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      bool c = crossing(s(i, j), s(i + 1, j)) || crossing(s(i, j), s(i, j + 1)) ||
               crossing(s(i + 1, j), s(i + 1, j + 1)) || crossing(s(i, j + 1), s(i + 1, j + 1));
      mark[midx(i, j)] = c ? 1 : 0;
    }

  int components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      if (mark[midx(i, j)] != 1) continue;
      ++components;
      mark[midx(i, j)] = 2;
      stack.push_back({i, j});
      while (!stack.empty()) {
        auto [ci, cj] = stack.back();
        stack.pop_back();
        for (int di = -1; di <= 1; ++di)
          for (int dj = -1; dj <= 1; ++dj) {
            int ni = ci + di, nj = cj + dj;
            if (ni < 0 || nj < 0 || ni >= res || nj >= res) continue;
            if (mark[midx(ni, nj)] == 1) {
              mark[midx(ni, nj)] = 2;
              stack.push_back({ni, nj});
            }
          }
      }
    }
  return components;
}

UnivariatePolynomial random_upoly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
  int deg = dd(rng);
  std::vector<BigInt> c(static_cast<size_t>(deg) + 1);
  for (auto& v : c) v = BigInt(dc(rng));
  while (c.back() == 0) c.back() = BigInt(dc(rng));
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial random_squarefree_upoly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
  while (true) {
    UnivariatePolynomial p = random_upoly(rng, max_deg, coeff_bound);
    if (p.degree() < 1) continue;
    if (gcd_univariate(p, p.derivative()).degree() == 0) return p;
  }
}

BivariatePolynomial random_bipoly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> keep(0, 2);
  BivariatePolynomial::TermMap t;
  int deg = std::max(1, dd(rng));
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) {
      if (keep(rng) == 0) continue;
      long c = dc(rng);
      if (c != 0) t[{i, j}] = BigInt(c);
    }
  if (t.empty()) t[{0, 1}] = 1;
  return BivariatePolynomial(std::move(t));
}

BivariatePolynomial bp(std::initializer_list<std::tuple<int, int, long>> terms) {
  BivariatePolynomial::TermMap t;
  for (const auto& [dx, dy, c] : terms) t[{dx, dy}] += BigInt(c);
  return BivariatePolynomial(std::move(t));
}

}  // namespace curvetop::oracles
