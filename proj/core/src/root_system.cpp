// root_system.cpp -- construction of root-system data from the classification label.
//
// Simple roots are seeded from the standard orthogonal-coordinate realizations,
// the bilinear form is rescaled so long roots have squared length 2, and from
// there on everything lives in fundamental-weight coordinates: the simple root
// alpha_j is column j of the Cartan matrix and the gram matrix of the
// fundamental weights is diag(<alpha_i,alpha_i>/2) * A^{-1}.

#include "tkinv/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tkinv {

IntVec IntMat::apply(const IntVec& x) const {
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

RatVec IntMat::apply(const RatVec& x) const {
  RatVec out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < n; ++j) s += Rat(at(i, j)) * x[j];
    out[i] = s;
  }
  return out;
}

IntMat IntMat::mul(const IntMat& rhs) const {
  IntMat out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

namespace {

// Simple roots in orthogonal coordinates, exact rationals.  The ambient
// dimension may exceed the rank (A_n, E-series, G_2).
std::vector<RatVec> euclidean_simple_roots(const CartanLabel& l) {
  const int n = l.rank;
  auto basis = [](int dim, int i) {
    RatVec v(dim, Rat(0));
    v[i] = Rat(1);
    return v;
  };
  std::vector<RatVec> roots;
  switch (l.series) {
    case Series::A: {
      for (int i = 0; i < n; ++i) {
        RatVec v(n + 1, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        roots.push_back(v);
      }
      break;
    }
    case Series::B: {
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        roots.push_back(v);
      }
      roots.push_back(basis(n, n - 1));
      break;
    }
    case Series::C: {
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        roots.push_back(v);
      }
      RatVec v(n, Rat(0));
      v[n - 1] = Rat(2);
      roots.push_back(v);
      break;
    }
    case Series::D: {
      for (int i = 0; i + 1 < n; ++i) {
        RatVec v(n, Rat(0));
        v[i] = Rat(1);
        v[i + 1] = Rat(-1);
        roots.push_back(v);
      }
      RatVec v(n, Rat(0));
      v[n - 2] = Rat(1);
      v[n - 1] = Rat(1);
      roots.push_back(v);
      break;
    }
    case Series::E: {
      // Bourbaki numbering inside R^8; E6 and E7 take the leading simple roots.
      RatVec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      RatVec a2(8, Rat(0));
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      roots.push_back(a1);
      roots.push_back(a2);
      for (int i = 3; i <= n; ++i) {
        RatVec v(8, Rat(0));
        v[i - 2] = Rat(1);
        v[i - 3] = Rat(-1);
        roots.push_back(v);
      }
      break;
    }
    case Series::F: {
      RatVec a1(4, Rat(0)), a2(4, Rat(0)), a3(4, Rat(0)), a4(4, Rat(1, 2));
      a1[1] = Rat(1);
      a1[2] = Rat(-1);
      a2[2] = Rat(1);
      a2[3] = Rat(-1);
      a3[3] = Rat(1);
      a4[1] = Rat(-1, 2);
      a4[2] = Rat(-1, 2);
      a4[3] = Rat(-1, 2);
      roots = {a1, a2, a3, a4};
      break;
    }
    case Series::G: {
      RatVec a1 = {Rat(1), Rat(-1), Rat(0)};
      RatVec a2 = {Rat(-2), Rat(1), Rat(1)};
      roots = {a1, a2};
      break;
    }
  }
  return roots;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Inverse of a rational matrix by Gauss-Jordan elimination.
std::vector<RatVec> invert(std::vector<RatVec> m) {
  const int n = static_cast<int>(m.size());
  std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rat(0)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("invert: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = m[r][col];
      if (f == Rat(0)) continue;
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Int weyl_order_of(const CartanLabel& l) {
  auto fact = [](Int n) {
    Int f = 1;
    for (Int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const Int n = l.rank;
  switch (l.series) {
    case Series::A: return fact(n + 1);
    case Series::B:
    case Series::C: return (Int{1} << n) * fact(n);
    case Series::D: return (Int{1} << (n - 1)) * fact(n);
    case Series::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

// |det| of an integer matrix via fraction-free elimination on rationals.
Int abs_det(const std::vector<IntVec>& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<RatVec> m(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(cols[j][i]);
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rat(0)) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat d = m[col][col];
    for (int j = 0; j < n; ++j) m[col][j] /= d;
    for (int r = col + 1; r < n; ++r) {
      Rat f = m[r][col];
      if (f == Rat(0)) continue;
      for (int j = 0; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  if (!is_integral(det)) throw std::runtime_error("abs_det: non-integral determinant");
  return det.numerator() < 0 ? -det.numerator() : det.numerator();
}

}  // namespace

Rat RootSystem::ip(const Weight& x, const Weight& y) const {
  return Rat(ip_scaled(x.c, y.c), gram_den);
}

Rat RootSystem::ip(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (x[i] == Rat(0)) continue;
    Rat row(0);
    for (int j = 0; j < rank; ++j) row += gram[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

Rat RootSystem::ip(const Weight& x, const RatVec& y) const { return ip(to_rat(x), y); }

Int RootSystem::ip_scaled(const IntVec& x, const IntVec& y) const {
  Int s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank; ++j) row += gram_int.at(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Weight RootSystem::reflect_simple(int i, const Weight& x) const {
  Weight out = x;
  Int xi = x.c[i];
  if (xi == 0) return out;
  for (int j = 0; j < rank; ++j) out.c[j] -= xi * simple_roots[i].c[j];
  return out;
}

RatVec RootSystem::reflect_simple(int i, const RatVec& x) const {
  RatVec out = x;
  Rat xi = x[i];
  if (xi == Rat(0)) return out;
  for (int j = 0; j < rank; ++j) out[j] -= xi * Rat(simple_roots[i].c[j]);
  return out;
}

Weight RootSystem::dominant_fold(Weight x, int* sign) const {
  int s = 1;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < rank; ++i) {
      if (x.c[i] < 0) {
        x = reflect_simple(i, x);
        s = -s;
        again = true;
      }
    }
  }
  if (sign) *sign = s;
  return x;
}

RatVec RootSystem::dominant_fold(RatVec x, int* sign) const {
  int s = 1;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < rank; ++i) {
      if (x[i] < Rat(0)) {
        x = reflect_simple(i, x);
        s = -s;
        again = true;
      }
    }
  }
  if (sign) *sign = s;
  return x;
}

RootSystem build_root_system(const CartanLabel& label) {
  if (!label.admissible())
    throw std::invalid_argument("build_root_system: inadmissible label " + to_string(label));

  RootSystem rs;
  rs.label = label;
  rs.rank = label.rank;
  const int n = rs.rank;

  // Cartan matrix and simple norms from the orthogonal realization, rescaled so
  // the long roots get squared length 2.
  auto eroots = euclidean_simple_roots(label);
  Rat maxn(0);
  for (auto& r : eroots) maxn = std::max(maxn, dot(r, r));
  Rat scale = Rat(2) / maxn;

  rs.cartan = IntMat(n);
  rs.simple_norm2.resize(n);
  for (int i = 0; i < n; ++i) {
    rs.simple_norm2[i] = scale * dot(eroots[i], eroots[i]);
    for (int j = 0; j < n; ++j) {
      Rat a = Rat(2) * dot(eroots[i], eroots[j]) / dot(eroots[i], eroots[i]);
      if (!is_integral(a)) throw std::runtime_error("non-integral cartan entry");
      rs.cartan.at(i, j) = a.numerator();
    }
  }

  rs.simple_roots.resize(n);
  for (int j = 0; j < n; ++j) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = rs.cartan.at(i, j);
    rs.simple_roots[j] = Weight(col);
  }

  // gram = diag(d) * A^{-1} with d_i = <alpha_i,alpha_i>/2.
  std::vector<RatVec> a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(rs.cartan.at(i, j));
  auto ainv = invert(a);
  rs.gram.assign(n, RatVec(n));
  Int den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.gram[i][j] = (rs.simple_norm2[i] / 2) * ainv[i][j];
      den = std::lcm(den, rs.gram[i][j].denominator());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.gram[i][j] != rs.gram[j][i]) throw std::runtime_error("gram not symmetric");
  rs.gram_den = den;
  rs.gram_int = IntMat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = rs.gram[i][j] * Rat(den);
      rs.gram_int.at(i, j) = v.numerator();
    }

  // Positive roots: close the simple roots under simple reflections, tracked in
  // simple-root coefficients so positivity is a coordinatewise sign check.
  std::set<IntVec> seen;
  std::vector<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    IntVec c = queue[h];
    for (int i = 0; i < n; ++i) {
      Int pairing = 0;  // <beta, coroot_i> = sum_j A_ij c_j
      for (int j = 0; j < n; ++j) pairing += rs.cartan.at(i, j) * c[j];
      IntVec c2 = c;
      c2[i] -= pairing;
      if (seen.insert(c2).second) queue.push_back(c2);
    }
  }
  std::vector<IntVec> pos;
  for (const auto& c : seen) {
    bool nonneg = true;
    for (Int x : c) nonneg = nonneg && x >= 0;
    if (nonneg) pos.push_back(c);
  }
  std::sort(pos.begin(), pos.end());
  rs.positive_roots_sc = pos;
  for (const auto& c : pos) {
    IntVec w(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) w[i] += c[j] * rs.simple_roots[j].c[i];
    rs.positive_roots.push_back(Weight(w));
  }
  rs.all_roots = rs.positive_roots;
  for (const auto& r : rs.positive_roots) rs.all_roots.push_back(-r);

  rs.rho = Weight(IntVec(n, 1));

  // Highest root: the unique dominant long root.
  const Rat two(2);
  for (const auto& r : rs.positive_roots) {
    if (r.dominant() && rs.norm2(r) == two) {
      if (rs.highest_root.rank() != 0) throw std::runtime_error("highest root not unique");
      rs.highest_root = r;
    }
  }
  if (rs.highest_root.rank() == 0) throw std::runtime_error("highest root not found");

  Rat g = Rat(1) + rs.ip(rs.highest_root, rs.rho);
  if (!is_integral(g)) throw std::runtime_error("non-integral dual coxeter number");
  rs.dual_coxeter = g.numerator();

  // Coroots: 2a/<a,a>; integral in fundamental-weight coordinates.
  auto coroot_of = [&](const Weight& r) {
    Rat nn = rs.norm2(r);
    RatVec cv = (Rat(2) / nn) * to_rat(r);
    auto w = to_weight(cv);
    if (!w) throw std::runtime_error("non-integral coroot");
    return *w;
  };
  for (const auto& r : rs.positive_roots) rs.coroots.push_back(coroot_of(r));
  for (const auto& r : rs.positive_roots) rs.coroots.push_back(-coroot_of(r));
  for (int i = 0; i < n; ++i) rs.simple_coroots.push_back(coroot_of(rs.simple_roots[i]));

  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rs.fundamental_weights.push_back(Weight(e));
  }

  rs.weyl_order = weyl_order_of(label);

  std::vector<IntVec> gcols;
  for (const auto& cr : rs.simple_coroots) gcols.push_back(cr.c);
  rs.det_index = abs_det(gcols);

  return rs;
}

Rat inner_product(const RootSystem& rs, const RatVec& x, const RatVec& y) {
  if (static_cast<int>(x.size()) != rs.rank || static_cast<int>(y.size()) != rs.rank)
    throw std::invalid_argument("inner_product: rank mismatch");
  return rs.ip(x, y);
}

Rat inner_product(const RootSystem& rs, const Weight& x, const Weight& y) {
  if (static_cast<int>(x.rank()) != rs.rank || static_cast<int>(y.rank()) != rs.rank)
    throw std::invalid_argument("inner_product: rank mismatch");
  return rs.ip(x, y);
}

}  // namespace tkinv
