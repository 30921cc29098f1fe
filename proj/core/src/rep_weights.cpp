// rep_weights.cpp -- Freudenthal multiplicities, characters, Adams decomposition.

#include "tkinv/rep_weights.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <stdexcept>

namespace tkinv {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda, const char* who) {
  if (static_cast<int>(lambda.rank()) != rs.rank)
    throw std::invalid_argument(std::string(who) + ": rank mismatch");
  if (!lambda.dominant())
    throw std::invalid_argument(std::string(who) + ": weight " + to_string(lambda) +
                                " is not dominant");
}

// All dominant integral mu <= lambda in the dominance order (lambda - mu a
// nonnegative integer combination of simple roots).  Uses the norm bound
// <mu,mu> <= <lambda,lambda> to cut the coordinate box.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  const int n = rs.rank;
  const Rat lam2 = rs.ip(lambda, lambda);
  IntVec bound(n);
  for (int i = 0; i < n; ++i) {
    double b = std::sqrt(to_double(lam2) * to_double(rs.ip(rs.simple_coroots[i], rs.simple_coroots[i])));
    bound[i] = static_cast<Int>(b) + 1;
  }
  // lambda - mu must lie in the root lattice: precompute A^{-1}(lambda - mu)
  // via exact elimination each time (rank <= 8, tiny).
  auto in_positive_root_cone = [&](const Weight& diff) {
    // solve cartan * c = diff over rationals
    const int m = rs.rank;
    std::vector<RatVec> a(m, RatVec(m));
    RatVec rhs(m);
    for (int i = 0; i < m; ++i) {
      rhs[i] = Rat(diff.c[i]);
      for (int j = 0; j < m; ++j) a[i][j] = Rat(rs.cartan.at(i, j));
    }
    for (int col = 0; col < m; ++col) {
      int piv = -1;
      for (int r = col; r < m; ++r)
        if (a[r][col] != Rat(0)) {
          piv = r;
          break;
        }
      std::swap(a[piv], a[col]);
      std::swap(rhs[piv], rhs[col]);
      Rat d = a[col][col];
      for (int j = 0; j < m; ++j) a[col][j] /= d;
      rhs[col] /= d;
      for (int r = 0; r < m; ++r) {
        if (r == col) continue;
        Rat f = a[r][col];
        if (f == Rat(0)) continue;
        for (int j = 0; j < m; ++j) a[r][j] -= f * a[col][j];
        rhs[r] -= f * rhs[col];
      }
    }
    for (int i = 0; i < m; ++i)
      if (!is_integral(rhs[i]) || rhs[i] < Rat(0)) return false;
    return true;
  };

  std::vector<Weight> out;
  IntVec cur(n, 0);
  std::function<void(int)> rec = [&](int d) {
    if (d == n) {
      Weight mu(cur);
      if (rs.ip(mu, mu) <= lam2 && in_positive_root_cone(lambda - mu)) out.push_back(mu);
      return;
    }
    for (Int v = 0; v <= bound[d]; ++v) {
      cur[d] = v;
      rec(d + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

Int dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "dimension");
  Weight lr = lambda + rs.rho;
  Rat prod(1);
  for (const auto& alpha : rs.positive_roots)
    prod *= rs.ip(lr, alpha) / rs.ip(rs.rho, alpha);
  if (!is_integral(prod)) throw std::runtime_error("dimension: non-integral result");
  return prod.numerator();
}

MultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                        const RepOptions& opts) {
  require_dominant(rs, lambda, "weight_multiplicities");
  const Int dim = dimension(rs, lambda);
  if (dim > opts.dim_cap)
    throw std::runtime_error("weight_multiplicities: dim " + std::to_string(dim) +
                             " exceeds cap " + std::to_string(opts.dim_cap));

  auto cache_name = [&]() {
    std::string s = "mult_" + to_string(rs.label);
    for (Int c : lambda.c) s += "_" + std::to_string(c);
    return s + ".json";
  };
  if (opts.cache_dir) {
    std::filesystem::path p = *opts.cache_dir / cache_name();
    if (std::filesystem::exists(p)) {
      std::ifstream in(p);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return table_from_json(rs, text);
    }
  }

  // Dominant part by Freudenthal, processed by decreasing <mu+rho, mu+rho>.
  auto dominants = dominant_weights_below(rs, lambda);
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    Rat na = rs.ip(a + rs.rho, a + rs.rho), nb = rs.ip(b + rs.rho, b + rs.rho);
    if (na != nb) return nb < na;
    return a < b;
  });

  const Rat lam2 = rs.ip(lambda, lambda);
  const Rat lr2 = rs.ip(lambda + rs.rho, lambda + rs.rho);
  std::map<Weight, Int> dom_mult;
  for (const auto& mu : dominants) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    // 2 sum_{alpha>0} sum_{t>=1} m(mu + t alpha) <mu + t alpha, alpha>
    Rat acc(0);
    for (const auto& alpha : rs.positive_roots) {
      for (Int t = 1;; ++t) {
        Weight nu = mu + t * alpha;
        Rat nu2 = rs.ip(nu, nu);
        if (nu2 > lam2) {
          // the norm grows monotonically once past the vertex; stop when beyond
          if (rs.ip(nu, alpha) > Rat(0)) break;
          continue;
        }
        Weight dom = rs.dominant_fold(nu);
        auto it = dom_mult.find(dom);
        if (it != dom_mult.end() && it->second != 0)
          acc += Rat(it->second) * rs.ip(nu, alpha);
      }
    }
    Rat denom = lr2 - rs.ip(mu + rs.rho, mu + rs.rho);
    if (denom <= Rat(0)) throw std::runtime_error("freudenthal: bad recursion order");
    Rat m = Rat(2) * acc / denom;
    if (!is_integral(m)) throw std::runtime_error("freudenthal: non-integral multiplicity");
    if (m.numerator() > 0) dom_mult[mu] = m.numerator();
  }

  // Weyl-orbit fill.
  MultiplicityTable table;
  table.lambda = lambda;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    std::vector<Weight> orbit{mu};
    std::set<Weight> seen{mu};
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      Weight cur = orbit[h];
      for (int i = 0; i < rs.rank; ++i) {
        Weight nx = rs.reflect_simple(i, cur);
        if (seen.insert(nx).second) orbit.push_back(nx);
      }
    }
    for (const auto& w : orbit) table.entries[w] = m;
  }

  Int total = 0;
  Rat nb(0);
  for (const auto& [mu, m] : table.entries) {
    total += m;
    nb = std::max(nb, rs.ip(mu + rs.rho, mu + rs.rho));
  }
  table.dim = total;
  table.norm_bound = nb;
  if (total != dim)
    throw std::runtime_error("weight_multiplicities: table sum " + std::to_string(total) +
                             " != dim " + std::to_string(dim));

  if (opts.cache_dir) {
    std::filesystem::create_directories(*opts.cache_dir);
    std::filesystem::path p = *opts.cache_dir / cache_name();
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << table_to_json(rs.label, table);
    }
    std::filesystem::rename(tmp, p);  // atomic publish
  }
  return table;
}

std::complex<double> character_eval(const RootSystem& rs, const MultiplicityTable& table,
                                    const RatVec& b) {
  // Pairing orientation matches the S-matrix exponent, so that the ratio
  // S_{lambda eta} / S_{0 eta} is the character at (eta + rho)/k on the nose.
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [mu, m] : table.entries) {
    Rat phase = mod_reduce(rs.ip(mu, b), Rat(1));
    double t = -2.0 * M_PI * to_double(phase);
    acc += static_cast<double>(m) * std::complex<double>(std::cos(t), std::sin(t));
  }
  return acc;
}

std::complex<double> character_eval(const RootSystem& rs, const Weight& lambda, const RatVec& b) {
  return character_eval(rs, weight_multiplicities(rs, lambda), b);
}

Int mbar_eval(const RootSystem& rs, const MultiplicityTable& table, const RatVec& x) {
  (void)rs;
  auto w = to_weight(x);
  if (!w) return 0;
  return table.at(*w);
}

std::map<Weight, Int> adams_decompose(const RootSystem& rs, const Weight& lambda, Int p,
                                      const RepOptions& opts) {
  require_dominant(rs, lambda, "adams_decompose");
  if (p < 1) throw std::invalid_argument("adams_decompose: p must be >= 1");
  auto base = weight_multiplicities(rs, lambda, opts);

  // formal exponent map of chi_lambda(p b): scale every exponent by p
  std::map<Weight, Int> f;
  for (const auto& [mu, m] : base.entries) f[p * mu] = m;

  std::map<Weight, Int> out;
  std::size_t guard = 0;
  while (!f.empty()) {
    if (++guard > 100000) throw std::runtime_error("adams_decompose: peeling did not terminate");
    // maximal remaining term: largest <mu+rho, mu+rho>, lexicographic tie-break
    auto best = f.begin();
    Rat bestn = rs.ip(best->first + rs.rho, best->first + rs.rho);
    for (auto it = std::next(f.begin()); it != f.end(); ++it) {
      Rat n = rs.ip(it->first + rs.rho, it->first + rs.rho);
      if (bestn < n || (n == bestn && it->first < best->first)) {
        best = it;
        bestn = n;
      }
    }
    Weight top = best->first;
    Int coeff = best->second;
    if (!top.dominant())
      throw std::runtime_error("adams_decompose: maximal term not dominant");
    out[top] = coeff;
    auto chi = weight_multiplicities(rs, top, opts);
    for (const auto& [mu, m] : chi.entries) {
      auto it = f.try_emplace(mu, 0).first;
      it->second -= coeff * m;
      if (it->second == 0) f.erase(it);
    }
  }
  return out;
}

std::string table_to_json(const CartanLabel& label, const MultiplicityTable& table) {
  nlohmann::ordered_json j;
  j["algebra"] = to_string(label);
  j["lambda"] = table.lambda.c;
  nlohmann::ordered_json entries = nlohmann::json::array();
  for (const auto& [mu, m] : table.entries)  // std::map order: deterministic bytes
    entries.push_back({mu.c, m});
  j["entries"] = std::move(entries);
  j["dim"] = table.dim;
  return j.dump(2) + "\n";
}

MultiplicityTable table_from_json(const RootSystem& rs, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("algebra").get<std::string>() != to_string(rs.label))
    throw std::runtime_error("table_from_json: algebra mismatch");
  MultiplicityTable t;
  t.lambda = Weight(j.at("lambda").get<IntVec>());
  for (const auto& e : j.at("entries"))
    t.entries[Weight(e.at(0).get<IntVec>())] = e.at(1).get<Int>();
  t.dim = j.at("dim").get<Int>();
  Rat nb(0);
  for (const auto& [mu, m] : t.entries) nb = std::max(nb, rs.ip(mu + rs.rho, mu + rs.rho));
  t.norm_bound = nb;
  return t;
}

}  // namespace tkinv
