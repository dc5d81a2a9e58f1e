#include "superfock/superalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace superfock {

namespace {
int pow_sign(int e) { return (e & 1) ? -1 : 1; }

GaussianRational parse_gaussian(const std::string& tok) {
  // value := rational | rational 'i' | 'i' | '-i'
  if (tok == "i") return GaussianRational::i();
  if (tok == "-i") return -GaussianRational::i();
  if (!tok.empty() && tok.back() == 'i') {
    std::string head = tok.substr(0, tok.size() - 1);
    if (!head.empty() && head.back() == '*') head.pop_back();
    return GaussianRational(Rational(0), Rational::from_string(head));
  }
  return GaussianRational(Rational::from_string(tok));
}
}  // namespace

int FiniteSuperalgebra::index_of(const std::string& name) const {
  for (int a = 0; a < dim(); ++a)
    if (names[a] == name) return a;
  throw std::out_of_range("unknown generator '" + name + "'");
}

FiniteSuperalgebra FiniteSuperalgebra::u1() {
  FiniteSuperalgebra g;
  g.names = {"J"};
  g.parities = {0};
  g.f.assign(1, std::vector<std::vector<GaussianRational>>(1, std::vector<GaussianRational>(1)));
  g.metric.assign(1, std::vector<GaussianRational>(1, GaussianRational(1)));
  return g;
}

FiniteSuperalgebra FiniteSuperalgebra::gl11() {
  // Basis E^mu_nu, mu,nu in {1,2}, deg(1)=0, deg(2)=1; generator parity
  // deg(mu)+deg(nu).
  FiniteSuperalgebra g;
  auto deg = [](int mu) { return mu == 2 ? 1 : 0; };
  std::vector<std::pair<int, int>> basis = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (auto [mu, nu] : basis) {
    g.names.push_back("E" + std::to_string(mu) + "_" + std::to_string(nu));
    g.parities.push_back((deg(mu) + deg(nu)) & 1);
  }
  const int d = 4;
  g.f.assign(d, std::vector<std::vector<GaussianRational>>(d, std::vector<GaussianRational>(d)));
  g.metric.assign(d, std::vector<GaussianRational>(d));
  auto idx = [&](int mu, int nu) { return (mu - 1) * 2 + (nu - 1); };
  for (auto [mu, nu] : basis) {
    for (auto [sg, ta] : basis) {
      int a = idx(mu, nu), b = idx(sg, ta);
      // [E^mu_nu, E^sg_ta] = delta^sg_nu E^mu_ta
      //   - (-)^{(mu+nu)(sg+ta)} delta^mu_ta E^sg_nu  =  i f^{ab}_c J^c
      if (sg == nu) g.f[a][b][idx(mu, ta)] += -GaussianRational::i();
      if (mu == ta) {
        int s = pow_sign((deg(mu) + deg(nu)) * (deg(sg) + deg(ta)));
        GaussianRational v = -GaussianRational::i();
        if (s > 0) v = -v;
        g.f[a][b][idx(sg, nu)] += v;
      }
      // str(E^mu_nu E^sg_ta) = (-)^mu delta^sg_nu delta^mu_ta
      if (sg == nu && mu == ta)
        g.metric[a][b] = GaussianRational(pow_sign(deg(mu)));
    }
  }
  return g;
}

AlgebraReport verify_finite_superalgebra(const FiniteSuperalgebra& g) {
  AlgebraReport rep;
  const int d = g.dim();
  auto note = [&](const std::string& id, std::vector<int> idx, const std::string& detail) {
    rep.ok = false;
    rep.violations.push_back({id, std::move(idx), detail});
  };
  auto par = [&](int a) { return g.parities[a]; };

  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        if (!g.f[a][b][c].is_zero() && ((par(a) + par(b) + par(c)) & 1))
          note("parity-selection", {a, b, c}, "f nonzero with odd total parity");
        GaussianRational skew = g.f[b][a][c];
        GaussianRational want = g.f[a][b][c];
        if (pow_sign(par(a) * par(b) + 1) < 0) want = -want;
        if (skew != want)
          note("graded-antisymmetry", {a, b, c},
               "f^{ba}_c = " + skew.str() + ", expected " + want.str());
      }
      GaussianRational ms = g.metric[b][a];
      GaussianRational mw = g.metric[a][b];
      if (pow_sign(par(a) * par(b)) < 0) mw = -mw;
      if (ms != mw) note("metric-symmetry", {a, b}, "delta^{ba} mismatch");
      if (!g.metric[a][b].is_zero() && ((par(a) + par(b)) & 1))
        note("metric-parity", {a, b}, "metric nonzero with odd total parity");
    }
  }

  // Super-Jacobi on structure constants.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        for (int e = 0; e < d; ++e) {
          GaussianRational acc;
          for (int dd = 0; dd < d; ++dd) {
            GaussianRational t1 = g.f[b][c][dd] * g.f[a][dd][e];
            if (pow_sign(par(a) * par(c)) < 0) t1 = -t1;
            GaussianRational t2 = g.f[c][a][dd] * g.f[b][dd][e];
            if (pow_sign(par(a) * par(b)) < 0) t2 = -t2;
            GaussianRational t3 = g.f[a][b][dd] * g.f[c][dd][e];
            if (pow_sign(par(b) * par(c)) < 0) t3 = -t3;
            acc += t1 + t2 + t3;
          }
          if (!acc.is_zero())
            note("super-jacobi", {a, b, c, e}, "residual " + acc.str());
        }
      }
    }
  }

  // Killing invariance: (-)^{ac} delta^{ad} f^{bc}_d = (-)^{ab} delta^{bd} f^{ca}_d
  //                    = (-)^{bc} delta^{cd} f^{ab}_d.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        GaussianRational e1, e2, e3;
        for (int dd = 0; dd < d; ++dd) {
          e1 += g.metric[a][dd] * g.f[b][c][dd];
          e2 += g.metric[b][dd] * g.f[c][a][dd];
          e3 += g.metric[c][dd] * g.f[a][b][dd];
        }
        if (pow_sign(par(a) * par(c)) < 0) e1 = -e1;
        if (pow_sign(par(a) * par(b)) < 0) e2 = -e2;
        if (pow_sign(par(b) * par(c)) < 0) e3 = -e3;
        if (e1 != e2 || e2 != e3)
          note("killing-invariance", {a, b, c},
               e1.str() + " / " + e2.str() + " / " + e3.str());
      }
    }
  }
  return rep;
}

FiniteSuperalgebra parse_algebra_file(const std::string& text) {
  FiniteSuperalgebra g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int dim = -1;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("algebra file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (!(ls >> dim) || dim <= 0) fail("bad dimension");
      g.names.resize(dim);
      g.parities.assign(dim, 0);
      for (int a = 0; a < dim; ++a) g.names[a] = "J" + std::to_string(a + 1);
      g.f.assign(dim, std::vector<std::vector<GaussianRational>>(
                          dim, std::vector<GaussianRational>(dim)));
      g.metric.assign(dim, std::vector<GaussianRational>(dim));
    } else if (kw == "name") {
      int a; std::string nm;
      if (dim < 0 || !(ls >> a >> nm) || a < 1 || a > dim) fail("bad name line");
      g.names[a - 1] = nm;
    } else if (kw == "parity") {
      int a; std::string par;
      if (dim < 0 || !(ls >> a >> par) || a < 1 || a > dim) fail("bad parity line");
      if (par == "odd" || par == "1") g.parities[a - 1] = 1;
      else if (par == "even" || par == "0") g.parities[a - 1] = 0;
      else fail("parity must be even/odd");
    } else if (kw == "f" || kw == "metric") {
      if (dim < 0) fail("dim must come first");
      int a, b, c = 0;
      std::string eq, val;
      bool is_f = kw == "f";
      bool ok = is_f ? bool(ls >> a >> b >> c >> eq >> val) : bool(ls >> a >> b >> eq >> val);
      if (!ok || eq != "=") fail("expected '<indices> = <value>'");
      if (a < 1 || a > dim || b < 1 || b > dim || (is_f && (c < 1 || c > dim)))
        fail("index out of range");
      if (is_f) g.f[a - 1][b - 1][c - 1] = parse_gaussian(val);
      else g.metric[a - 1][b - 1] = parse_gaussian(val);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (dim < 0) throw std::invalid_argument("algebra file: missing dim line");
  return g;
}

}  // namespace superfock
