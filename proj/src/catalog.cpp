#include "quaplectic/catalog.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace quap {

namespace {

std::string tag(const std::string& head, int a) { return head + std::to_string(a); }
std::string tag2(const std::string& head, int a, int b) {
  return head + std::to_string(a) + std::to_string(b);
}

LieAlgebra make_poincare(int n) {
  const int m = n + 1;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> mp;  // index -> (a, b), a < b
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      mp.emplace_back(a, b);
      names.push_back(tag2("M", a, b));
    }
  const int nm = static_cast<int>(mp.size());
  for (int a = 0; a < m; ++a) names.push_back(tag("P", a));
  auto midx = [&](int a, int b) {
    for (int i = 0; i < nm; ++i)
      if (mp[i].first == a && mp[i].second == b) return i;
    throw std::logic_error("bad rotation index");
  };
  std::vector<BracketTerm> terms;
  auto add_m = [&](int i, int j, int a, int b, double co) {
    if (a == b || co == 0.0) return;
    if (a > b) { std::swap(a, b); co = -co; }
    terms.push_back({i, j, midx(a, b), co});
  };
  auto eta = [&](int a) { return a == 0 ? -1.0 : 1.0; };
  for (int i = 0; i < nm; ++i)
    for (int j = i + 1; j < nm; ++j) {
      const auto [a, b] = mp[i];
      const auto [c, d] = mp[j];
      if (b == c) add_m(i, j, a, d, eta(b));
      if (a == c) add_m(i, j, b, d, -eta(a));
      if (b == d) add_m(i, j, a, c, -eta(b));
      if (a == d) add_m(i, j, b, c, eta(a));
    }
  for (int i = 0; i < nm; ++i) {
    const auto [a, b] = mp[i];
    for (int c = 0; c < m; ++c) {
      if (b == c) terms.push_back({i, nm + c, nm + a, eta(b)});
      if (a == c) terms.push_back({i, nm + c, nm + b, -eta(a)});
    }
  }
  return LieAlgebra(nm + m, names, terms);
}

LieAlgebra make_heisenberg(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(tag("Zp", i));
  for (int i = 0; i < n; ++i) names.push_back(tag("Zm", i));
  names.push_back("I");
  std::vector<BracketTerm> terms;
  for (int i = 0; i < n; ++i) terms.push_back({i, n + i, 2 * n, 1.0});
  return LieAlgebra(2 * n + 1, names, terms);
}

LieAlgebra make_hamilton() {
  return LieAlgebra(3, {"V", "F", "R"}, {{0, 1, 2, 2.0}});
}

LieAlgebra make_quaplectic(int n) {
  const int m = n + 1;
  std::vector<std::string> names;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) names.push_back(tag2("A", a, b));
  for (int a = 0; a < m; ++a) names.push_back(tag("Zp", a));
  for (int a = 0; a < m; ++a) names.push_back(tag("Zm", a));
  names.push_back("I");
  const int za = m * m, zb = za + m, ci = zb + m;
  auto aidx = [&](int a, int b) { return a * m + b; };
  auto eta = [&](int a) { return a == 0 ? -1.0 : 1.0; };
  std::vector<BracketTerm> terms;
  // [A_ab, A_cd] = eta_bc A_ad - eta_ad A_cb
  for (int i = 0; i < m * m; ++i)
    for (int j = i + 1; j < m * m; ++j) {
      const int a = i / m, b = i % m, c = j / m, d = j % m;
      if (b == c) terms.push_back({i, j, aidx(a, d), eta(b)});
      if (a == d) terms.push_back({i, j, aidx(c, b), -eta(a)});
    }
  // [A_ab, Zp_c] = -eta_ac Zp_b ; [A_ab, Zm_c] = eta_bc Zm_a
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      terms.push_back({aidx(a, b), za + a, za + b, -eta(a)});
      terms.push_back({aidx(a, b), zb + b, zb + a, eta(b)});
    }
  // [Zp_a, Zm_b] = eta_ab I
  for (int a = 0; a < m; ++a) terms.push_back({za + a, zb + a, ci, eta(a)});
  return LieAlgebra(ci + 1, names, terms);
}

LieAlgebra make_inhom_unitary(int n) {
  const int m = n + 1;
  const int d = 2 * m + 1;  // realified translations plus the affine slot
  std::vector<std::string> names;
  std::vector<Eigen::MatrixXcd> gens;
  auto eta = [&](int a) { return a == 0 ? -1.0 : 1.0; };
  auto realify = [&](const Eigen::MatrixXcd& x) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
    g.block(0, 0, m, m) = x.real().cast<std::complex<double>>();
    g.block(m, m, m, m) = x.real().cast<std::complex<double>>();
    g.block(0, m, m, m) = (-x.imag()).cast<std::complex<double>>();
    g.block(m, 0, m, m) = x.imag().cast<std::complex<double>>();
    return g;
  };
  const std::complex<double> ii(0.0, 1.0);
  for (int j = 0; j < m; ++j) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(m, m);
    x(j, j) = ii * eta(j);
    names.push_back(tag("K", j));
    gens.push_back(realify(x));
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(m, m);
      x(j, k) = eta(j);
      x(k, j) = -eta(k);
      names.push_back(tag2("J", j, k));
      gens.push_back(realify(x));
    }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(m, m);
      x(j, k) = ii * eta(j);
      x(k, j) = ii * eta(k);
      names.push_back(tag2("B", j, k));
      gens.push_back(realify(x));
    }
  for (int i = 0; i < 2 * m; ++i) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
    g(i, 2 * m) = 1.0;
    names.push_back(tag(i < m ? "Tr" : "Ti", i % m));
    gens.push_back(g);
  }
  return algebra_from_matrices(names, gens);
}

LieAlgebra make_unitary_split(int n) {
  const int m = n + 1;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> lp, sp;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      lp.emplace_back(a, b);
      names.push_back(tag2("L", a, b));
    }
  const int nl = static_cast<int>(lp.size());
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      sp.emplace_back(a, b);
      names.push_back(tag2("S", a, b));
    }
  auto lidx = [&](int a, int b) {
    for (int i = 0; i < nl; ++i)
      if (lp[i].first == a && lp[i].second == b) return i;
    throw std::logic_error("bad L index");
  };
  auto sidx = [&](int a, int b) {
    for (size_t i = 0; i < sp.size(); ++i)
      if (sp[i].first == a && sp[i].second == b) return nl + static_cast<int>(i);
    throw std::logic_error("bad S index");
  };
  const int dim = nl + static_cast<int>(sp.size());
  auto eta = [&](int a) { return a == 0 ? -1.0 : 1.0; };
  // Coefficient accumulators per ordered generator pair keep the closure rule
  // happy: each unordered pair is emitted once with summed targets.
  std::vector<BracketTerm> terms;
  std::vector<double> acc(dim, 0.0);
  auto add_l = [&](int a, int b, double co) {
    if (a == b) return;
    if (a > b) { std::swap(a, b); co = -co; }
    acc[lidx(a, b)] += co;
  };
  auto add_s = [&](int a, int b, double co) {
    if (a > b) std::swap(a, b);
    acc[sidx(a, b)] += co;
  };
  auto flush = [&](int i, int j) {
    for (int g = 0; g < dim; ++g)
      if (acc[g] != 0.0) {
        terms.push_back({i, j, g, acc[g]});
        acc[g] = 0.0;
      }
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const bool il = i < nl, jl = j < nl;
      const auto [a, b] = il ? lp[i] : sp[i - nl];
      const auto [c, d] = jl ? lp[j] : sp[j - nl];
      if (il && jl) {
        add_l(a, d, eta(b) * (b == c));
        add_l(b, d, -eta(a) * (a == c));
        add_l(b, c, eta(a) * (a == d));
        add_l(a, c, -eta(b) * (b == d));
      } else if (il && !jl) {
        add_s(a, d, eta(b) * (b == c));
        add_s(a, c, eta(b) * (b == d));
        add_s(b, d, -eta(a) * (a == c));
        add_s(b, c, -eta(a) * (a == d));
      } else if (!il && jl) {
        // [S_ab, L_cd] = -[L_cd, S_ab]
        add_s(c, b, -eta(d) * (d == a));
        add_s(c, a, -eta(d) * (d == b));
        add_s(d, b, eta(c) * (c == a));
        add_s(d, a, eta(c) * (c == b));
      } else {
        add_l(a, d, eta(b) * (b == c));
        add_l(a, c, eta(b) * (b == d));
        add_l(b, d, eta(a) * (a == c));
        add_l(b, c, eta(a) * (a == d));
      }
      flush(i, j);
    }
  return LieAlgebra(dim, names, terms);
}

struct ParsedName {
  std::string family;
  std::vector<int> args;
};

ParsedName parse_name(const std::string& raw) {
  ParsedName out;
  for (char ch : raw) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      if (!out.args.empty())
        throw std::invalid_argument("unknown algebra: " + raw);
      out.family += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      out.args.push_back(ch - '0');
    } else if (ch == '(' || ch == ')' || ch == ',') {
      continue;  // digits are single-character here; separators are cosmetic
    } else {
      throw std::invalid_argument("unknown algebra: " + raw);
    }
  }
  return out;
}

}  // namespace

LieAlgebra builtin_algebra(const std::string& name) {
  const ParsedName p = parse_name(name);
  auto signature_arg = [&]() {
    if (p.args.size() == 2 && p.args[0] == 1 && p.args[1] >= 1) return p.args[1];
    throw std::invalid_argument("algebra " + p.family +
                                " expects signature (1, n) with 1 <= n <= 9");
  };
  if (p.family == "poincare") return make_poincare(signature_arg());
  if (p.family == "heisenberg") {
    if (p.args.size() != 1 || p.args[0] < 1)
      throw std::invalid_argument("heisenberg expects a mode count 1 <= n <= 9");
    return make_heisenberg(p.args[0]);
  }
  if (p.family == "hamilton") {
    if (!p.args.empty() && !(p.args.size() == 1 && p.args[0] == 1))
      throw std::invalid_argument("hamilton is only available in one dimension");
    return make_hamilton();
  }
  if (p.family == "quaplectic") return make_quaplectic(signature_arg());
  if (p.family == "inhom_unitary") return make_inhom_unitary(signature_arg());
  if (p.family == "unitary_split") return make_unitary_split(signature_arg());
  throw std::invalid_argument("unknown algebra: " + name);
}

}  // namespace quap
