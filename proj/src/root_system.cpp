#include "rootposet/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>

namespace rootposet {

std::string RootSystemSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool RootSystemSpec::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

void RootSystemSpec::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw InvalidSpec("rank " + std::to_string(rank) + " out of range for family " +
                             std::string(1, static_cast<char>(family)));
}

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2) throw InvalidSpec("cannot parse type '" + text + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw InvalidSpec("unknown family '" + std::string(1, text[0]) + "'");
  int rank = 0;
  for (size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw InvalidSpec("cannot parse type '" + text + "'");
    rank = rank * 10 + (text[k] - '0');
    if (rank > 512) throw InvalidSpec("rank out of range in '" + text + "'");
  }
  RootSystemSpec spec{static_cast<Family>(f), rank};
  spec.validate();
  return spec;
}

int Root::height() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0);
}

std::vector<int> Root::support() const {
  std::vector<int> s;
  for (int i = 1; i <= rank(); ++i)
    if (coeff(i) != 0) s.push_back(i);
  return s;
}

bool canonical_less(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs() < b.coeffs();
}

namespace {

// Dynkin diagram edges per family. The exceptional chains
// carry the branch node at the end: E6 = 1-2-3-4-5 with 6 on node 3,
// E7 = 1-..-6 with 7 on node 4, E8 = 1-..-7 with 8 on node 5.
std::vector<std::pair<int, int>> family_edges(const RootSystemSpec& spec) {
  std::vector<std::pair<int, int>> edges;
  int n = spec.rank;
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (spec.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      chain(n);
      break;
    case Family::D:
      chain(n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      chain(n - 1);
      edges.emplace_back(n == 6 ? 3 : (n == 7 ? 4 : 5), n);
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Squared lengths of the simple roots, normalized to (theta, theta) = 2.
std::vector<Rational> family_norms(const RootSystemSpec& spec) {
  int n = spec.rank;
  std::vector<Rational> norm(static_cast<size_t>(n), Rational(2));
  switch (spec.family) {
    case Family::B:
      norm[static_cast<size_t>(n) - 1] = Rational(1);
      break;
    case Family::C:
      for (int i = 0; i < n - 1; ++i) norm[static_cast<size_t>(i)] = Rational(1);
      break;
    case Family::F:
      norm[0] = norm[1] = Rational(1);  // 1-2 short, 3-4 long
      break;
    case Family::G:
      norm[0] = Rational(2, 3);  // alpha_1 short
      break;
    default:
      break;
  }
  return norm;
}

}  // namespace

void RootSystem::build_family_data() {
  int n = rank();
  edges_ = family_edges(spec_);
  simple_norm2_ = family_norms(spec_);
  long_mask_.assign(static_cast<size_t>(n), false);
  for (int i = 1; i <= n; ++i) long_mask_[idx(i)] = simple_norm2_[idx(i)] == Rational(2);

  // Off-diagonal inner products: adjacent simples pair to -max(norm_i,norm_j)/2.
  std::vector<std::vector<Rational>> gram(static_cast<size_t>(n),
                                          std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) gram[idx(i)][idx(i)] = simple_norm2_[idx(i)];
  for (auto [i, j] : edges_) {
    Rational p = simple_norm2_[idx(i)] > simple_norm2_[idx(j)] ? simple_norm2_[idx(i)]
                                                               : simple_norm2_[idx(j)];
    gram[idx(i)][idx(j)] = gram[idx(j)][idx(i)] = -(p / 2);
  }
  cartan_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      cartan_[idx(i)][idx(j)] =
          (Rational(2) * gram[idx(i)][idx(j)] / simple_norm2_[idx(j)]).as_integer();

  // Pi_l must be connected.
  auto longs = long_simples();
  assert(!longs.empty());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::vector<int> stack{longs.front()};
  seen[static_cast<size_t>(longs.front())] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : longs)
      if (!seen[static_cast<size_t>(j)] && adjacent(i, j)) {
        seen[static_cast<size_t>(j)] = true;
        stack.push_back(j);
      }
  }
  for (int j : longs) assert(seen[static_cast<size_t>(j)]);
}

bool RootSystem::adjacent(int i, int j) const {
  if (i == j) return false;
  return cartan_[idx(i)][idx(j)] != 0;
}

std::vector<int> RootSystem::long_simples() const {
  std::vector<int> out;
  for (int i = 1; i <= rank(); ++i)
    if (long_mask_[idx(i)]) out.push_back(i);
  return out;
}

Root RootSystem::simple_root(int i) const {
  Coeffs c(static_cast<size_t>(rank()), 0);
  c[idx(i)] = 1;
  return Root(c);
}

int RootSystem::coroot_pairing_simple(const Coeffs& x, int i) const {
  int v = 0;
  for (int j = 1; j <= rank(); ++j) v += x[idx(j)] * cartan_[idx(j)][idx(i)];
  return v;
}

int RootSystem::theta_covector_pairing(const Coeffs& x) const {
  int v = 0;
  for (int j = 1; j <= rank(); ++j) v += x[idx(j)] * theta_covector_[idx(j)];
  return v;
}

void RootSystem::close_roots() {
  int n = rank();
  std::map<Coeffs, int> found;
  std::vector<Coeffs> by_insertion;
  std::vector<std::vector<size_t>> layers;  // indices into by_insertion per height

  auto insert = [&](const Coeffs& c, int h) {
    if (found.count(c)) return;
    found.emplace(c, static_cast<int>(by_insertion.size()));
    by_insertion.push_back(c);
    while (static_cast<int>(layers.size()) < h) layers.emplace_back();
    layers[static_cast<size_t>(h) - 1].push_back(by_insertion.size() - 1);
  };

  for (int i = 1; i <= n; ++i) insert(simple_root(i).coeffs(), 1);

  for (size_t h = 0; h < layers.size(); ++h) {
    for (size_t pos = 0; pos < layers[h].size(); ++pos) {
      Coeffs mu = by_insertion[layers[h][pos]];
      for (int i = 1; i <= n; ++i) {
        // alpha_i-string through mu; skip mu = alpha_i (2 alpha_i is never a root)
        bool is_simple_i = false;
        if (h == 0) {
          is_simple_i = mu[idx(i)] == 1;
        }
        if (is_simple_i) continue;
        int p = 0;
        Coeffs down = mu;
        for (;;) {
          down[idx(i)] -= 1;
          if (down[idx(i)] < 0 || !found.count(down)) break;
          ++p;
        }
        int q = p - coroot_pairing_simple(mu, i);
        if (q > 0) {
          Coeffs up = mu;
          up[idx(i)] += 1;
          insert(up, static_cast<int>(h) + 2);
        }
      }
    }
  }

  roots_.reserve(by_insertion.size());
  for (auto& c : by_insertion) roots_.push_back(Root(std::move(c)));
  std::sort(roots_.begin(), roots_.end(), canonical_less);
  for (RootId id = 0; id < static_cast<RootId>(roots_.size()); ++id)
    index_.emplace(roots_[static_cast<size_t>(id)].coeffs(), id);

  // theta: the unique maximal element, so every root is coefficientwise below it.
  theta_id_ = static_cast<RootId>(roots_.size()) - 1;
  const Coeffs& t = theta().coeffs();
  for (const Root& r : roots_)
    for (int i = 1; i <= n; ++i) assert(r.coeff(i) <= t[idx(i)]);
}

void RootSystem::build_tables() {
  int n = rank();
  size_t m = roots_.size();

  heights_.resize(m);
  root_norm2_.resize(m);
  root_long_.resize(m);
  for (size_t k = 0; k < m; ++k) {
    heights_[k] = roots_[k].height();
    root_norm2_[k] = inner_product(*this, roots_[k], roots_[k]);
    root_long_[k] = root_norm2_[k] == Rational(2);
  }
  assert(root_long_[static_cast<size_t>(theta_id_)]);

  theta_covector_.resize(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    Rational v = inner_product(*this, simple_root(j), theta());  // (theta,theta) = 2
    theta_covector_[idx(j)] = v.as_integer();
  }

  rho_pairing_.resize(m);
  theta_pairing_.resize(m);
  for (size_t k = 0; k < m; ++k) {
    std::vector<Rational> cv = coroot(*this, roots_[k]);
    Rational s(0);
    for (const Rational& d : cv) s += d;
    rho_pairing_[k] = s.as_integer();
    theta_pairing_[k] = theta_covector_pairing(roots_[k].coeffs());
  }
  for (int i = 1; i <= n; ++i) {
    auto id = find(simple_root(i).coeffs());
    assert(id && rho_pairing_[static_cast<size_t>(*id)] == 1);
  }

  sum_.assign(m * m, -1);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      Coeffs c = roots_[a].coeffs();
      for (int i = 1; i <= n; ++i) c[idx(i)] += roots_[b].coeff(i);
      if (auto id = find(c)) {
        sum_[a * m + b] = *id;
        sum_[b * m + a] = *id;
      }
    }

  up_step_.assign(m * static_cast<size_t>(n), -1);
  lower_covers_.resize(m);
  for (size_t a = 0; a < m; ++a)
    for (int i = 1; i <= n; ++i) {
      Coeffs up = roots_[a].coeffs();
      up[idx(i)] += 1;
      if (auto id = find(up)) up_step_[a * static_cast<size_t>(n) + idx(i)] = *id;
      Coeffs down = roots_[a].coeffs();
      down[idx(i)] -= 1;
      if (down[idx(i)] >= 0)
        if (auto id = find(down)) lower_covers_[a].push_back(*id);
    }
  for (auto& cv : lower_covers_) std::sort(cv.begin(), cv.end());
}

RootSystem::RootSystem(RootSystemSpec spec) : spec_(spec) {
  spec_.validate();
  build_family_data();
  close_roots();
  build_tables();
}

std::optional<RootId> RootSystem::find(const Coeffs& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootId RootSystem::id_of(const Root& r) const {
  auto id = find(r.coeffs());
  if (!id) throw RootNotInSystem("not a positive root of " + spec_.name());
  return *id;
}

RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem(spec); }

Rational inner_product(const RootSystem& rs, const Coeffs& x, const Coeffs& y) {
  int n = rs.rank();
  Rational total(0);
  for (int i = 1; i <= n; ++i) {
    if (x[static_cast<size_t>(i) - 1] == 0) continue;
    // (alpha_i, alpha_j) = <alpha_i, alpha_j^vee> * (alpha_j, alpha_j)/2
    for (int j = 1; j <= n; ++j) {
      if (y[static_cast<size_t>(j) - 1] == 0) continue;
      Rational aij = Rational(rs.cartan(i, j)) * rs.simple_norm2(j) / 2;
      total += Rational(x[static_cast<size_t>(i) - 1] * y[static_cast<size_t>(j) - 1]) * aij;
    }
  }
  return total;
}

Rational inner_product(const RootSystem& rs, const Root& x, const Root& y) {
  return inner_product(rs, x.coeffs(), y.coeffs());
}

std::vector<Rational> coroot(const RootSystem& rs, const Root& mu) {
  Rational n2 = inner_product(rs, mu, mu);
  std::vector<Rational> out(static_cast<size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i)
    out[static_cast<size_t>(i) - 1] = Rational(mu.coeff(i)) * rs.simple_norm2(i) / n2;
  return out;
}

bool is_leq(const RootSystem& rs, const Root& mu, const Root& nu) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (mu.coeff(i) > nu.coeff(i)) return false;
  return true;
}

std::vector<Root> covers(const RootSystem& rs, const Root& nu) {
  std::vector<Root> out;
  for (RootId id : rs.lower_cover_ids(rs.id_of(nu))) out.push_back(rs.root(id));
  return out;
}

std::optional<Root> meet(const RootSystem& rs, const Root& mu, const Root& nu) {
  rs.id_of(mu);
  rs.id_of(nu);
  bool overlap = false;
  Coeffs c(static_cast<size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i) {
    c[static_cast<size_t>(i) - 1] = std::min(mu.coeff(i), nu.coeff(i));
    if (mu.coeff(i) != 0 && nu.coeff(i) != 0) overlap = true;
  }
  if (!overlap) return std::nullopt;
  auto id = rs.find(c);
  if (!id) throw Error("meet of two positive roots failed to be a root");
  return rs.root(*id);
}

Root join(const RootSystem& rs, const Root& mu, const Root& nu) {
  rs.id_of(mu);
  rs.id_of(nu);
  Coeffs c(static_cast<size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i)
    c[static_cast<size_t>(i) - 1] = std::max(mu.coeff(i), nu.coeff(i));
  // When the supports intersect the coefficientwise max is a root and hence
  // the least upper bound. Otherwise fall back to the unique minimal upper
  // bound, which still exists in the root poset.
  if (auto id = rs.find(c)) return rs.root(*id);
  std::optional<RootId> best;
  for (RootId u = 0; u < rs.num_positive(); ++u) {
    if (!is_leq(rs, mu, rs.root(u)) || !is_leq(rs, nu, rs.root(u))) continue;
    if (!best || is_leq(rs, rs.root(u), rs.root(*best))) best = u;
  }
  if (!best) throw Error("no upper bound in the root poset");
  for (RootId u = 0; u < rs.num_positive(); ++u)
    if (is_leq(rs, mu, rs.root(u)) && is_leq(rs, nu, rs.root(u)) &&
        !is_leq(rs, rs.root(*best), rs.root(u)))
      throw Error("join is not unique in the root poset");
  return rs.root(*best);
}

std::optional<Root> theta_breve(const RootSystem& rs) {
  if (rs.spec().family == Family::A) return std::nullopt;
  Coeffs c(static_cast<size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i)
    c[static_cast<size_t>(i) - 1] = rs.theta().coeff(i) / 2;
  auto id = rs.find(c);
  if (!id) throw Error("floor of theta/2 failed to be a root");
  return rs.root(*id);
}

std::optional<Root> theta_tilde(const RootSystem& rs) {
  auto breve = theta_breve(rs);
  if (!breve) return std::nullopt;
  Coeffs c(static_cast<size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i)
    c[static_cast<size_t>(i) - 1] = rs.theta().coeff(i) - breve->coeff(i);
  auto id = rs.find(c);
  if (!id) throw Error("theta - theta_breve failed to be a root");
  return rs.root(*id);
}

int dual_coxeter(const RootSystem& rs) { return rs.rho_pairing(rs.theta_id()) + 1; }

}  // namespace rootposet
