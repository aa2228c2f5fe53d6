#include "dsdict/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dsdict/error.hpp"

namespace dsdict {

namespace {

std::string vec_str(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

RootDatum::RootDatum(std::size_t rank, std::vector<Root> roots) : rank_(rank), roots_(std::move(roots)) {
  for (const auto& r : roots_) {
    if (r.weight.size() != rank_ || r.coroot.size() != rank_)
      throw ValidationError("root " + vec_str(r.weight) + " has wrong length");
  }
  for (std::size_t k = 0; k < size(); ++k) {
    if (pairing(weight_of(k), k) != 2)
      throw ValidationError("<alpha, alpha-check> != 2 for root " + vec_str(roots_[k].weight));
    std::vector<long> neg = roots_[k].weight;
    for (auto& x : neg) x = -x;
    auto nk = index_of(neg);
    if (!nk) throw ValidationError("root set not closed under negation at " + vec_str(roots_[k].weight));
    if (roots_[*nk].compact != roots_[k].compact)
      throw ValidationError("grading differs on " + vec_str(roots_[k].weight) + " and its negative");
    for (std::size_t c = 0; c < rank_; ++c) {
      if (roots_[*nk].coroot[c] != -roots_[k].coroot[c])
        throw ValidationError("coroot of -alpha is not -coroot at " + vec_str(roots_[k].weight));
    }
  }
  for (std::size_t k = 0; k < size(); ++k) {
    WeylElement s = reflection(*this, k);  // throws if a reflection leaves the root set
    (void)s;
  }
  // grade(alpha + beta) = grade(alpha) * grade(beta), compact = +1.
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      std::vector<long> sum(rank_);
      for (std::size_t c = 0; c < rank_; ++c) sum[c] = roots_[a].weight[c] + roots_[b].weight[c];
      auto s = index_of(sum);
      if (!s) continue;
      bool expect = roots_[a].compact == roots_[b].compact;
      if (roots_[*s].compact != expect)
        throw ValidationError("grading is not multiplicative on " + vec_str(roots_[a].weight) + " + " +
                              vec_str(roots_[b].weight));
    }
}

std::optional<std::size_t> RootDatum::index_of(const std::vector<long>& weight) const {
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (roots_[k].weight == weight) return k;
  }
  return std::nullopt;
}

std::size_t RootDatum::negative_of(std::size_t k) const {
  std::vector<long> neg = roots_.at(k).weight;
  for (auto& x : neg) x = -x;
  return *index_of(neg);
}

Rational RootDatum::pairing(const Weight& lambda, std::size_t root) const {
  Rational v = 0;
  for (std::size_t c = 0; c < rank_; ++c) v += lambda.at(c) * roots_.at(root).coroot[c];
  return v;
}

Weight RootDatum::weight_of(std::size_t root) const {
  Weight w;
  for (long x : roots_.at(root).weight) w.emplace_back(x);
  return w;
}

bool is_regular(const RootDatum& rd, const Weight& lambda) {
  if (lambda.size() != rd.rank()) return false;
  for (std::size_t k = 0; k < rd.size(); ++k) {
    if (sgn(rd.pairing(lambda, k)) == 0) return false;
  }
  return true;
}

bool is_integral(const RootDatum& rd, const Weight& lambda) {
  if (!is_regular(rd, lambda)) return false;
  Weight r = rho(rd, positive_system(rd, lambda));
  for (std::size_t c = 0; c < rd.rank(); ++c) {
    if (!is_integer(lambda[c] - r[c])) return false;
  }
  return true;
}

HCParameter make_parameter(const RootDatum& rd, Weight lambda) {
  if (lambda.size() != rd.rank()) throw DomainError("parameter has wrong length");
  if (!is_regular(rd, lambda)) throw DomainError("parameter " + weight_str(lambda) + " is singular");
  if (!is_integral(rd, lambda)) throw DomainError("parameter " + weight_str(lambda) + " is not integral");
  return HCParameter{std::move(lambda)};
}

WeylChamber positive_system(const RootDatum& rd, const Weight& lambda) {
  if (!is_regular(rd, lambda)) throw DomainError("parameter " + weight_str(lambda) + " is singular");
  WeylChamber ch;
  for (std::size_t k = 0; k < rd.size(); ++k) ch.signs.push_back(sgn(rd.pairing(lambda, k)) > 0 ? 1 : -1);
  return ch;
}

std::vector<std::size_t> positive_roots(const WeylChamber& ch) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ch.signs.size(); ++k) {
    if (ch.signs[k] > 0) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> simple_roots(const RootDatum& rd, const WeylChamber& ch) {
  auto pos = positive_roots(ch);
  std::vector<std::size_t> out;
  for (auto k : pos) {
    bool decomposable = false;
    for (auto a : pos) {
      std::vector<long> rest(rd.rank());
      for (std::size_t c = 0; c < rd.rank(); ++c) rest[c] = rd.root(k).weight[c] - rd.root(a).weight[c];
      auto b = rd.index_of(rest);
      if (b && ch.signs[*b] > 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(k);
  }
  return out;
}

Weight rho(const RootDatum& rd, const WeylChamber& ch) {
  Weight r(rd.rank(), Rational(0));
  for (auto k : positive_roots(ch))
    for (std::size_t c = 0; c < rd.rank(); ++c) r[c] += Rational(rd.root(k).weight[c], 2);
  for (auto& x : r) x.canonicalize();
  return r;
}

bool is_large(const RootDatum& rd, const WeylChamber& ch) {
  for (auto k : simple_roots(rd, ch)) {
    if (rd.root(k).compact) return false;
  }
  return true;
}

bool is_positive_system(const RootDatum& rd, const WeylChamber& ch) {
  if (ch.signs.size() != rd.size()) return false;
  for (std::size_t k = 0; k < rd.size(); ++k) {
    if (ch.signs[k] == ch.signs[rd.negative_of(k)]) return false;
  }
  for (auto a : positive_roots(ch))
    for (auto b : positive_roots(ch)) {
      std::vector<long> sum(rd.rank());
      for (std::size_t c = 0; c < rd.rank(); ++c) sum[c] = rd.root(a).weight[c] + rd.root(b).weight[c];
      auto s = rd.index_of(sum);
      if (s && ch.signs[*s] < 0) return false;
    }
  return true;
}

Weight interior_point(const RootDatum& rd, const WeylChamber& ch) {
  Weight r = rho(rd, ch);
  if (!is_regular(rd, r) || !(positive_system(rd, r) == ch))
    throw DomainError("sign vector is not a Weyl chamber");
  return r;
}

WeylElement weyl_element_from_matrix(const RootDatum& rd, std::vector<Rational> matrix) {
  const std::size_t r = rd.rank();
  if (matrix.size() != r * r) throw ValidationError("Weyl element matrix has wrong size");
  WeylElement w{std::move(matrix), {}};
  for (std::size_t k = 0; k < rd.size(); ++k) {
    Weight image = act(w, rd.weight_of(k));
    std::vector<long> iw;
    for (const auto& x : image) {
      if (!is_integer(x)) throw ValidationError("Weyl element does not preserve the root lattice");
      iw.push_back(x.get_num().get_si());
    }
    auto idx = rd.index_of(iw);
    if (!idx) throw ValidationError("linear map does not permute the roots");
    w.perm.push_back(*idx);
  }
  return w;
}

WeylElement reflection(const RootDatum& rd, std::size_t root) {
  const std::size_t r = rd.rank();
  std::vector<Rational> m(r * r);
  // s(lambda)_i = lambda_i - <lambda, coroot> alpha_i
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      m[i * r + j] = Rational(i == j ? 1 : 0) - Rational(rd.root(root).weight[i]) * rd.root(root).coroot[j];
  return weyl_element_from_matrix(rd, std::move(m));
}

WeylElement weyl_identity(const RootDatum& rd) {
  const std::size_t r = rd.rank();
  std::vector<Rational> m(r * r);
  for (std::size_t i = 0; i < r; ++i) m[i * r + i] = 1;
  return weyl_element_from_matrix(rd, std::move(m));
}

WeylElement compose(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
  const std::size_t r = rd.rank();
  std::vector<Rational> m(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) m[i * r + j] += a.matrix[i * r + k] * b.matrix[k * r + j];
  return weyl_element_from_matrix(rd, std::move(m));
}

Weight act(const WeylElement& w, const Weight& lambda) {
  const std::size_t r = lambda.size();
  Weight out(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i] += w.matrix[i * r + j] * lambda[j];
  return out;
}

WeylChamber act(const WeylElement& w, const WeylChamber& ch) {
  WeylChamber out;
  out.signs.assign(ch.signs.size(), -1);
  for (std::size_t k = 0; k < ch.signs.size(); ++k) {
    if (ch.signs[k] > 0) out.signs[w.perm[k]] = 1;
  }
  return out;
}

std::vector<WeylElement> generate_group(const RootDatum& rd, const std::vector<WeylElement>& generators) {
  std::vector<WeylElement> group{weyl_identity(rd)};
  std::set<std::vector<std::size_t>> seen{group.front().perm};
  for (std::size_t head = 0; head < group.size(); ++head) {
    for (const auto& g : generators) {
      WeylElement next = compose(rd, g, group[head]);
      if (seen.insert(next.perm).second) group.push_back(std::move(next));
    }
  }
  return group;
}

std::vector<WeylElement> weyl_group(const RootDatum& rd) {
  std::vector<WeylElement> gens;
  for (std::size_t k = 0; k < rd.size(); ++k) gens.push_back(reflection(rd, k));
  return generate_group(rd, gens);
}

std::vector<WeylElement> wk_subgroup(const RootDatum& rd, const std::vector<WeylElement>& extra) {
  std::vector<WeylElement> gens;
  for (std::size_t k = 0; k < rd.size(); ++k) {
    if (rd.root(k).compact) gens.push_back(reflection(rd, k));
  }
  for (const auto& e : extra) {
    for (std::size_t k = 0; k < rd.size(); ++k) {
      if (rd.root(e.perm[k]).compact != rd.root(k).compact)
        throw ValidationError("W_K generator does not preserve the compactness grading");
    }
    gens.push_back(e);
  }
  return generate_group(rd, gens);
}

std::vector<WeylChamber> all_chambers(const RootDatum& rd) {
  // Any regular weight gives a starting chamber; W acts simply transitively.
  WeylChamber start;
  Weight probe(rd.rank());
  for (std::size_t c = 0; c < rd.rank(); ++c) probe[c] = Rational(static_cast<long>(1000 + 37 * c * c + c));
  start = positive_system(rd, probe);
  std::set<WeylChamber> out;
  for (const auto& w : weyl_group(rd)) out.insert(act(w, start));
  return {out.begin(), out.end()};
}

std::vector<ChamberClass> large_chambers_mod_wk(const RootDatum& rd, const std::vector<WeylElement>& wk) {
  std::vector<ChamberClass> classes;
  std::set<WeylChamber> assigned;
  for (const auto& ch : all_chambers(rd)) {
    if (!is_large(rd, ch) || assigned.count(ch)) continue;
    std::set<WeylChamber> orbit;
    for (const auto& w : wk) orbit.insert(act(w, ch));
    ChamberClass cls;
    cls.members.assign(orbit.begin(), orbit.end());
    cls.representative = *std::min_element(cls.members.begin(), cls.members.end());
    for (const auto& m : cls.members) {
      if (!is_large(rd, m)) throw ConsistencyError("W_K moved a large chamber to a non-large one");
      assigned.insert(m);
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ChamberClass& a, const ChamberClass& b) { return a.representative < b.representative; });
  return classes;
}

std::optional<std::size_t> class_of(const std::vector<ChamberClass>& classes, const WeylChamber& ch) {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (std::find(classes[k].members.begin(), classes[k].members.end(), ch) != classes[k].members.end()) return k;
  }
  return std::nullopt;
}

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + w[k].get_str();
  return out + ")";
}

std::string chamber_str(const RootDatum& rd, const WeylChamber& ch) {
  std::string out = "{";
  auto simple = simple_roots(rd, ch);
  for (std::size_t k = 0; k < simple.size(); ++k) out += (k ? "," : "") + vec_str(rd.root(simple[k]).weight);
  return out + "}";
}

}  // namespace dsdict
