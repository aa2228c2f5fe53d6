// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dsdict/appendix.hpp"
#include "dsdict/cohomology.hpp"
#include "dsdict/error.hpp"

using namespace dsdict;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<HCParameter> sl2_parameters(const CatalogEntry& e) {
  std::vector<HCParameter> out;
  for (long k = -20; k <= 20; ++k)
    if (k != 0) out.push_back(make_parameter(e.roots, {Rational(k)}));
  return out;
}

/// W-translates of several regular integral weights that land in large chambers.
std::vector<HCParameter> sp4_parameters(const CatalogEntry& e) {
  std::vector<HCParameter> out;
  auto w = weyl_group(e.roots);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 2}, {5, 3}, {7, 4}})
    for (const auto& g : w) {
      Weight lam = act(g, Weight{Rational(a), Rational(b)});
      if (is_large(e.roots, positive_system(e.roots, lam))) out.push_back(make_parameter(e.roots, lam));
    }
  return out;
}

Outcome golden(const std::vector<CatalogEntry>& entries) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0, passed = 0;
  std::string failed;
  for (const auto& e : entries)
    for (const auto& g : run_golden(e)) {
      ++total;
      if (g.pass) ++passed;
      else failed += " " + g.id;
    }
  double s = seconds_since(t0);
  std::ostringstream os;
  os << passed << "/" << total << " identities in " << s << " s" << failed;
  return {total > 0 && passed == total && s < 1.0, os.str()};
}

Outcome bijection(const CatalogEntry& e) {
  auto t0 = std::chrono::steady_clock::now();
  auto classes = large_classes(e);
  std::map<std::size_t, std::set<OrbitLabel>> av, wf, wh;
  std::size_t reconstruct_failures = 0;
  for (const auto& lam : sl2_parameters(e)) {
    auto cls = class_of(classes, positive_system(e.roots, lam.lambda)).value();
    OrbitLabel w = wf_of(e, lam);
    av[cls].insert(av_of(e, lam));
    wf[cls].insert(w);
    wh[cls].insert(whittaker_of(e, lam).orbit);
    if (reconstruct_chamber(e, w, lam) != cls) ++reconstruct_failures;
  }
  auto bijective = [&](const std::map<std::size_t, std::set<OrbitLabel>>& m) {
    std::set<OrbitLabel> image;
    for (const auto& [c, labels] : m) {
      if (labels.size() != 1) return false;
      image.insert(*labels.begin());
    }
    return image.size() == m.size() && image.size() == q_order(e);
  };
  bool ok = bijective(av) && bijective(wf) && bijective(wh) && reconstruct_failures == 0;
  double s = seconds_since(t0);
  std::ostringstream os;
  os << classes.size() << " classes, |Q| = " << q_order(e) << ", reconstruction failures " << reconstruct_failures << ", "
     << s << " s";
  return {ok && s < 5.0, os.str()};
}

Outcome cross_routes(const CatalogEntry& sl2, const CatalogEntry& sp4) {
  std::size_t checked = 0, bad = 0;
  auto run = [&](const CatalogEntry& e, const std::vector<HCParameter>& params) {
    for (const auto& lam : params) {
      WfRoutes r = wf_routes(e, lam, true);
      ++checked;
      bool agree = r.explicit_route == r.ks_route && r.cone_route == r.explicit_route;
      if (!e.scaling_cocharacter.empty()) agree = agree && r.scaling_route == r.explicit_route;
      if (!agree) ++bad;
    }
  };
  run(sl2, sl2_parameters(sl2));
  run(sp4, sp4_parameters(sp4));
  std::ostringstream os;
  os << checked << " parameters, " << bad << " disagreements";
  return {checked > 0 && bad == 0, os.str()};
}

Outcome section_criterion(const CatalogEntry& e) {
  std::size_t checked = 0, bad = 0, meets = 0;
  for (const char* name : {"ER", "-ER"}) {
    GaussScalar c = name[0] == '-' ? GaussScalar(-1) : GaussScalar(1);
    Covector xi = covector_from_names(e, e.dual_basis_of("ER"), {{"ER", c}});
    auto section = kostant_section(e, xi);
    OrbitLabel xl = real_orbit_label(e, xi);
    for (const auto& lam : sl2_parameters(e)) {
      bool m = section_meets_orbit(e, section, lam).meets;
      ++checked;
      meets += m;
      if (m != (xl == wf_of(e, lam))) ++bad;
    }
  }
  std::ostringstream os;
  os << checked << " cases, " << meets << " meet, " << bad << " mismatches";
  return {bad == 0 && meets * 2 == checked, os.str()};
}

struct Labels {
  OrbitLabel av, wf, wh;
  friend bool operator==(const Labels&, const Labels&) = default;
  friend auto operator<=>(const Labels&, const Labels&) = default;
};

Outcome chamber_invariance(const CatalogEntry& e, const std::vector<HCParameter>& params, std::size_t min_per_chamber) {
  auto classes = large_classes(e);
  std::map<WeylChamber, std::set<Labels>> by_chamber;
  std::map<WeylChamber, std::size_t> counts;
  for (const auto& lam : params) {
    WeylChamber ch = positive_system(e.roots, lam.lambda);
    by_chamber[ch].insert({av_of(e, lam), wf_of(e, lam), whittaker_of(e, lam).orbit});
    ++counts[ch];
  }
  bool ok = true;
  std::size_t fewest = params.size();
  std::map<std::size_t, std::set<Labels>> by_class;
  for (const auto& c : classes)
    for (const auto& m : c.members) {
      if (!by_chamber.count(m)) {
        ok = false;
        continue;
      }
      fewest = std::min(fewest, counts[m]);
      if (by_chamber[m].size() != 1) ok = false;
      by_class[*class_of(classes, m)].insert(*by_chamber[m].begin());
    }
  std::set<Labels> distinct;
  for (const auto& [c, s] : by_class) {
    if (s.size() != 1) ok = false;
    distinct.insert(*s.begin());
  }
  if (distinct.size() != classes.size()) ok = false;
  if (fewest < min_per_chamber) ok = false;
  std::ostringstream os;
  os << e.name << ": " << by_chamber.size() << " large chambers, " << classes.size() << " classes, >= " << fewest
     << " parameters per chamber";
  return {ok, os.str()};
}

Outcome torsors(const std::vector<CatalogEntry>& entries) {
  bool ok = true;
  std::ostringstream os;
  for (const auto& e : entries) {
    auto r = verify_torsor_counts(e);
    ok = ok && r.pass;
    os << e.name << " " << r.chambers << "/" << r.av << "/" << r.wf << "/" << r.wh << "/" << r.q << "; ";
  }
  std::size_t a = h1({{2}, {{1}}}).order();
  std::size_t b = h1({{5}, {{1}}}).order();
  std::size_t c = h1({{4}, {{-1}}}).order();
  std::size_t d = h1({{3}, {{-1}}}).order();
  ok = ok && a == 2 && b == 1 && c == 2 && d == 1;
  os << "h1: Z/2 trivial " << a << ", Z/5 trivial " << b << ", Z/4 by -1 " << c << ", Z/3 by -1 " << d;
  return {ok, os.str()};
}

Outcome oracle_soundness(const std::vector<CatalogEntry>& entries) {
  constexpr int trials = 1000;
  bool ok = true;
  std::ostringstream os;
  for (const auto& e : entries) {
    for (GroupSide side : {GroupSide::real_group, GroupSide::k_group}) {
      ConjugacyOracle oracle(e, side, 2024);
      std::mt19937_64 rng(side == GroupSide::real_group ? 17 : 29);
      std::vector<Matrix> xs;
      std::function<int(const Matrix&)> tag;
      if (side == GroupSide::real_group) {
        for (int t : {1, -1}) xs.push_back(e.lie.psi_inverse(real_orbit_representative(e, t)));
        tag = [&](const Matrix& m) { return real_orbit_tag(e, lift(m)); };
      } else {
        for (int t : {1, -1}) xs.push_back(e.lie.psi_inverse(k_orbit_representative(e, t)));
        tag = [&](const Matrix& m) { return k_orbit_tag(e, m); };
      }
      int failures = 0, found = 0;
      for (int i = 0; i < trials; ++i) {
        const Matrix& x = xs[i % 2];
        auto [word, g] = oracle.sample(rng);
        Matrix y = g * x * inverse(g).value();
        if (tag(y) != tag(x)) ++failures;
        auto res = oracle.find(x, y);
        if (res.conjugate) {
          ++found;
          if (!(*res.conjugator * x == y * *res.conjugator)) ++failures;
        }
      }
      ok = ok && failures == 0 && found * 100 >= trials * 99;
      os << e.name << (side == GroupSide::real_group ? " real" : " K") << ": " << failures << " failures, " << found
         << "/" << trials << " found; ";
    }
  }
  os << "probabilistic, seeded";
  return {ok, os.str()};
}

Outcome q_equivariance(const CatalogEntry& e) {
  const Matrix& q = e.q_representatives.at(0);
  auto classes = large_classes(e);
  std::size_t bad = 0, checked = 0;
  for (const auto& lam : sl2_parameters(e)) {
    HCParameter image = make_parameter(e.roots, q_action(e, q, lam.lambda));
    WeylChamber ch = positive_system(e.roots, lam.lambda);
    WeylChamber qch = q_action(e, q, ch);
    bool ok = qch == positive_system(e.roots, image.lambda) && class_of(classes, qch) != class_of(classes, ch);
    ok = ok && q_action(e, q, wf_of(e, lam)) == wf_of(e, image) && wf_of(e, image) != wf_of(e, lam);
    ok = ok && q_action(e, q, av_of(e, lam)) == av_of(e, image) && av_of(e, image) != av_of(e, lam);
    auto wh = whittaker_of(e, lam).orbit, qwh = whittaker_of(e, image).orbit;
    ok = ok && q_action(e, q, wh) == qwh && qwh != wh;
    ++checked;
    if (!ok) ++bad;
  }
  std::ostringstream os;
  os << checked << " parameters, " << bad << " failures";
  return {bad == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string path = argc > 1 ? argv[1] : default_catalog_path();
  std::vector<CatalogEntry> entries;
  try {
    entries = load_catalog(path);
  } catch (const std::exception& ex) {
    std::cout << "FAIL catalog: " << ex.what() << '\n';
    return 1;
  }
  const CatalogEntry& sl2 = find_entry(entries, "sl2r");
  const CatalogEntry& sp4 = find_entry(entries, "sp4r");

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 golden identities", [&] { return golden(entries); }},
      {"2 sl2 dictionary bijection", [&] { return bijection(sl2); }},
      {"3 cross-route consistency", [&] { return cross_routes(sl2, sp4); }},
      {"4 sl2 Kostant-section criterion", [&] { return section_criterion(sl2); }},
      {"5 chamber invariance",
       [&] {
         Outcome a = chamber_invariance(sl2, sl2_parameters(sl2), 20);
         Outcome b = chamber_invariance(sp4, sp4_parameters(sp4), 5);
         return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
       }},
      {"6 torsor counts", [&] { return torsors(entries); }},
      {"7 oracle soundness", [&] { return oracle_soundness(entries); }},
      {"8 sl2 Q-equivariance", [&] { return q_equivariance(sl2); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << "  (" << o.detail << ")\n" << std::flush;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
