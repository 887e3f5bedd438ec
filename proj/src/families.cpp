#include "synsem/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace synsem {
namespace families {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Ascending-choice enumeration: positions 1..limit pick any target above
// themselves, the remaining positions are pinned by `pin` (which receives the
// position and returns its fixed target).  Produces lexicographic order.
template <typename Pin>
std::vector<Transformation> enumerate_ascending(int n, int limit, Pin pin) {
  std::vector<Transformation> out;
  std::vector<int> tgt(static_cast<std::size_t>(n));
  for (int i = limit + 1; i <= n; ++i) tgt[i - 1] = pin(i);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > limit) {
      out.emplace_back(tgt);
      return;
    }
    for (int v = pos + 1; v <= n; ++v) {
      tgt[pos - 1] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return out;
}

bool has_forced_step(const Transformation& t, int up_to) {
  for (int i = 1; i <= up_to; ++i) {
    if (t.apply(i) == i + 1) return true;
  }
  return false;
}

bool all_targets_below_degree(const Transformation& t) {
  for (int v : t.targets()) {
    if (v == t.degree()) return false;
  }
  return true;
}

bool in_alpha_c(const Transformation& t) {
  for (int v : t.targets()) {
    if (v < 2) return false;
  }
  std::vector<int> down(t.targets());
  for (int& v : down) --v;
  return band_index(Transformation(std::move(down))) > 0;
}

Transformation alpha_inverse(const Transformation& t) {
  std::vector<int> down(t.targets());
  for (int& v : down) --v;
  return Transformation(std::move(down));
}

}  // namespace

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::A: return "A";
    case FamilyTag::G: return "G";
    case FamilyTag::Aprime: return "Aprime";
    case FamilyTag::Gprime: return "Gprime";
    case FamilyTag::Bk: return "Bk";
    case FamilyTag::B: return "B";
    case FamilyTag::C: return "C";
    case FamilyTag::AlphaC: return "alphaC";
    case FamilyTag::H: return "H";
  }
  return "?";
}

std::optional<FamilyTag> family_from_name(std::string_view name) {
  if (name == "A") return FamilyTag::A;
  if (name == "G") return FamilyTag::G;
  if (name == "Aprime") return FamilyTag::Aprime;
  if (name == "Gprime") return FamilyTag::Gprime;
  if (name == "Bk") return FamilyTag::Bk;
  if (name == "B") return FamilyTag::B;
  if (name == "C") return FamilyTag::C;
  if (name == "alphaC") return FamilyTag::AlphaC;
  if (name == "H") return FamilyTag::H;
  return std::nullopt;
}

std::vector<Transformation> build(const Family& family) {
  const int n = family.n;
  require(n >= 2, "family degree must be >= 2");
  switch (family.tag) {
    case FamilyTag::A:
      return enumerate_ascending(n, n - 1, [&](int) { return n; });
    case FamilyTag::G: {
      require(n >= 3, "G requires degree >= 3");
      std::vector<Transformation> a = build({FamilyTag::A, n});
      std::erase_if(a, [&](const Transformation& t) { return !has_forced_step(t, n - 2); });
      return a;
    }
    case FamilyTag::Aprime:
      return enumerate_ascending(n, n - 2, [&](int i) { return i; });
    case FamilyTag::Gprime: {
      require(n >= 4, "Gprime requires degree >= 4");
      std::vector<Transformation> a = build({FamilyTag::Aprime, n});
      std::erase_if(a, [&](const Transformation& t) { return !has_forced_step(t, n - 3); });
      return a;
    }
    case FamilyTag::Bk: {
      require(family.k >= 1 && family.k <= n, "band index must lie in 1..n");
      return enumerate_ascending(n, family.k - 1, [&](int) { return family.k; });
    }
    case FamilyTag::B: {
      std::vector<Transformation> out;
      for (int k = 1; k <= n; ++k) {
        std::vector<Transformation> band = build({FamilyTag::Bk, n, k});
        out.insert(out.end(), band.begin(), band.end());
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    case FamilyTag::C: {
      std::vector<Transformation> b = build({FamilyTag::B, n});
      std::erase_if(b, [&](const Transformation& t) { return !all_targets_below_degree(t); });
      return b;
    }
    case FamilyTag::AlphaC: {
      std::vector<Transformation> c = build({FamilyTag::C, n});
      std::vector<Transformation> out;
      out.reserve(c.size());
      for (const auto& t : c) out.push_back(alpha(t));
      std::sort(out.begin(), out.end());
      return out;
    }
    case FamilyTag::H: {
      require(n >= 3, "H requires degree >= 3");
      std::vector<Transformation> b = build({FamilyTag::B, n});
      std::vector<Transformation> ac = build({FamilyTag::AlphaC, n});
      std::vector<Transformation> out;
      std::set_difference(b.begin(), b.end(), ac.begin(), ac.end(), std::back_inserter(out));
      return out;
    }
  }
  throw std::invalid_argument("unknown family");
}

std::uint64_t factorial(int m) {
  require(m >= 0, "factorial of a negative number");
  std::uint64_t r = 1;
  for (int i = 2; i <= m; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t floor_e_times_factorial(int m) {
  require(m >= 1, "floor_e_times_factorial requires m >= 1");
  // sum of m!/(m-l)! over l = 0..m; the omitted tail is below 1 for m >= 1
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (int l = 0; l <= m; ++l) {
    total += term;
    term *= static_cast<std::uint64_t>(m - l);
  }
  return total;
}

std::uint64_t family_size_formula(const Family& family) {
  const int n = family.n;
  require(n >= 2, "family degree must be >= 2");
  switch (family.tag) {
    case FamilyTag::A:
    case FamilyTag::Aprime:
      return factorial(n - 1);
    case FamilyTag::G:
      require(n >= 3, "G requires degree >= 3");
      return factorial(n - 1) - factorial(n - 2);
    case FamilyTag::Gprime:
      require(n >= 4, "Gprime requires degree >= 4");
      return factorial(n - 1) - 2 * factorial(n - 2);
    case FamilyTag::Bk:
      require(family.k >= 1 && family.k <= n, "band index must lie in 1..n");
      return factorial(n - 1) / factorial(n - family.k);
    case FamilyTag::B:
      return floor_e_times_factorial(n - 1);
    case FamilyTag::C:
    case FamilyTag::AlphaC: {
      std::uint64_t total = 0;
      for (int k = 1; k <= n - 1; ++k) total += factorial(n - 2) / factorial(n - 1 - k);
      return total;
    }
    case FamilyTag::H:
      require(n >= 3, "H requires degree >= 3");
      return floor_e_times_factorial(n - 1) - floor_e_times_factorial(n - 2);
  }
  throw std::invalid_argument("unknown family");
}

int band_index(const Transformation& t) {
  const int n = t.degree();
  for (int k = 1; k <= n; ++k) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      if (i < k) {
        ok = t.apply(i) > i;
      } else {
        ok = t.apply(i) == k;
      }
    }
    if (ok) return k;
  }
  return 0;
}

Transformation shift_map(int degree) {
  require(degree >= 2, "shift map needs degree >= 2");
  std::vector<int> tgt(static_cast<std::size_t>(degree));
  for (int i = 1; i < degree; ++i) tgt[i - 1] = i + 1;
  tgt[degree - 1] = degree;
  return Transformation(std::move(tgt));
}

Transformation alpha(const Transformation& t) {
  require(all_targets_below_degree(t), "alpha is defined on maps with all targets below n");
  std::vector<int> up(t.targets());
  for (int& v : up) ++v;
  return Transformation(std::move(up));
}

Transformation Decomposition::recompose() const { return compose(base, synsem::power(shift, power)); }

Decomposition decompose(const Transformation& t, DecomposeFamily family) {
  const int n = t.degree();
  Decomposition d{t, shift_map(n), 0};
  if (family == DecomposeFamily::A) {
    require(n >= 3, "family-A decomposition requires degree >= 3");
    require(band_index(t) == n, "transformation is not in A_n");
    int k = n;  // min over i of t(i) - i, over positions 1..n-2
    for (int i = 1; i <= n - 2; ++i) k = std::min(k, t.apply(i) - i);
    --k;
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 2; ++i) base[i - 1] = t.apply(i) - k;
    base[n - 2] = n;
    base[n - 1] = n;
    d.base = Transformation(std::move(base));
    d.power = k;
    if (band_index(d.base) != n || !has_forced_step(d.base, n - 2)) {
      throw std::logic_error("decomposition base escaped the generator family");
    }
  } else {
    require(band_index(t) > 0, "transformation is not in B_n");
    Transformation cur = t;
    int k = 0;
    while (in_alpha_c(cur)) {
      cur = alpha_inverse(cur);
      ++k;
    }
    d.base = std::move(cur);
    d.power = k;
  }
  if (d.recompose() != t) {
    throw std::logic_error("decomposition failed to recompose " + to_string(t));
  }
  return d;
}

std::string witness_class_name(WitnessClass c) {
  switch (c) {
    case WitnessClass::Finite: return "finite";
    case WitnessClass::Cofinite: return "cofinite";
    case WitnessClass::ReverseDefinite: return "reverse-definite";
    case WitnessClass::Definite: return "definite";
  }
  return "?";
}

std::optional<WitnessClass> witness_class_from_name(std::string_view name) {
  if (name == "finite") return WitnessClass::Finite;
  if (name == "cofinite") return WitnessClass::Cofinite;
  if (name == "reverse-definite" || name == "reverse_definite") return WitnessClass::ReverseDefinite;
  if (name == "definite") return WitnessClass::Definite;
  return std::nullopt;
}

namespace {

Dfa dfa_from_letters(const std::vector<Transformation>& letters, int n, int start,
                     std::vector<int> finals) {
  std::vector<std::string> alphabet;
  alphabet.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) alphabet.push_back("a" + std::to_string(i + 1));
  std::vector<std::vector<int>> delta(static_cast<std::size_t>(n),
                                      std::vector<int>(letters.size()));
  for (int q = 1; q <= n; ++q) {
    for (std::size_t a = 0; a < letters.size(); ++a) delta[q - 1][a] = letters[a].apply(q);
  }
  return Dfa(n, std::move(alphabet), std::move(delta), start, std::move(finals));
}

}  // namespace

Dfa witness_dfa(WitnessClass witness_class, int n) {
  switch (witness_class) {
    case WitnessClass::Finite:
      require(n >= 3, "finite witness requires n >= 3");
      return dfa_from_letters(build({FamilyTag::G, n}), n, 1, {n - 1});
    case WitnessClass::Cofinite:
      require(n >= 3, "cofinite witness requires n >= 3");
      return complement(witness_dfa(WitnessClass::Finite, n));
    case WitnessClass::ReverseDefinite:
      require(n >= 4, "reverse-definite witness requires n >= 4");
      return dfa_from_letters(build({FamilyTag::Gprime, n}), n, 1, {n});
    case WitnessClass::Definite:
      require(n >= 3, "definite witness requires n >= 3");
      return dfa_from_letters(build({FamilyTag::H, n}), n, 1, {n});
  }
  throw std::invalid_argument("unknown witness class");
}

bool BoundsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundsCheck& c) { return c.skipped || c.pass; });
}

namespace {

std::set<Transformation> pairwise_products(const std::vector<Transformation>& elems) {
  std::set<Transformation> out;
  for (const auto& a : elems) {
    for (const auto& b : elems) out.insert(compose(a, b));
  }
  return out;
}

}  // namespace

BoundsReport verify_bounds(int n, const ClosureOptions& options) {
  require(n >= 3, "verify_bounds requires n >= 3");
  require(n <= 8, "verify_bounds degree guard");
  BoundsReport report;
  report.n = n;

  auto add = [&](const std::string& name, std::uint64_t expected, std::uint64_t actual) {
    report.checks.push_back({name, std::to_string(expected), std::to_string(actual),
                             expected == actual, false});
  };
  auto add_bool = [&](const std::string& name, bool ok) {
    report.checks.push_back({name, "yes", ok ? "yes" : "no", ok, false});
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    report.checks.push_back({name, why, "-", true, true});
  };

  // ascending family with one top fixed point (finite/cofinite classes)
  std::vector<Transformation> a = build({FamilyTag::A, n});
  std::vector<Transformation> g = build({FamilyTag::G, n});
  add("|A_" + std::to_string(n) + "|", factorial(n - 1), a.size());
  add("|G_" + std::to_string(n) + "|", factorial(n - 1) - factorial(n - 2), g.size());
  TransformationSemigroup a_sg = TransformationSemigroup::from_elements(a);
  add_bool("closure(G_" + std::to_string(n) + ") == A_" + std::to_string(n),
           closure(g, options).elements() == a_sg.elements());
  {
    std::set<Transformation> prod = pairwise_products(a);
    bool disjoint = std::none_of(g.begin(), g.end(),
                                 [&](const Transformation& t) { return prod.count(t) > 0; });
    add_bool("G_" + std::to_string(n) + " disjoint from A*A (letters forced)", disjoint);
  }
  {
    IdempotentReport idem = idempotent_report(a_sg);
    add_bool("A_" + std::to_string(n) + " has a single idempotent zero",
             idem.idempotents.size() == 1 && idem.unique_zero.has_value());
  }
  {
    Dfa w = witness_dfa(WitnessClass::Finite, n);
    ClassificationReport c = classify(w, options);
    add_bool("finite witness minimal", is_minimal(w));
    add_bool("finite witness classifies finite", c.is_finite);
    add("finite witness sigma", factorial(n - 1), c.sigma);
  }

  // ascending family with two top fixed points (reverse definite class)
  if (n >= 4) {
    std::vector<Transformation> ap = build({FamilyTag::Aprime, n});
    std::vector<Transformation> gp = build({FamilyTag::Gprime, n});
    add("|A'_" + std::to_string(n) + "|", factorial(n - 1), ap.size());
    add("|G'_" + std::to_string(n) + "|", factorial(n - 1) - 2 * factorial(n - 2), gp.size());
    TransformationSemigroup ap_sg = TransformationSemigroup::from_elements(ap);
    add_bool("closure(G'_" + std::to_string(n) + ") == A'_" + std::to_string(n),
             closure(gp, options).elements() == ap_sg.elements());
    {
      std::set<Transformation> prod = pairwise_products(ap);
      bool disjoint = std::none_of(gp.begin(), gp.end(),
                                   [&](const Transformation& t) { return prod.count(t) > 0; });
      add_bool("G'_" + std::to_string(n) + " disjoint from A'*A' (letters forced)", disjoint);
    }
    add_bool("A'_" + std::to_string(n) + " idempotents all left zeros",
             idempotent_report(ap_sg).all_left_zero);
    {
      Dfa w = witness_dfa(WitnessClass::ReverseDefinite, n);
      ClassificationReport c = classify(w, options);
      add_bool("reverse-definite witness minimal", is_minimal(w));
      add_bool("reverse-definite witness classifies reverse-definite",
               c.is_reverse_definite && !c.is_finite && !c.is_cofinite);
      add("reverse-definite witness sigma", factorial(n - 1), c.sigma);
    }
  } else {
    skip("A'/G' family checks", "alphabet bound needs n >= 4");
  }

  // banded non-permutational family (definite class)
  std::vector<Transformation> b = build({FamilyTag::B, n});
  std::vector<Transformation> h = build({FamilyTag::H, n});
  add("|B_" + std::to_string(n) + "|", floor_e_times_factorial(n - 1), b.size());
  for (int k = 1; k <= n; ++k) {
    add("|B_{" + std::to_string(n) + "," + std::to_string(k) + "}|",
        factorial(n - 1) / factorial(n - k), build({FamilyTag::Bk, n, k}).size());
  }
  add("|H_" + std::to_string(n) + "|",
      floor_e_times_factorial(n - 1) - floor_e_times_factorial(n - 2), h.size());
  TransformationSemigroup b_sg = TransformationSemigroup::from_elements(b);
  add_bool("closure(H_" + std::to_string(n) + ") == B_" + std::to_string(n),
           closure(h, options).elements() == b_sg.elements());
  add_bool("H_" + std::to_string(n) + " == indecomposables of B_" + std::to_string(n),
           indecomposables(b_sg) == h);
  {
    IdempotentReport idem = idempotent_report(b_sg);
    bool constants_only = std::all_of(idem.idempotents.begin(), idem.idempotents.end(),
                                      [](const Transformation& e) { return is_constant(e); });
    add_bool("B_" + std::to_string(n) + " idempotents are the constants, all right zeros",
             constants_only && idem.idempotents.size() == static_cast<std::size_t>(n) &&
                 idem.all_right_zero);
  }
  {
    Dfa w = witness_dfa(WitnessClass::Definite, n);
    ClassificationReport c = classify(w, options);
    add_bool("definite witness minimal", is_minimal(w));
    add_bool("definite witness classifies definite",
             c.is_definite && !c.is_finite && !c.is_cofinite && !c.is_reverse_definite);
    add("definite witness sigma", floor_e_times_factorial(n - 1), c.sigma);
  }

  return report;
}

}  // namespace families
}  // namespace synsem
