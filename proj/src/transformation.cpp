#include "synsem/transformation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace synsem {

namespace {

constexpr int kMaxEncodableDegree = 8;

// Workhorse shared by is_permutational, eventual_image and the counting
// kernel.  `tgt` holds 0-based images.  Returns a bitmask of the periodic
// points of the map, computed as the image of t^(2^ceil(log2 n)).
std::uint32_t periodic_mask(const int* tgt, int n) {
  int a[kMaxEncodableDegree];
  int b[kMaxEncodableDegree];
  for (int i = 0; i < n; ++i) a[i] = tgt[i];
  for (int steps = 1; steps < n; steps *= 2) {
    for (int i = 0; i < n; ++i) b[i] = a[a[i]];
    std::copy(b, b + n, a);
  }
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) mask |= 1u << a[i];
  return mask;
}

// 1-based sorted periodic points, any degree.
std::vector<int> periodic_points(const std::vector<int>& one_based) {
  const int n = static_cast<int>(one_based.size());
  std::vector<int> a(one_based);
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int steps = 1; steps < n; steps *= 2) {
    for (int i = 0; i < n; ++i) b[i] = a[a[i] - 1];
    a.swap(b);
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void check_enum_degree(int degree, int max_degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (max_degree > kMaxEncodableDegree) max_degree = kMaxEncodableDegree;
  if (degree > max_degree) {
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " exceeds the enumeration guard (" +
                                std::to_string(max_degree) + ")");
  }
}

void decode_raw(int n, std::uint32_t code, int* tgt) {
  for (int i = n - 1; i >= 0; --i) {
    tgt[i] = static_cast<int>(code % n);
    code /= n;
  }
}

}  // namespace

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

Transformation::Transformation(std::vector<int> targets) : targets_(std::move(targets)) {
  if (targets_.empty()) throw std::invalid_argument("transformation must have degree >= 1");
  const int n = degree();
  for (int v : targets_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("transformation entry " + std::to_string(v) +
                                  " outside {1.." + std::to_string(n) + "}");
    }
  }
}

Transformation Transformation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> t(degree);
  std::iota(t.begin(), t.end(), 1);
  return Transformation(std::move(t));
}

int Transformation::apply(int state) const {
  if (state < 1 || state > degree()) throw std::invalid_argument("state out of range");
  return targets_[state - 1];
}

std::strong_ordering Transformation::operator<=>(const Transformation& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(targets_.begin(), targets_.end(),
                                                other.targets_.begin(), other.targets_.end());
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation must have degree >= 1");
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 1);
  return Permutation(std::move(p));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p = identity(degree);
  if (a < 1 || a > degree || b < 1 || b > degree) {
    throw std::invalid_argument("transposition point out of range");
  }
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

int Permutation::apply(int state) const {
  if (state < 1 || state > degree()) throw std::invalid_argument("state out of range");
  return images_[state - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree()) {
    throw std::invalid_argument("cannot compose transformations of degrees " +
                                std::to_string(s.degree()) + " and " +
                                std::to_string(t.degree()));
  }
  std::vector<int> r(s.targets().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = t.targets()[s.targets()[i] - 1];
  return Transformation(std::move(r));
}

Transformation power(const Transformation& t, std::uint64_t k) {
  Transformation acc = Transformation::identity(t.degree());
  Transformation base = t;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return acc;
}

Transformation constant_map(int degree, int j) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (j < 1 || j > degree) throw std::invalid_argument("constant target out of range");
  return Transformation(std::vector<int>(static_cast<std::size_t>(degree), j));
}

bool is_constant(const Transformation& t) {
  const auto& v = t.targets();
  return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

bool is_idempotent(const Transformation& t) { return compose(t, t) == t; }

bool is_permutational(const Transformation& t) {
  if (t.degree() <= kMaxEncodableDegree) {
    int tgt[kMaxEncodableDegree];
    for (int i = 0; i < t.degree(); ++i) tgt[i] = t.targets()[i] - 1;
    return std::popcount(periodic_mask(tgt, t.degree())) >= 2;
  }
  return periodic_points(t.targets()).size() >= 2;
}

std::vector<int> eventual_image(const Transformation& t) { return periodic_points(t.targets()); }

Transformation relabel(const Transformation& t, const Permutation& p) {
  if (t.degree() != p.degree()) throw std::invalid_argument("relabel: degree mismatch");
  std::vector<int> r(t.targets().size());
  for (int i = 1; i <= t.degree(); ++i) r[p.apply(i) - 1] = p.apply(t.apply(i));
  return Transformation(std::move(r));
}

ForestEdgeList to_forest(const Transformation& t) {
  if (is_permutational(t)) {
    throw std::invalid_argument("to_forest requires a non-permutational transformation");
  }
  ForestEdgeList f;
  f.degree = t.degree();
  f.root = eventual_image(t).front();
  for (int c = 1; c <= t.degree(); ++c) {
    if (c != f.root) f.edges.emplace_back(c, t.apply(c));
  }
  return f;
}

Transformation from_forest(const ForestEdgeList& forest) {
  const int n = forest.degree;
  if (n < 1) throw std::invalid_argument("forest degree must be >= 1");
  if (forest.root < 1 || forest.root > n) throw std::invalid_argument("forest root out of range");
  if (forest.edges.size() != static_cast<std::size_t>(n) - 1) {
    throw std::invalid_argument("forest must have exactly degree-1 edges");
  }
  std::vector<int> tgt(static_cast<std::size_t>(n), 0);
  tgt[forest.root - 1] = forest.root;
  for (auto [child, parent] : forest.edges) {
    if (child < 1 || child > n || parent < 1 || parent > n) {
      throw std::invalid_argument("forest edge endpoint out of range");
    }
    if (child == forest.root || tgt[child - 1] != 0) {
      throw std::invalid_argument("every non-root node must appear exactly once as a child");
    }
    tgt[child - 1] = parent;
  }
  Transformation t{std::move(tgt)};
  if (is_permutational(t)) throw std::invalid_argument("edge list contains a cycle");
  return t;
}

std::uint64_t count_non_permutational(int degree, int max_degree) {
  check_enum_degree(degree, max_degree);
  const std::int64_t total = static_cast<std::int64_t>(ipow(degree, degree));
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t code = 0; code < total; ++code) {
    int tgt[kMaxEncodableDegree];
    decode_raw(degree, static_cast<std::uint32_t>(code), tgt);
    if (std::popcount(periodic_mask(tgt, degree)) < 2) ++count;
  }
  return count;
}

std::uint64_t count_non_permutational_serial(int degree, int max_degree) {
  check_enum_degree(degree, max_degree);
  const std::uint64_t total = ipow(degree, degree);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    int tgt[kMaxEncodableDegree];
    decode_raw(degree, static_cast<std::uint32_t>(code), tgt);
    if (std::popcount(periodic_mask(tgt, degree)) < 2) ++count;
  }
  return count;
}

std::string to_string(const Transformation& t) {
  std::string out = "[";
  for (int i = 0; i < t.degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t.targets()[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Transformation& t) {
  return os << to_string(t);
}

Transformation parse_transformation(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("cannot parse transformation \"" + std::string(text) + "\": " + what);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<int> entries;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    fail("empty entry list");
  }
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer entry");
    entries.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip_ws();
    if (pos >= text.size()) fail("unterminated list");
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') fail("expected ',' or ']'");
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  return Transformation(std::move(entries));
}

std::uint32_t encode(const Transformation& t) {
  const int n = t.degree();
  if (n > kMaxEncodableDegree) throw std::invalid_argument("encode supports degree <= 8");
  std::uint32_t code = 0;
  for (int i = 0; i < n; ++i) code = code * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(t.targets()[i] - 1);
  return code;
}

Transformation decode(int degree, std::uint32_t code) {
  if (degree < 1 || degree > kMaxEncodableDegree) {
    throw std::invalid_argument("decode supports degrees 1..8");
  }
  int tgt[kMaxEncodableDegree];
  decode_raw(degree, code, tgt);
  std::vector<int> v(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) v[i] = tgt[i] + 1;
  return Transformation(std::move(v));
}

}  // namespace synsem
