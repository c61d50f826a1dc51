#include "qlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotSupPreserving: return "NotSupPreserving";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BottomNotAbsorbed: return "BottomNotAbsorbed";
    case ErrorKind::NotDualizing: return "NotDualizing";
    case ErrorKind::CoincidenceFailed: return "CoincidenceFailed";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotADuality: return "NotADuality";
    case ErrorKind::NotANucleus: return "NotANucleus";
    case ErrorKind::NotSerreGC: return "NotSerreGC";
    case ErrorKind::NotSerreDualityOnQuotient: return "NotSerreDualityOnQuotient";
    case ErrorKind::NotAssociativeRelation: return "NotAssociativeRelation";
    case ErrorKind::NotWeaklySymmetric: return "NotWeaklySymmetric";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::NotDistinctAtoms: return "NotDistinctAtoms";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Map Map::identity(std::size_t n) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), Elem{0});
  return Map(std::move(img));
}

Map Map::constant(std::size_t n, Elem value) { return Map(std::vector<Elem>(n, value)); }

Map compose(const Map& g, const Map& f) {
  Map h;
  h.image.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h.image[x] = g.image[f.image[x]];
  return h;
}

// ---------------------------------------------------------------------------

FiniteLattice FiniteLattice::from_covers(std::size_t n,
                                         std::span<const std::pair<Elem, Elem>> covers,
                                         std::vector<std::string> labels) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorKind::InvalidInput, "cover pair references an element >= n", {lo, hi});
    leq[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorKind::CycleDetected, "cover relation is cyclic",
                    {static_cast<Elem>(i), static_cast<Elem>(j)});
  return from_order(n, std::move(leq), std::move(labels));
}

FiniteLattice FiniteLattice::from_order(std::size_t n, std::vector<std::uint8_t> leq,
                                        std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorKind::NotBounded, "empty poset has no bottom");
  if (leq.size() != n * n) throw Error(ErrorKind::InvalidInput, "order table has wrong shape");
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::InvalidInput, "label count differs from element count");
  auto at = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };
  for (std::size_t x = 0; x < n; ++x) {
    if (!at(x, x)) throw Error(ErrorKind::InvalidInput, "order is not reflexive", {Elem(x)});
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && at(x, y) && at(y, x))
        throw Error(ErrorKind::CycleDetected, "order is not antisymmetric", {Elem(x), Elem(y)});
      if (!at(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (at(y, z) && !at(x, z))
          throw Error(ErrorKind::InvalidInput, "order is not transitive",
                      {Elem(x), Elem(y), Elem(z)});
    }
  }

  FiniteLattice L;
  L.n_ = n;
  L.leq_ = std::move(leq);
  L.labels_ = std::move(labels);

  std::optional<Elem> bot, top;
  for (std::size_t x = 0; x < n; ++x) {
    bool below_all = true, above_all = true;
    for (std::size_t y = 0; y < n; ++y) {
      below_all = below_all && L.leq(Elem(x), Elem(y));
      above_all = above_all && L.leq(Elem(y), Elem(x));
    }
    if (below_all) bot = Elem(x);
    if (above_all) top = Elem(x);
  }
  if (!bot || !top) throw Error(ErrorKind::NotBounded, "poset lacks a bottom or a top");
  L.bot_ = *bot;
  L.top_ = *top;

  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      std::optional<Elem> lub, glb;
      for (std::size_t z = 0; z < n; ++z) {
        Elem e(z);
        if (L.leq(Elem(x), e) && L.leq(Elem(y), e) && (!lub || L.leq(e, *lub))) lub = e;
        if (L.leq(e, Elem(x)) && L.leq(e, Elem(y)) && (!glb || L.leq(*glb, e))) glb = e;
      }
      // The candidate is only a least bound if every other bound lies above it.
      for (std::size_t z = 0; z < n; ++z) {
        Elem e(z);
        if (L.leq(Elem(x), e) && L.leq(Elem(y), e) && !L.leq(*lub, e))
          throw Error(ErrorKind::NotALattice, "pair lacks a least upper bound",
                      {Elem(x), Elem(y)});
        if (L.leq(e, Elem(x)) && L.leq(e, Elem(y)) && !L.leq(e, *glb))
          throw Error(ErrorKind::NotALattice, "pair lacks a greatest lower bound",
                      {Elem(x), Elem(y)});
      }
      L.join_[x * n + y] = L.join_[y * n + x] = *lub;
      L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
    }
  }
  return L;
}

Elem FiniteLattice::join_of(std::span<const Elem> xs) const {
  Elem acc = bot_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteLattice::meet_of(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_of(const ElemSet& xs) const {
  Elem acc = bot_;
  for (auto i = xs.find_first(); i != ElemSet::npos; i = xs.find_next(i)) acc = join(acc, Elem(i));
  return acc;
}

Elem FiniteLattice::meet_of(const ElemSet& xs) const {
  Elem acc = top_;
  for (auto i = xs.find_first(); i != ElemSet::npos; i = xs.find_next(i)) acc = meet(acc, Elem(i));
  return acc;
}

std::string FiniteLattice::label(Elem x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool direct = true;
      for (Elem z = 0; z < n_ && direct; ++z) direct = !(lt(x, z) && lt(z, y));
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

std::vector<Elem> FiniteLattice::join_irreducibles() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < n_; ++x) {
    if (x == bot_) continue;
    // x is join-irreducible iff the join of everything strictly below it is not x.
    Elem below = bot_;
    for (Elem y = 0; y < n_; ++y)
      if (lt(y, x)) below = join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

std::vector<Elem> FiniteLattice::atoms() const {
  std::vector<Elem> out;
  for (auto [lo, hi] : covers())
    if (lo == bot_) out.push_back(hi);
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet FiniteLattice::downset(Elem x) const {
  ElemSet s(n_);
  for (Elem y = 0; y < n_; ++y)
    if (leq(y, x)) s.set(y);
  return s;
}

// ---------------------------------------------------------------------------

FiniteLattice chain(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "chain needs k >= 1");
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y) leq[x * k + y] = 1;
  return FiniteLattice::from_order(k, std::move(leq));
}

FiniteLattice boolean_lattice(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "boolean lattice needs k >= 1");
  if (k > 10) throw Error(ErrorKind::BudgetExceeded, "boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = (x & ~y) == 0;
  return FiniteLattice::from_order(n, std::move(leq));
}

FiniteLattice diamond(std::size_t n) {
  const std::size_t size = n + 2;
  const Elem top = static_cast<Elem>(n + 1);
  std::vector<std::pair<Elem, Elem>> covers;
  std::vector<std::string> labels{"bot"};
  if (n == 0) covers.emplace_back(0, top);
  for (Elem a = 1; a <= n; ++a) {
    covers.emplace_back(0, a);
    covers.emplace_back(a, top);
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + a - 1))
                             : "a" + std::to_string(a));
  }
  labels.emplace_back("top");
  return FiniteLattice::from_covers(size, covers, std::move(labels));
}

FiniteLattice pentagon() {
  const std::pair<Elem, Elem> covers[] = {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}};
  return FiniteLattice::from_covers(5, covers, {"bot", "a", "b", "c", "top"});
}

FiniteLattice dual(const FiniteLattice& L) {
  const std::size_t n = L.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = L.leq(y, x);
  return FiniteLattice::from_order(n, std::move(leq), L.labels());
}

FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2) {
  const std::size_t n1 = L1.size(), n2 = L2.size(), n = n1 * n2;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      leq[p * n + q] = L1.leq(Elem(p / n2), Elem(q / n2)) && L2.leq(Elem(p % n2), Elem(q % n2));
  std::vector<std::string> labels;
  if (!L1.labels().empty() || !L2.labels().empty())
    for (std::size_t p = 0; p < n; ++p)
      labels.push_back("(" + L1.label(Elem(p / n2)) + "," + L2.label(Elem(p % n2)) + ")");
  return FiniteLattice::from_order(n, std::move(leq), std::move(labels));
}

FiniteLattice induced_lattice(const FiniteLattice& L, std::span<const Elem> subset) {
  const std::size_t k = subset.size();
  std::vector<std::uint8_t> leq(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = L.leq(subset[i], subset[j]);
  std::vector<std::string> labels;
  if (!L.labels().empty())
    for (Elem x : subset) labels.push_back(L.label(x));
  return FiniteLattice::from_order(k, std::move(leq), std::move(labels));
}

bool is_distributive(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

bool is_monotone(const FiniteLattice& src, const FiniteLattice& dst, const Map& f) {
  const Elem n = static_cast<Elem>(src.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (src.leq(x, y) && !dst.leq(f(x), f(y))) return false;
  return true;
}

bool is_sup_preserving(const FiniteLattice& src, const FiniteLattice& dst, const Map& f) {
  if (f(src.bot()) != dst.bot()) return false;
  const Elem n = static_cast<Elem>(src.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (f(src.join(x, y)) != dst.join(f(x), f(y))) return false;
  return true;
}

bool is_meet_preserving(const FiniteLattice& src, const FiniteLattice& dst, const Map& f) {
  if (f(src.top()) != dst.top()) return false;
  const Elem n = static_cast<Elem>(src.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (f(src.meet(x, y)) != dst.meet(f(x), f(y))) return false;
  return true;
}

bool is_closure_operator(const FiniteLattice& L, const Map& f) {
  if (!is_monotone(L, f)) return false;
  for (Elem x = 0; x < L.size(); ++x)
    if (!L.leq(x, f(x)) || f(f(x)) != f(x)) return false;
  return true;
}

Map right_adjoint(const FiniteLattice& src, const FiniteLattice& dst, const Map& f) {
  if (!is_sup_preserving(src, dst, f))
    throw Error(ErrorKind::NotSupPreserving, "right adjoint requires a sup-preserving map");
  Map r;
  r.image.resize(dst.size());
  for (Elem y = 0; y < dst.size(); ++y) {
    Elem acc = src.bot();
    for (Elem x = 0; x < src.size(); ++x)
      if (dst.leq(f(x), y)) acc = src.join(acc, x);
    r.image[y] = acc;
  }
  return r;
}

Map left_adjoint(const FiniteLattice& src, const FiniteLattice& dst, const Map& g) {
  if (!is_meet_preserving(src, dst, g))
    throw Error(ErrorKind::NotMeetPreserving, "left adjoint requires a meet-preserving map");
  Map l;
  l.image.resize(dst.size());
  for (Elem x = 0; x < dst.size(); ++x) {
    Elem acc = src.top();
    for (Elem y = 0; y < src.size(); ++y)
      if (dst.leq(x, g(y))) acc = src.meet(acc, y);
    l.image[x] = acc;
  }
  return l;
}

bool pointwise_leq(const FiniteLattice& L, const Map& f, const Map& g) {
  for (Elem x = 0; x < f.size(); ++x)
    if (!L.leq(f(x), g(x))) return false;
  return true;
}

Map pointwise_join(const FiniteLattice& L, const Map& f, const Map& g) {
  Map h;
  h.image.resize(f.size());
  for (Elem x = 0; x < f.size(); ++x) h.image[x] = L.join(f(x), g(x));
  return h;
}

Map pointwise_meet(const FiniteLattice& L, const Map& f, const Map& g) {
  Map h;
  h.image.resize(f.size());
  for (Elem x = 0; x < f.size(); ++x) h.image[x] = L.meet(f(x), g(x));
  return h;
}

double sup_endomap_search_space(const FiniteLattice& L) {
  return std::pow(static_cast<double>(L.size()),
                  static_cast<double>(L.join_irreducibles().size()));
}

std::vector<Map> enumerate_sup_endomaps(const FiniteLattice& L, const Budget& budget) {
  if (sup_endomap_search_space(L) > static_cast<double>(budget.max_candidates))
    throw Error(ErrorKind::BudgetExceeded, "sup-endomap search space exceeds the candidate budget");
  const std::size_t n = L.size();
  const std::vector<Elem> ji = L.join_irreducibles();
  const std::size_t k = ji.size();

  std::vector<Map> out;
  std::vector<Elem> assign(k, 0);
  Map f;
  f.image.resize(n);
  while (true) {
    for (Elem x = 0; x < n; ++x) {
      Elem acc = L.bot();
      for (std::size_t i = 0; i < k; ++i)
        if (L.leq(ji[i], x)) acc = L.join(acc, assign[i]);
      f.image[x] = acc;
    }
    bool ok = true;
    // The extension must agree with the assignment, or it is a duplicate.
    for (std::size_t i = 0; i < k && ok; ++i) ok = f(ji[i]) == assign[i];
    if (ok && is_sup_preserving(L, f)) out.push_back(f);

    std::size_t pos = 0;
    while (pos < k && ++assign[pos] == n) assign[pos++] = 0;
    if (pos == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> enumerate_endofunctions(std::size_t n, const Budget& budget) {
  if (std::pow(double(n), double(n)) > static_cast<double>(budget.max_candidates))
    throw Error(ErrorKind::BudgetExceeded, "endofunction space exceeds the candidate budget");
  std::vector<Map> out;
  std::vector<Elem> img(n, 0);
  while (true) {
    out.emplace_back(img);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++img[pos] < n) break;
      img[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<Map> order_automorphisms(const FiniteLattice& L) {
  // Automorphisms preserve all joins, so they are among the sup-endomaps.
  std::vector<Map> out;
  for (const Map& f : enumerate_sup_endomaps(L)) {
    std::vector<Elem> sorted = f.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    bool reflects = true;
    for (Elem x = 0; x < L.size() && reflects; ++x)
      for (Elem y = 0; y < L.size() && reflects; ++y)
        reflects = L.leq(x, y) == L.leq(f(x), f(y));
    if (reflects) out.push_back(f);
  }
  return out;
}

}  // namespace qlab
