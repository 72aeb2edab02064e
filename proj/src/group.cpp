#include "cyclo/group.hpp"

#include <algorithm>
#include <mutex>
#include <atomic>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

std::atomic<std::uint64_t> g_order_cap{std::uint64_t{1} << 14};

using Storage = Element::storage;

Element concat(const Element& a, const Element& b) {
  Storage s(a.code().begin(), a.code().end());
  s.insert(s.end(), b.code().begin(), b.code().end());
  return Element(std::move(s));
}

Element slice(const Element& e, std::size_t from, std::size_t count) {
  auto c = e.code().subspan(from, count);
  return Element(Storage(c.begin(), c.end()));
}

Element append_bit(const Element& a, Element::value_type bit) {
  Storage s(a.code().begin(), a.code().end());
  s.push_back(bit);
  return Element(std::move(s));
}

std::uint64_t checked_order(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > order_cap() / a) {
    throw Error(Errc::cap_exceeded, "group order exceeds the configured cap of " +
                                        std::to_string(order_cap()));
  }
  return a * b;
}

std::uint64_t pow2(unsigned n) { return std::uint64_t{1} << n; }

// ---------------------------------------------------------------------------

class AbelianImpl final : public detail::GroupImpl {
 public:
  explicit AbelianImpl(std::vector<std::uint32_t> moduli) {
    radices_ = std::move(moduli);
    order_ = 1;
    for (auto m : radices_) order_ = checked_order(order_, m);
  }

  GroupKind kind() const noexcept override { return GroupKind::abelian; }
  std::uint64_t order() const noexcept override { return order_; }
  bool known_abelian() const noexcept override { return true; }

  Element identity() const override {
    return Element(Storage(radices_.size(), 0));
  }

  Element multiply(const Element& a, const Element& b) const override {
    Storage s(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      s[i] = static_cast<Element::value_type>(
          (std::uint64_t{a[i]} + b[i]) % radices_[i]);
    }
    return Element(std::move(s));
  }

  Element invert(const Element& a) const override {
    Storage s(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      s[i] = (radices_[i] - a[i]) % radices_[i];
    }
    return Element(std::move(s));
  }

 private:
  std::uint64_t order_;
};

// x^i y^e with y x^j = x^{tj} y and y^2 = x^s.
class MetacyclicImpl final : public detail::GroupImpl {
 public:
  MetacyclicImpl(std::uint64_t m, std::uint64_t s, std::uint64_t t)
      : m_(m), s_(s), t_(t) {
    radices_ = {static_cast<std::uint32_t>(m), 2};
    order_ = checked_order(m, 2);
  }

  GroupKind kind() const noexcept override { return GroupKind::metacyclic2; }
  std::uint64_t order() const noexcept override { return order_; }
  Element identity() const override { return {0, 0}; }

  Element multiply(const Element& a, const Element& b) const override {
    if (a[1] == 0) return make((a[0] + b[0]) % m_, b[1]);
    std::uint64_t i = (a[0] + t_ * b[0] + s_ * b[1]) % m_;
    return make(i, (1 + b[1]) % 2);
  }

  Element invert(const Element& a) const override {
    if (a[1] == 0) return make((m_ - a[0]) % m_, 0);
    // (i,1)^-1 = (-t(i+s), 1)
    std::uint64_t j = (t_ * ((a[0] + s_) % m_)) % m_;
    return make((m_ - j) % m_, 1);
  }

 private:
  static Element make(std::uint64_t i, std::uint64_t e) {
    return {static_cast<Element::value_type>(i), static_cast<Element::value_type>(e)};
  }

  std::uint64_t m_, s_, t_;
  std::uint64_t order_;
};

// A extended by an element g inverting A with g^2 = z (z = identity gives the
// generalized dihedral group, z an involution the generalized dicyclic one).
class TwistedImpl final : public detail::GroupImpl {
 public:
  TwistedImpl(Group a, Element z, GroupKind kind)
      : a_(std::move(a)), z_(std::move(z)), kind_(kind) {
    radices_.assign(a_.radices().begin(), a_.radices().end());
    radices_.push_back(2);
    width_ = a_.radices().size();
    order_ = checked_order(a_.order(), 2);
  }

  GroupKind kind() const noexcept override { return kind_; }
  std::uint64_t order() const noexcept override { return order_; }
  Element identity() const override { return append_bit(a_.identity(), 0); }

  Element multiply(const Element& x, const Element& y) const override {
    Element a = slice(x, 0, width_);
    Element b = slice(y, 0, width_);
    if (x[width_] == 0) return append_bit(a_.multiply(a, b), y[width_]);
    Element r = a_.multiply(a, a_.invert(b));
    if (y[width_] == 0) return append_bit(r, 1);
    return append_bit(a_.multiply(r, z_), 0);
  }

  Element invert(const Element& x) const override {
    Element a = slice(x, 0, width_);
    if (x[width_] == 0) return append_bit(a_.invert(a), 0);
    return append_bit(a_.multiply(a, z_), 1);
  }

  bool is_canonical(const Element& e) const override {
    return a_.contains(slice(e, 0, width_));
  }

 private:
  Group a_;
  Element z_;
  GroupKind kind_;
  std::size_t width_;
  std::uint64_t order_;
};

class DirectImpl final : public detail::GroupImpl {
 public:
  DirectImpl(Group g, Group h) : g_(std::move(g)), h_(std::move(h)) {
    radices_.assign(g_.radices().begin(), g_.radices().end());
    radices_.insert(radices_.end(), h_.radices().begin(), h_.radices().end());
    width_ = g_.radices().size();
    order_ = checked_order(g_.order(), h_.order());
  }

  GroupKind kind() const noexcept override { return GroupKind::direct_product; }
  std::uint64_t order() const noexcept override { return order_; }
  bool known_abelian() const noexcept override { return abelian_; }

  Element identity() const override { return concat(g_.identity(), h_.identity()); }

  Element multiply(const Element& a, const Element& b) const override {
    return concat(g_.multiply(left(a), left(b)), h_.multiply(right(a), right(b)));
  }

  Element invert(const Element& a) const override {
    return concat(g_.invert(left(a)), h_.invert(right(a)));
  }

  bool is_canonical(const Element& e) const override {
    return g_.contains(left(e)) && h_.contains(right(e));
  }

  void set_abelian(bool v) { abelian_ = v; }

 private:
  Element left(const Element& e) const { return slice(e, 0, width_); }
  Element right(const Element& e) const {
    return slice(e, width_, e.size() - width_);
  }

  Group g_, h_;
  std::size_t width_;
  std::uint64_t order_;
  bool abelian_ = false;
};

class QuotientImpl final : public detail::GroupImpl {
 public:
  QuotientImpl(Group parent, std::vector<Element> normal, GroupKind kind)
      : parent_(std::move(parent)), normal_(std::move(normal)), kind_(kind) {
    radices_.assign(parent_.radices().begin(), parent_.radices().end());
    order_ = parent_.order() / normal_.size();
  }

  GroupKind kind() const noexcept override { return kind_; }
  std::uint64_t order() const noexcept override { return order_; }
  bool known_abelian() const noexcept override { return abelian_; }

  Element identity() const override { return parent_.identity(); }

  Element multiply(const Element& a, const Element& b) const override {
    return canonical(parent_.multiply(a, b));
  }

  Element invert(const Element& a) const override {
    return canonical(parent_.invert(a));
  }

  bool is_canonical(const Element& e) const override {
    const auto& reps = table().reps;
    return std::binary_search(reps.begin(), reps.end(), e);
  }

  const std::vector<Element>* enumerated() const override { return &table().reps; }

  /// Least encoding in the coset eN.
  Element canonical(const Element& e) const {
    const auto& t = table();
    auto it = std::lower_bound(t.parent.begin(), t.parent.end(), e);
    if (it == t.parent.end() || *it != e) {
      throw Error(Errc::invalid_element, e.str() + " is not an element of the parent group");
    }
    return t.parent[t.rep_of[static_cast<std::size_t>(it - t.parent.begin())]];
  }

  void set_abelian(bool v) { abelian_ = v; }

 private:
  // Parent elements with the index of their coset representative.
  struct CosetTable {
    std::vector<Element> parent;
    std::vector<std::size_t> rep_of;
    std::vector<Element> reps;
  };

  const CosetTable& table() const {
    std::call_once(built_, [this] {
      auto& t = table_;
      t.parent = parent_.elements();
      constexpr auto unset = static_cast<std::size_t>(-1);
      t.rep_of.assign(t.parent.size(), unset);
      std::vector<std::size_t> coset;
      for (std::size_t i = 0; i < t.parent.size(); ++i) {
        if (t.rep_of[i] != unset) continue;
        coset.clear();
        for (const auto& n : normal_) {
          const Element c = parent_.multiply(t.parent[i], n);
          coset.push_back(static_cast<std::size_t>(
              std::lower_bound(t.parent.begin(), t.parent.end(), c) - t.parent.begin()));
        }
        const std::size_t rep = *std::min_element(coset.begin(), coset.end());
        for (auto j : coset) t.rep_of[j] = rep;
        t.reps.push_back(t.parent[rep]);
      }
      std::sort(t.reps.begin(), t.reps.end());
    });
    return table_;
  }

  Group parent_;
  std::vector<Element> normal_;
  GroupKind kind_;
  std::uint64_t order_;
  bool abelian_ = false;
  mutable std::once_flag built_;
  mutable CosetTable table_;
};

std::vector<std::uint32_t> narrow_moduli(std::span<const std::uint64_t> moduli) {
  std::vector<std::uint32_t> out;
  out.reserve(moduli.size());
  for (auto m : moduli) {
    if (m == 0) throw Error(Errc::invalid_parameter, "cyclic factor of order 0");
    if (m > order_cap()) {
      throw Error(Errc::cap_exceeded, "cyclic factor of order " +
                                          std::to_string(m) + " exceeds the cap");
    }
    out.push_back(static_cast<std::uint32_t>(m));
  }
  return out;
}

bool is_central(const Group& g, const Element& z) {
  for (const auto& x : g.elements()) {
    if (g.multiply(x, z) != g.multiply(z, x)) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Element::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (i) os << ',';
    os << code_[i];
  }
  os << ')';
  return os.str();
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e.code()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::string_view kind_name(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::abelian: return "abelian";
    case GroupKind::metacyclic2: return "metacyclic2";
    case GroupKind::gen_dihedral: return "gen-dihedral";
    case GroupKind::gen_dicyclic: return "gen-dicyclic";
    case GroupKind::direct_product: return "direct-product";
    case GroupKind::central_quotient: return "central-quotient";
    case GroupKind::quotient: return "quotient";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

AbelianShape AbelianShape::make(std::uint64_t p, std::vector<std::uint32_t> partition) {
  if (!is_prime(p)) {
    throw Error(Errc::invalid_parameter, std::to_string(p) + " is not prime");
  }
  if (partition.empty()) {
    throw Error(Errc::invalid_parameter, "abelian shape needs at least one part");
  }
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] == 0 || (i > 0 && partition[i] < partition[i - 1])) {
      throw Error(Errc::invalid_parameter,
                  "abelian shape parts must be positive and nondecreasing");
    }
  }
  return AbelianShape{p, std::move(partition)};
}

std::uint32_t AbelianShape::total() const {
  return std::accumulate(partition.begin(), partition.end(), std::uint32_t{0});
}

std::vector<std::uint64_t> AbelianShape::moduli() const {
  std::vector<std::uint64_t> out;
  for (auto d : partition) {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      if (m > order_cap() / p) {
        throw Error(Errc::cap_exceeded, "abelian factor exceeds the order cap");
      }
      m *= p;
    }
    out.push_back(m);
  }
  return out;
}

std::string AbelianShape::str() const {
  std::ostringstream os;
  os << "p=" << p << " (";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) os << ',';
    os << partition[i];
  }
  os << ')';
  return os.str();
}

std::uint64_t order_cap() noexcept { return g_order_cap.load(); }
void set_order_cap(std::uint64_t cap) noexcept { g_order_cap.store(cap); }

bool detail::GroupImpl::well_formed(const Element& e) const {
  if (e.size() != radices_.size()) return false;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    if (e[i] >= radices_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Group::Group(std::shared_ptr<const detail::GroupImpl> impl,
             std::optional<Element> involution)
    : impl_(std::move(impl)), involution_(std::move(involution)) {}

std::uint64_t Group::order() const noexcept { return impl_->order(); }
GroupKind Group::kind() const noexcept { return impl_->kind(); }
Element Group::identity() const { return impl_->identity(); }

Element Group::multiply(const Element& a, const Element& b) const {
  return impl_->multiply(a, b);
}

Element Group::invert(const Element& a) const { return impl_->invert(a); }

Element Group::power(const Element& a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

Element Group::commutator(const Element& a, const Element& b) const {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

bool Group::contains(const Element& e) const {
  return impl_->well_formed(e) && impl_->is_canonical(e);
}

std::span<const std::uint32_t> Group::radices() const noexcept {
  return impl_->radices();
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  if (const auto* cached = impl_->enumerated()) out = *cached;
  const auto& r = impl_->radices();
  out.reserve(order());
  Storage cur(r.size(), 0);
  // Odometer over the mixed-radix space, last coordinate fastest, so the
  // output is in increasing encoding order.
  bool more = !r.empty() && out.empty();
  while (more) {
    Element e(cur);
    if (impl_->is_canonical(e)) out.push_back(std::move(e));
    more = false;
    for (std::size_t i = r.size(); i-- > 0;) {
      if (++cur[i] < r[i]) {
        more = true;
        break;
      }
      cur[i] = 0;
    }
  }
  if (out.size() != order()) {
    throw Error(Errc::internal_inconsistency,
                "enumeration found " + std::to_string(out.size()) +
                    " elements, expected " + std::to_string(order()));
  }
  return out;
}

Group Group::with_designated_involution(std::optional<Element> z) const {
  if (z) {
    if (!contains(*z) || *z == identity() || multiply(*z, *z) != identity()) {
      throw Error(Errc::invalid_parameter, z->str() + " is not an involution");
    }
  }
  return Group(impl_, std::move(z));
}

bool Group::is_abelian() const {
  if (impl_->known_abelian()) return true;
  auto elems = elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (multiply(elems[i], elems[j]) != multiply(elems[j], elems[i])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Group build_cyclic(std::uint64_t m) {
  const std::uint64_t moduli[] = {m};
  return build_abelian(std::span<const std::uint64_t>(moduli));
}

Group build_abelian(std::initializer_list<std::uint64_t> moduli) {
  return build_abelian(std::span<const std::uint64_t>(moduli.begin(), moduli.size()));
}

Group build_abelian(std::span<const std::uint64_t> moduli) {
  if (moduli.empty()) {
    throw Error(Errc::invalid_parameter, "abelian group needs at least one factor");
  }
  auto impl = std::make_shared<AbelianImpl>(narrow_moduli(moduli));
  std::optional<Element> z;
  if (moduli.back() % 2 == 0) {
    Storage code(moduli.size(), 0);
    code.back() = static_cast<Element::value_type>(moduli.back() / 2);
    z = Element(std::move(code));
  }
  return Group(std::move(impl), std::move(z));
}

Group build_abelian(const AbelianShape& shape) {
  auto moduli = shape.moduli();
  return build_abelian(std::span<const std::uint64_t>(moduli));
}

Group direct_product(const Group& g, const Group& h) {
  auto impl = std::make_shared<DirectImpl>(g, h);
  impl->set_abelian(g.kind() == GroupKind::abelian && h.kind() == GroupKind::abelian);
  std::optional<Element> z;
  if (h.designated_involution()) {
    z = concat(g.identity(), *h.designated_involution());
  } else if (g.designated_involution()) {
    z = concat(*g.designated_involution(), h.identity());
  }
  return Group(std::move(impl), std::move(z));
}

Group build_metacyclic2(std::uint64_t m, std::uint64_t s, std::uint64_t t) {
  if (m == 0) throw Error(Errc::invalid_parameter, "metacyclic modulus must be positive");
  if (m > order_cap()) throw Error(Errc::cap_exceeded, "metacyclic modulus exceeds the cap");
  if (s >= m || t >= m) {
    throw Error(Errc::invalid_presentation, "s and t must be residues mod m");
  }
  if ((t * t) % m != 1 % m) {
    throw Error(Errc::invalid_presentation, "t^2 != 1 (mod m)");
  }
  if ((s * t) % m != s) {
    throw Error(Errc::invalid_presentation, "s*t != s (mod m)");
  }
  auto impl = std::make_shared<MetacyclicImpl>(m, s, t);
  std::optional<Element> z;
  if (m % 2 == 0) {
    z = Element{static_cast<Element::value_type>(m / 2), 0};
  }
  return Group(std::move(impl), std::move(z));
}

Group dihedral(unsigned n) {
  if (n < 3 || n > 40) throw Error(Errc::invalid_parameter, "dihedral D_{2^n} needs n >= 3");
  std::uint64_t m = pow2(n - 1);
  return build_metacyclic2(m, 0, m - 1);
}

Group generalized_quaternion(unsigned n) {
  if (n < 3 || n > 40) {
    throw Error(Errc::invalid_parameter, "generalized quaternion Q_{2^n} needs n >= 3");
  }
  std::uint64_t m = pow2(n - 1);
  return build_metacyclic2(m, pow2(n - 2), m - 1);
}

Group quasi_dihedral(unsigned n) {
  if (n < 4 || n > 40) {
    throw Error(Errc::invalid_parameter, "quasi-dihedral S_{2^n} needs n >= 4");
  }
  return build_metacyclic2(pow2(n - 1), 0, pow2(n - 2) - 1);
}

Group modular(unsigned n) {
  if (n < 4 || n > 40) throw Error(Errc::invalid_parameter, "modular M(2^n) needs n >= 4");
  return build_metacyclic2(pow2(n - 1), 0, pow2(n - 2) + 1);
}

Group build_generalized_dihedral(const Group& a) {
  if (!a.is_abelian()) {
    throw Error(Errc::invalid_parameter, "generalized dihedral needs an abelian group");
  }
  auto impl = std::make_shared<TwistedImpl>(a, a.identity(), GroupKind::gen_dihedral);
  std::optional<Element> z;
  if (a.designated_involution()) z = append_bit(*a.designated_involution(), 0);
  return Group(std::move(impl), std::move(z));
}

Group build_generalized_dicyclic(const Group& a, const Element& z) {
  if (!a.is_abelian()) {
    throw Error(Errc::invalid_parameter, "generalized dicyclic needs an abelian group");
  }
  if (!a.contains(z) || z == a.identity() || a.multiply(z, z) != a.identity()) {
    throw Error(Errc::invalid_parameter, z.str() + " is not an involution of A");
  }
  auto impl = std::make_shared<TwistedImpl>(a, z, GroupKind::gen_dicyclic);
  return Group(std::move(impl), append_bit(z, 0));
}

Element default_dicyclic_involution(const Group& a) {
  if (!a.is_abelian()) {
    throw Error(Errc::invalid_parameter, "dicyclic base group must be abelian");
  }
  std::uint64_t best_order = 0;
  Element best;
  for (const auto& g : a.elements()) {
    auto o = element_order(a, g);
    if (o > best_order) {
      best_order = o;
      best = g;
    }
  }
  if (best_order % 2 != 0) {
    throw Error(Errc::invalid_parameter, "group of odd order has no involution");
  }
  return a.power(best, best_order / 2);
}

Group central_product(const Group& g, const Group& h) {
  const auto& zg = g.designated_involution();
  const auto& zh = h.designated_involution();
  if (!zg || !zh) {
    throw Error(Errc::invalid_parameter,
                "central product needs a designated involution on both factors");
  }
  if (!is_central(g, *zg) || !is_central(h, *zh)) {
    throw Error(Errc::invalid_parameter, "designated involution is not central");
  }
  Group product = direct_product(g, h);
  std::vector<Element> normal = {product.identity(), concat(*zg, *zh)};
  std::sort(normal.begin(), normal.end());
  auto impl = std::make_shared<QuotientImpl>(product, normal, GroupKind::central_quotient);
  impl->set_abelian(g.kind() == GroupKind::abelian && h.kind() == GroupKind::abelian);
  Element z = impl->canonical(concat(*zg, h.identity()));
  return Group(std::move(impl), std::move(z));
}

namespace {

std::vector<Element> closure(const Group& g, const std::vector<Element>& gens) {
  std::unordered_set<Element, ElementHash> seen{g.identity()};
  std::vector<Element> work{g.identity()};
  while (!work.empty()) {
    const Element x = std::move(work.back());
    work.pop_back();
    for (const auto& s : gens) {
      Element y = g.multiply(x, s);
      if (seen.insert(y).second) work.push_back(std::move(y));
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Elements of `set` (sorted) chosen greedily until they generate it or run out.
std::vector<Element> greedy_generators(const Group& g, const std::vector<Element>& set) {
  std::vector<Element> gens;
  std::vector<Element> span{g.identity()};
  for (const auto& x : set) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

}  // namespace

Group quotient(const Group& g, std::span<const Element> normal_subgroup) {
  std::vector<Element> n(normal_subgroup.begin(), normal_subgroup.end());
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  const Element id = g.identity();
  if (n.empty() || n.front() != id) {
    throw Error(Errc::not_a_subgroup, "subgroup must contain the identity");
  }
  for (const auto& x : n) {
    if (!g.contains(x)) throw Error(Errc::invalid_element, x.str() + " is not in G");
  }
  auto member = [&](const Element& x) { return std::binary_search(n.begin(), n.end(), x); };
  // N is a subgroup iff the closure of a generating subset is exactly N, and
  // normal iff conjugating those generators by generators of G stays in N.
  const auto n_gens = greedy_generators(g, n);
  if (closure(g, n_gens) != n) {
    throw Error(Errc::not_a_subgroup, "subset is not closed under multiplication");
  }
  for (const auto& s : greedy_generators(g, g.elements())) {
    const Element si = g.invert(s);
    for (const auto& a : n_gens) {
      if (!member(g.multiply(g.multiply(si, a), s))) {
        throw Error(Errc::not_normal, "subgroup is not normal");
      }
    }
  }
  auto impl = std::make_shared<QuotientImpl>(g, n, GroupKind::quotient);
  impl->set_abelian(g.kind() == GroupKind::abelian);
  std::optional<Element> z;
  if (const auto& gz = g.designated_involution(); gz && !member(*gz)) {
    z = impl->canonical(*gz);
  }
  return Group(std::move(impl), std::move(z));
}

std::uint64_t element_order(const Group& g, const Element& e) {
  if (!g.contains(e)) {
    throw Error(Errc::invalid_element, e.str() + " is not an element of the group");
  }
  const Element id = g.identity();
  Element x = e;
  std::uint64_t k = 1;
  while (x != id) {
    x = g.multiply(x, e);
    if (++k > g.order()) {
      throw Error(Errc::internal_inconsistency, "element order exceeds group order");
    }
  }
  return k;
}

}  // namespace cyclo
