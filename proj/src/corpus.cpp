#include "cyclo/corpus.hpp"

#include <algorithm>
#include <set>

#include "cyclo/descriptor.hpp"

namespace cyclo::corpus {

namespace {

void extend(unsigned remaining, std::uint32_t min_part, std::vector<std::uint32_t>& cur,
            std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t part = min_part; part <= remaining; ++part) {
    cur.push_back(part);
    extend(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partitions(unsigned n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  if (n > 0) extend(n, 1, cur, out);
  return out;
}

std::string abelian_descriptor(const AbelianShape& shape) {
  std::string s;
  const auto& parts = shape.partition;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!s.empty()) s += " x ";
    s += "Z" + std::to_string(ipow(shape.p, parts[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::vector<AbelianShape> abelian_shapes(std::uint64_t p, std::uint64_t cap) {
  std::vector<AbelianShape> out;
  std::uint64_t order = p;
  for (unsigned n = 1; order <= cap; ++n, order *= p) {
    for (auto& part : partitions(n)) out.push_back(AbelianShape::make(p, std::move(part)));
  }
  return out;
}

bool is_elementary_plus(const AbelianShape& shape, std::uint32_t top) {
  const auto& d = shape.partition;
  return d.back() == top &&
         std::all_of(d.begin(), d.end() - 1, [](std::uint32_t x) { return x == 1; });
}

std::vector<std::string> standard_corpus(std::uint64_t abelian_cap, std::uint64_t family_cap) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& text) {
    auto d = canonicalize(parse_descriptor(text));
    if (predicted_order(d) > std::max(abelian_cap, family_cap)) return;
    auto key = to_string(d);
    if (seen.insert(key).second) out.push_back(key);
  };

  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& s : abelian_shapes(p, abelian_cap)) add(abelian_descriptor(s));
  }
  for (std::uint64_t order = 8; order <= family_cap; order *= 2) {
    add("D" + std::to_string(order));
    add("Q" + std::to_string(order));
    if (order >= 16) {
      add("SD" + std::to_string(order));
      add("M" + std::to_string(order));
    }
  }
  for (std::uint64_t order = 8; order <= family_cap; order *= 4) {
    add("ES+(" + std::to_string(order) + ")");
    add("ES-(" + std::to_string(order) + ")");
  }
  for (std::uint64_t order = 16; order <= family_cap; order *= 4) {
    add("AES(" + std::to_string(order) + ")");
  }
  for (const auto& s : abelian_shapes(2, family_cap / 2)) {
    const auto a = abelian_descriptor(s);
    add("Dih(" + a + ")");
    add("Dic(" + a + ")");
  }
  const char* bases[] = {"D8", "Q8", "D16", "Q16", "SD16", "M16", "AES(16)", "ES+(32)",
                         "ES-(32)", "Dih(Z2 x Z8)", "Dic(Z4^2)"};
  for (const char* base : bases) {
    auto d = canonicalize(parse_descriptor(base));
    const std::uint64_t order = predicted_order(d);
    for (unsigned k = 1; order * ipow(2, k) <= family_cap; ++k) {
      add(std::string(base) + " x Z2^" + std::to_string(k));
    }
  }
  const char* extras[] = {"Q8*Q8",     "Q8*Z4",      "D16*Z4",     "Q16*Z4",
                          "D8 x Z4",   "Q8 x Z4",    "D8 x D8",    "D8 x Q8",
                          "D8 x Z3",   "Q8 x Z3",    "Z4 x Z3",    "Z4 x Z5",
                          "Z8 x Z3^2", "Z9 x Z5",    "Dih(Z3)",    "Dih(Z5)",
                          "Dih(Z3^2)", "Dih(Z9)",    "Dih(Z3) x Z2", "Dih(Z3) x Z3",
                          "Dih(Z6)",   "Dic(Z6)",    "Dic(Z12)"};
  for (const char* e : extras) add(e);
  return out;
}

}  // namespace cyclo::corpus
