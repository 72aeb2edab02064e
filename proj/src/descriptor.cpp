#include "cyclo/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "cyclo/census.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

namespace {

const std::vector<std::string> kAtomNames = {"Z", "D", "Q", "SD", "M", "ES+", "ES-",
                                             "AES", "Dih", "Dic", "("};

bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::uint64_t n) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    auto d = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(Errc::syntax_error, {"x", "*", "end of input"});
    return d;
  }

 private:
  GroupDescriptor expr() {
    std::vector<GroupDescriptor> parts{term()};
    while (peek_is("xX")) {
      ++pos_;
      parts.push_back(term());
    }
    return collapse(DescriptorKind::direct, std::move(parts));
  }

  GroupDescriptor term() {
    std::vector<GroupDescriptor> parts{factor()};
    while (peek_is("*")) {
      ++pos_;
      parts.push_back(factor());
    }
    return collapse(DescriptorKind::central, std::move(parts));
  }

  GroupDescriptor factor() {
    GroupDescriptor d = primary();
    if (!peek_is("^")) return d;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const std::uint64_t k = integer();
    if (k == 0) fail_at(Errc::malformed_parameter, at, {"positive repetition count"});
    if (d.kind == DescriptorKind::cyclic) {
      d.kind = DescriptorKind::cyclic_power;
      d.exponent = k;
      return d;
    }
    if (k == 1) return d;
    return GroupDescriptor{DescriptorKind::direct, 1, 1, std::nullopt,
                           std::vector<GroupDescriptor>(k, d)};
  }

  GroupDescriptor primary() {
    skip_ws();
    if (peek_is("(")) {
      ++pos_;
      auto d = expr();
      expect(')');
      return d;
    }
    return atom();
  }

  GroupDescriptor atom() {
    skip_ws();
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_]))));
      ++pos_;
    }
    if (name.empty()) fail(Errc::syntax_error, kAtomNames);

    GroupDescriptor d;
    if (name == "z") {
      d.kind = DescriptorKind::cyclic;
      const std::size_t at = cursor();
      d.param = integer();
      if (d.param == 0) fail_at(Errc::malformed_parameter, at, {"positive modulus"});
    } else if (name == "d" || name == "q" || name == "sd" || name == "m") {
      std::uint64_t min_order = 8;
      if (name == "d") {
        d.kind = DescriptorKind::dihedral;
      } else if (name == "q") {
        d.kind = DescriptorKind::quaternion;
      } else if (name == "sd") {
        d.kind = DescriptorKind::quasi_dihedral;
        min_order = 16;
      } else {
        d.kind = DescriptorKind::modular;
        min_order = 16;
      }
      const std::size_t at = cursor();
      d.param = integer();
      if (!is_pow2(d.param) || d.param < min_order) {
        fail_at(Errc::malformed_parameter, at,
                {"power of two >= " + std::to_string(min_order)});
      }
    } else if (name == "es") {
      if (peek_is("+")) {
        d.kind = DescriptorKind::extraspecial_plus;
      } else if (peek_is("-")) {
        d.kind = DescriptorKind::extraspecial_minus;
      } else {
        fail(Errc::syntax_error, {"+", "-"});
      }
      ++pos_;
      d.param = order_argument(true);
    } else if (name == "aes") {
      d.kind = DescriptorKind::almost_extraspecial;
      d.param = order_argument(false);
    } else if (name == "dih" || name == "dic") {
      d.kind = name == "dih" ? DescriptorKind::gen_dihedral : DescriptorKind::gen_dicyclic;
      expect('(');
      d.children.push_back(expr());
      if (d.kind == DescriptorKind::gen_dicyclic && peek_is(",")) {
        ++pos_;
        d.z_index = integer();
      }
      expect(')');
    } else {
      fail_at(Errc::unknown_atom, start, kAtomNames);
    }
    return d;
  }

  // ES orders are 2^(2r+1), AES orders 2^(2r+2), r >= 1.
  std::uint64_t order_argument(bool odd_power) {
    const bool parens = peek_is("(");
    if (parens) ++pos_;
    const std::size_t at = cursor();
    const std::uint64_t order = integer();
    const unsigned k = log2_exact(order);
    const bool ok = is_pow2(order) && k >= 3 && (k % 2 == 1) == odd_power;
    if (!ok) {
      fail_at(Errc::malformed_parameter, at,
              {odd_power ? "order 2^(2r+1), r >= 1" : "order 2^(2r+2), r >= 1"});
    }
    if (parens) expect(')');
    return order;
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::uint64_t{1} << 58)) {
        fail_at(Errc::malformed_parameter, start, {"integer below 2^58"});
      }
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(Errc::syntax_error, {"integer"});
    return v;
  }

  std::size_t cursor() {
    skip_ws();
    return pos_;
  }

  void expect(char c) {
    if (!peek_is(std::string(1, c).c_str())) fail(Errc::syntax_error, {std::string(1, c)});
    ++pos_;
  }

  bool peek_is(const char* chars) {
    skip_ws();
    return pos_ < text_.size() && std::string_view(chars).find(text_[pos_]) != std::string_view::npos;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(Errc code, std::vector<std::string> expected) {
    skip_ws();
    fail_at(code, pos_, std::move(expected));
  }

  [[noreturn]] void fail_at(Errc code, std::size_t at, std::vector<std::string> expected) {
    std::string msg = std::string(errc_name(code)) + " at offset " + std::to_string(at) +
                      ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += "'" + expected[i] + "'";
    }
    if (at < text_.size()) {
      msg += ", found '" + std::string(text_.substr(at, 1)) + "'";
    } else {
      msg += ", found end of input";
    }
    throw ParseError(code, at, std::move(expected), msg);
  }

  static GroupDescriptor collapse(DescriptorKind kind, std::vector<GroupDescriptor> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return GroupDescriptor{kind, 1, 1, std::nullopt, std::move(parts)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int kind_rank(DescriptorKind k) {
  if (k == DescriptorKind::cyclic_power) return 0;
  return static_cast<int>(k);
}

auto sort_key(const GroupDescriptor& d) {
  return std::make_tuple(kind_rank(d.kind), d.param, d.exponent, to_string(d));
}

std::string wrap_if(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > order_cap() / a) {
    throw Error(Errc::cap_exceeded,
                "descriptor order exceeds the cap of " + std::to_string(order_cap()));
  }
  return a * b;
}

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) { return Parser(text).parse(); }

GroupDescriptor canonicalize(const GroupDescriptor& d) {
  GroupDescriptor out = d;
  out.children.clear();
  for (const auto& c : d.children) out.children.push_back(canonicalize(c));

  switch (out.kind) {
    case DescriptorKind::cyclic_power:
      if (out.exponent == 1) out.kind = DescriptorKind::cyclic;
      break;
    case DescriptorKind::direct: {
      std::vector<GroupDescriptor> flat;
      for (auto& c : out.children) {
        if (c.kind == DescriptorKind::direct) {
          for (auto& cc : c.children) flat.push_back(std::move(cc));
        } else {
          flat.push_back(std::move(c));
        }
      }
      std::stable_sort(flat.begin(), flat.end(),
                       [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
      if (flat.size() == 1) return flat.front();
      out.children = std::move(flat);
      break;
    }
    case DescriptorKind::central: {
      std::vector<GroupDescriptor> flat;
      for (std::size_t i = 0; i < out.children.size(); ++i) {
        auto& c = out.children[i];
        if (i == 0 && c.kind == DescriptorKind::central) {
          for (auto& cc : c.children) flat.push_back(std::move(cc));
        } else {
          flat.push_back(std::move(c));
        }
      }
      if (flat.size() == 1) return flat.front();
      out.children = std::move(flat);
      break;
    }
    default:
      break;
  }
  return out;
}

std::string to_string(const GroupDescriptor& d) {
  const std::string p = std::to_string(d.param);
  switch (d.kind) {
    case DescriptorKind::cyclic: return "Z" + p;
    case DescriptorKind::cyclic_power: return "Z" + p + "^" + std::to_string(d.exponent);
    case DescriptorKind::dihedral: return "D" + p;
    case DescriptorKind::quaternion: return "Q" + p;
    case DescriptorKind::quasi_dihedral: return "SD" + p;
    case DescriptorKind::modular: return "M" + p;
    case DescriptorKind::extraspecial_plus: return "ES+(" + p + ")";
    case DescriptorKind::extraspecial_minus: return "ES-(" + p + ")";
    case DescriptorKind::almost_extraspecial: return "AES(" + p + ")";
    case DescriptorKind::gen_dihedral: return "Dih(" + to_string(d.children.at(0)) + ")";
    case DescriptorKind::gen_dicyclic: {
      std::string s = "Dic(" + to_string(d.children.at(0));
      if (d.z_index) s += ", " + std::to_string(*d.z_index);
      return s + ")";
    }
    case DescriptorKind::direct: {
      std::string s;
      for (std::size_t i = 0; i < d.children.size(); ++i) {
        if (i) s += " x ";
        s += wrap_if(d.children[i].kind == DescriptorKind::direct, to_string(d.children[i]));
      }
      return s;
    }
    case DescriptorKind::central: {
      std::string s;
      for (std::size_t i = 0; i < d.children.size(); ++i) {
        if (i) s += "*";
        const auto k = d.children[i].kind;
        s += wrap_if(k == DescriptorKind::direct || k == DescriptorKind::central,
                     to_string(d.children[i]));
      }
      return s;
    }
  }
  return {};
}

std::string canonical_string(std::string_view text) {
  return to_string(canonicalize(parse_descriptor(text)));
}

std::uint64_t predicted_order(const GroupDescriptor& d) {
  std::uint64_t order = 1;
  switch (d.kind) {
    case DescriptorKind::cyclic:
    case DescriptorKind::dihedral:
    case DescriptorKind::quaternion:
    case DescriptorKind::quasi_dihedral:
    case DescriptorKind::modular:
    case DescriptorKind::extraspecial_plus:
    case DescriptorKind::extraspecial_minus:
    case DescriptorKind::almost_extraspecial:
      order = checked_mul(1, d.param);
      break;
    case DescriptorKind::cyclic_power:
      for (std::uint64_t i = 0; i < d.exponent; ++i) order = checked_mul(order, d.param);
      break;
    case DescriptorKind::gen_dihedral:
    case DescriptorKind::gen_dicyclic:
      order = checked_mul(2, predicted_order(d.children.at(0)));
      break;
    case DescriptorKind::direct:
      for (const auto& c : d.children) order = checked_mul(order, predicted_order(c));
      break;
    case DescriptorKind::central: {
      order = predicted_order(d.children.at(0));
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        order = checked_mul(order, predicted_order(d.children[i])) / 2;
      }
      break;
    }
  }
  return order;
}

namespace {

Group build(const GroupDescriptor& d) {
  switch (d.kind) {
    case DescriptorKind::cyclic: return build_cyclic(d.param);
    case DescriptorKind::cyclic_power: {
      std::vector<std::uint64_t> moduli(d.exponent, d.param);
      return build_abelian(std::span<const std::uint64_t>(moduli));
    }
    case DescriptorKind::dihedral: return dihedral(log2_exact(d.param));
    case DescriptorKind::quaternion: return generalized_quaternion(log2_exact(d.param));
    case DescriptorKind::quasi_dihedral: return quasi_dihedral(log2_exact(d.param));
    case DescriptorKind::modular: return modular(log2_exact(d.param));
    case DescriptorKind::extraspecial_plus:
    case DescriptorKind::extraspecial_minus: {
      const unsigned r = (log2_exact(d.param) - 1) / 2;
      Group g = d.kind == DescriptorKind::extraspecial_plus ? dihedral(3)
                                                           : generalized_quaternion(3);
      for (unsigned i = 1; i < r; ++i) g = central_product(g, dihedral(3));
      return g;
    }
    case DescriptorKind::almost_extraspecial: {
      const unsigned r = (log2_exact(d.param) - 2) / 2;
      Group g = dihedral(3);
      for (unsigned i = 1; i < r; ++i) g = central_product(g, dihedral(3));
      return central_product(g, build_cyclic(4));
    }
    case DescriptorKind::gen_dihedral:
      return build_generalized_dihedral(build(d.children.at(0)));
    case DescriptorKind::gen_dicyclic: {
      Group a = build(d.children.at(0));
      if (!d.z_index) return build_generalized_dicyclic(a, default_dicyclic_involution(a));
      auto invs = involutions(a);
      if (*d.z_index >= invs.size()) {
        throw Error(Errc::invalid_parameter,
                    "involution index " + std::to_string(*d.z_index) + " out of range (" +
                        std::to_string(invs.size()) + " involutions)");
      }
      return build_generalized_dicyclic(a, invs[*d.z_index]);
    }
    case DescriptorKind::direct: {
      Group g = build(d.children.at(0));
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        g = direct_product(g, build(d.children[i]));
      }
      return g;
    }
    case DescriptorKind::central: {
      Group g = build(d.children.at(0));
      for (std::size_t i = 1; i < d.children.size(); ++i) {
        g = central_product(g, build(d.children[i]));
      }
      return g;
    }
  }
  throw Error(Errc::invalid_parameter, "unknown descriptor kind");
}

}  // namespace

Group build_from_descriptor(const GroupDescriptor& d) {
  const std::uint64_t expected = predicted_order(d);
  Group g = build(d);
  if (g.order() != expected) {
    throw Error(Errc::internal_inconsistency,
                to_string(d) + " built with order " + std::to_string(g.order()) +
                    ", predicted " + std::to_string(expected));
  }
  return g;
}

Group build_from_descriptor(std::string_view text) {
  return build_from_descriptor(canonicalize(parse_descriptor(text)));
}

}  // namespace cyclo
