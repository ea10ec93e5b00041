#include <cctype>
#include <set>
#include <string>

#include "charfield/errors.hpp"
#include "charfield/numtheory.hpp"
#include "charfield/zoo.hpp"

namespace charfield {

namespace {

struct FrobeniusSugar {
  std::uint32_t order, p, k;
};
constexpr FrobeniusSugar kFrobeniusSugar[] = {{20, 5, 4}, {21, 7, 3}, {52, 13, 4}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> atoms;
    atoms.push_back(atom());
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      atoms.push_back(atom());
    }
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    if (atoms.size() == 1) return atoms.front();
    return GroupSpec::product(std::move(atoms));
  }

 private:
  GroupSpec atom() {
    const std::size_t name_pos = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) name += text_[pos_++];
    if (name.empty()) throw ParseError("expected a group name", name_pos);
    static const std::set<std::string> known{"C", "D", "F", "A", "S", "PSL", "SL", "Sz", "Frob"};
    if (!known.contains(name)) throw ParseError("unknown group name '" + name + "'", name_pos);

    std::vector<std::uint32_t> args;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      args.push_back(number());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        args.push_back(number());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    } else {
      args.push_back(number());
    }
    return interpret(name, name_pos, args);
  }

  std::uint32_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > 0xffffffffull) throw ParseError("number too large", start);
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return static_cast<std::uint32_t>(value);
  }

  static void arity(const std::string& name, const std::vector<std::uint32_t>& args, std::size_t n) {
    if (args.size() != n)
      throw SpecError(name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                      std::to_string(args.size()));
  }

  GroupSpec interpret(const std::string& name, std::size_t name_pos, const std::vector<std::uint32_t>& args) {
    GroupSpec spec;
    if (name == "C") {
      arity(name, args, 1);
      spec = GroupSpec::cyclic(args[0]);
    } else if (name == "D") {
      arity(name, args, 1);
      spec = GroupSpec::dihedral(args[0]);
    } else if (name == "F") {
      arity(name, args, 1);
      bool found = false;
      for (const auto& s : kFrobeniusSugar)
        if (s.order == args[0]) {
          spec = GroupSpec::frobenius(s.p, s.k);
          found = true;
        }
      if (!found)
        throw SpecError("F" + std::to_string(args[0]) +
                        " is ambiguous: only F20, F21 and F52 are accepted; use Frob(p,k) for other Frobenius groups");
    } else if (name == "Frob") {
      arity(name, args, 2);
      spec = GroupSpec::frobenius(args[0], args[1]);
    } else if (name == "A") {
      arity(name, args, 1);
      spec = GroupSpec::alternating(args[0]);
    } else if (name == "S") {
      arity(name, args, 1);
      spec = GroupSpec::symmetric(args[0]);
    } else if (name == "PSL" || name == "SL") {
      arity(name, args, 2);
      if (args[0] != 2) throw SpecError(name + "(n,q) is only supported for n = 2");
      spec = name == "PSL" ? GroupSpec::psl2(args[1]) : GroupSpec::sl2(args[1]);
    } else if (name == "Sz") {
      arity(name, args, 1);
      spec = GroupSpec::suzuki(args[0]);
    } else {
      throw ParseError("unknown group name '" + name + "'", name_pos);
    }
    check_spec(spec);
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void check_spec(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  auto fail = [](const std::string& msg) { throw SpecError(msg); };
  switch (spec.kind) {
    case K::Cyclic:
      if (spec.args.at(0) < 1) fail("C_n requires n >= 1");
      break;
    case K::Dihedral:
      if (spec.args.at(0) % 2 != 0 || spec.args.at(0) < 6)
        fail("D_n denotes the dihedral group of order n, so n must be even and at least 6 (got " +
             std::to_string(spec.args.at(0)) + ")");
      break;
    case K::Frobenius: {
      const auto p = spec.args.at(0), k = spec.args.at(1);
      if (p < 3 || !nt::is_prime(p)) fail("Frob(p,k) requires an odd prime p");
      if (k < 2 || (p - 1) % k != 0) fail("Frob(p,k) requires k >= 2 dividing p - 1");
      break;
    }
    case K::Alternating:
    case K::Symmetric:
      if (spec.args.at(0) < 2 || spec.args.at(0) > 9) fail("A_n and S_n require 2 <= n <= 9");
      break;
    case K::PSL2:
    case K::SL2: {
      const auto q = spec.args.at(0);
      if (nt::prime_power(q).first == 0) fail("q = " + std::to_string(q) + " is not a prime power");
      if (q < 4 || q > 32) fail("PSL(2,q) and SL(2,q) require 4 <= q <= 32");
      break;
    }
    case K::Suzuki:
      if (spec.args.at(0) != 8) fail("Sz(q) is supported for q = 8 only");
      break;
    case K::Product:
      if (spec.factors.empty()) fail("product needs at least one factor");
      for (const auto& f : spec.factors) check_spec(f);
      break;
  }
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  const auto arg = [&](std::size_t i) { return std::to_string(spec.args.at(i)); };
  switch (spec.kind) {
    case K::Cyclic: return "C" + arg(0);
    case K::Dihedral: return "D" + arg(0);
    case K::Frobenius:
      for (const auto& s : kFrobeniusSugar)
        if (s.p == spec.args.at(0) && s.k == spec.args.at(1)) return "F" + std::to_string(s.order);
      return "Frob(" + arg(0) + "," + arg(1) + ")";
    case K::Alternating: return "A" + arg(0);
    case K::Symmetric: return "S" + arg(0);
    case K::PSL2: return "PSL(2," + arg(0) + ")";
    case K::SL2: return "SL(2," + arg(0) + ")";
    case K::Suzuki: return "Sz(" + arg(0) + ")";
    case K::Product: {
      std::string out;
      for (const auto& f : spec.factors) {
        if (!out.empty()) out += "x";
        out += to_string(f);
      }
      return out;
    }
  }
  return {};
}

}  // namespace charfield
