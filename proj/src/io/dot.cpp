#include "brtk/io/dot.hpp"

#include <sstream>

#include "brtk/error.hpp"

namespace brtk {

  namespace {

    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }

  }  // namespace

  std::string cayley_dot(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "digraph " << quoted("Cayley " + S.name()) << " {\n";
    for (Elem x = 0; x < S.size(); ++x) {
      out << "  " << x << " [label=" << quoted(S.label(x)) << "];\n";
    }
    auto const one = S.identity();
    for (Elem a = 0; a < S.size(); ++a) {
      if (one == a) {
        continue;
      }
      for (Elem x = 0; x < S.size(); ++x) {
        out << "  " << x << " -> " << S.product(a, x) << " [label=" << quoted(S.label(a)) << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string hasse_dot(FiniteSemigroup const& S, std::span<Elem const> nodes) {
    if (!S.is_inverse()) {
      throw NotInverseError("the natural order needs an inverse semigroup");
    }
    std::vector<Elem> V(nodes.begin(), nodes.end());
    if (V.empty()) {
      for (Elem x = 0; x < S.size(); ++x) {
        V.push_back(x);
      }
    }
    std::ostringstream out;
    out << "digraph " << quoted("Hasse " + S.name()) << " {\n  rankdir=BT;\n";
    for (auto x : V) {
      out << "  " << x << " [label=" << quoted(S.label(x)) << "];\n";
    }
    for (auto x : V) {
      for (auto y : V) {
        if (x == y || !S.leq(x, y)) {
          continue;
        }
        bool covers = true;
        for (auto z : V) {
          covers = covers && (z == x || z == y || !(S.leq(x, z) && S.leq(z, y)));
        }
        if (covers) {
          out << "  " << x << " -> " << y << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace brtk
