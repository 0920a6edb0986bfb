#include "brtk/algebra/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "brtk/error.hpp"

namespace brtk {

  namespace {
    std::string triple_string(std::array<Elem, 3> const& t) {
      return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2])
             + ")";
    }

    std::size_t parse_size(std::string_view s, std::string_view descriptor) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ValidationError("bad group descriptor '" + std::string(descriptor) + "'");
      }
      return value;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  FiniteGroup FiniteGroup::from_table(std::string name, CayleyTable table, std::vector<std::string> labels) {
    auto const n = table.size();
    if (n == 0) {
      throw ValidationError("group '" + name + "' has order 0");
    }
    CheckOptions opts;
    opts.eager_bound = 64;
    if (auto bad = find_associativity_failure(table, opts)) {
      throw ValidationError("group '" + name + "' is not associative at (a,b,c) = "
                            + triple_string(*bad));
    }
    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = table(e, x) == x && table(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      throw ValidationError("group '" + name + "' has no two-sided identity");
    }
    std::vector<Elem> inverse(n);
    for (Elem a = 0; a < n; ++a) {
      bool found = false;
      for (Elem b = 0; b < n && !found; ++b) {
        if (table(a, b) == *identity && table(b, a) == *identity) {
          inverse[a] = b;
          found      = true;
        }
      }
      if (!found) {
        throw ValidationError("group '" + name + "': element " + std::to_string(a)
                              + " has no inverse");
      }
    }
    if (labels.empty()) {
      labels.resize(n);
      for (Elem a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
      }
    } else if (labels.size() != n) {
      throw ValidationError("group '" + name + "': label count does not match order");
    }
    FiniteGroup g;
    g._name     = std::move(name);
    g._table    = std::move(table);
    g._identity = *identity;
    g._inverse  = std::move(inverse);
    g._labels   = std::move(labels);
    return g;
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw ValidationError("cyclic group of order 0");
    }
    CayleyTable t(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t.at(a, b) = static_cast<Elem>((a + b) % n);
      }
    }
    return from_table("Z" + std::to_string(n), std::move(t));
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) {
      throw ValidationError("dihedral group D0");
    }
    // r^i -> (i, 0), s r^i -> (i, 1); s r^i s = r^-i.
    auto const  order = 2 * n;
    CayleyTable t(order);
    std::vector<std::string> labels(order);
    for (Elem x = 0; x < order; ++x) {
      std::size_t i = x % n, fx = x / n;
      labels[x]     = (fx ? "sr" : "r") + std::to_string(i);
      for (Elem y = 0; y < order; ++y) {
        std::size_t j = y % n, fy = y / n;
        // (s^fx r^i)(s^fy r^j) = s^(fx+fy) r^(j + (fy ? -i : i))
        std::size_t k = fy ? (j + n - i) % n : (i + j) % n;
        t.at(x, y)    = static_cast<Elem>(((fx + fy) % 2) * n + k);
      }
    }
    return from_table("D" + std::to_string(n), std::move(t), std::move(labels));
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 4) {
      throw SizeLimitError("symmetric group S" + std::to_string(n) + " is outside 1..4", n);
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto const  order = perms.size();
    auto        index = [&](std::vector<std::size_t> const& q) {
      return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    CayleyTable              t(order);
    std::vector<std::string> labels(order);
    for (Elem a = 0; a < order; ++a) {
      std::string lab = "[";
      for (std::size_t i = 0; i < n; ++i) {
        lab += std::to_string(perms[a][i]);
      }
      labels[a] = lab + "]";
      for (Elem b = 0; b < order; ++b) {
        // (ab)(i) = a(b(i)): apply b first.
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        t.at(a, b) = index(c);
      }
    }
    return from_table("S" + std::to_string(n), std::move(t), std::move(labels));
  }

  FiniteGroup FiniteGroup::direct_product(FiniteGroup const& g, FiniteGroup const& h) {
    auto const               m = h.order();
    auto const               order = g.order() * m;
    CayleyTable              t(order);
    std::vector<std::string> labels(order);
    for (Elem x = 0; x < order; ++x) {
      labels[x] = "(" + g.label(x / m) + "," + h.label(x % m) + ")";
      for (Elem y = 0; y < order; ++y) {
        t.at(x, y) = static_cast<Elem>(g.product(x / m, y / m) * m + h.product(x % m, y % m));
      }
    }
    return from_table(g.name() + "x" + h.name(), std::move(t), std::move(labels));
  }

  FiniteGroup FiniteGroup::from_descriptor(std::string_view descriptor) {
    auto d = trim(descriptor);
    if (d.empty()) {
      throw ValidationError("empty group descriptor");
    }
    if (d == "trivial") {
      return cyclic(1);
    }
    if (d.starts_with("product ")) {
      auto rest  = trim(d.substr(8));
      auto space = rest.find(' ');
      if (space == std::string_view::npos) {
        throw ValidationError("product needs two factors: '" + std::string(descriptor) + "'");
      }
      return direct_product(from_descriptor(rest.substr(0, space)),
                            from_descriptor(rest.substr(space + 1)));
    }
    if (auto x = d.find('x'); x != std::string_view::npos) {
      return direct_product(from_descriptor(d.substr(0, x)), from_descriptor(d.substr(x + 1)));
    }
    struct Family {
      std::string_view word;
      std::string_view letter;
      FiniteGroup (*make)(std::size_t);
    };
    static constexpr Family families[] = {{"cyclic", "Z", &FiniteGroup::cyclic},
                                          {"cyclic", "C", &FiniteGroup::cyclic},
                                          {"dihedral", "D", &FiniteGroup::dihedral},
                                          {"symmetric", "S", &FiniteGroup::symmetric}};
    for (auto const& f : families) {
      if (d.starts_with(f.word)) {
        return f.make(parse_size(trim(d.substr(f.word.size())), descriptor));
      }
    }
    for (auto const& f : families) {
      if (d.starts_with(f.letter)) {
        return f.make(parse_size(d.substr(1), descriptor));
      }
    }
    throw ValidationError("unknown group descriptor '" + std::string(descriptor) + "'");
  }

  std::size_t FiniteGroup::element_order(Elem a) const noexcept {
    std::size_t k = 1;
    for (Elem x = a; x != _identity; x = product(x, a)) {
      ++k;
    }
    return k;
  }

}  // namespace brtk
