#include "brtk/algebra/semigroup.hpp"

#include "brtk/error.hpp"
#include "brtk/simd/kernels.hpp"

namespace brtk {

  FiniteSemigroup FiniteSemigroup::from_table(CayleyTable              table,
                                              std::vector<std::string> labels,
                                              std::string              name,
                                              CheckOptions const&      opts) {
    auto const n = table.size();
    if (n == 0) {
      throw ValidationError("semigroup '" + name + "' is empty");
    }
    if (auto bad = find_associativity_failure(table, opts)) {
      throw ValidationError("semigroup '" + name + "' is not associative at (a,b,c) = ("
                            + std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + ","
                            + std::to_string((*bad)[2]) + ")");
    }
    if (labels.empty()) {
      labels.resize(n);
      for (Elem s = 0; s < n; ++s) {
        labels[s] = "s" + std::to_string(s);
      }
    } else if (labels.size() != n) {
      throw ValidationError("semigroup '" + name + "': label count does not match size");
    }

    FiniteSemigroup S;
    S._name   = std::move(name);
    S._table  = std::move(table);
    S._labels = std::move(labels);

    auto const&       k = simd::active();
    std::vector<Elem> candidates(n);
    S._inverse.assign(n, 0);
    bool regular = true, unique = true;
    for (Elem s = 0; s < n; ++s) {
      auto c = k.inverse_row(S._table.data(), n, s, candidates.data());
      if (c == 0) {
        regular = false;
        unique  = false;
        break;
      }
      unique        = unique && c == 1;
      S._inverse[s] = candidates[0];
    }
    for (Elem s = 0; s < n; ++s) {
      if (S.is_idempotent(s)) {
        S._idempotents.push_back(s);
      }
    }
    for (Elem e = 0; e < n && !S._identity; ++e) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = S._table(e, x) == x && S._table(x, e) == x;
      }
      if (ok) {
        S._identity = e;
      }
    }
    S._regular      = regular;
    S._inverse_flag = regular && unique;
    if (S._inverse_flag) {
      S._below.assign(n, Bitset(n));
      for (Elem s = 0; s < n; ++s) {
        Elem e = S._table(s, S._inverse[s]);
        for (Elem t = 0; t < n; ++t) {
          if (S._table(e, t) == s) {
            S._below[t].set(s);
          }
        }
      }
    } else {
      S._inverse.clear();
    }
    return S;
  }

  std::optional<Elem> FiniteSemigroup::find_label(std::string const& label) const {
    for (Elem s = 0; s < size(); ++s) {
      if (_labels[s] == label) {
        return s;
      }
    }
    return std::nullopt;
  }

  Elem FiniteSemigroup::identity_or_throw() const {
    if (!_identity) {
      throw ValidationError("semigroup '" + _name + "' is not a monoid");
    }
    return *_identity;
  }

  Elem FiniteSemigroup::inverse(Elem s) const {
    if (!_inverse_flag) {
      throw NotInverseError("semigroup '" + _name + "' is not an inverse semigroup");
    }
    return _inverse[s];
  }

  bool FiniteSemigroup::leq(Elem s, Elem t) const {
    return down_set(t).test(s);
  }

  Bitset const& FiniteSemigroup::down_set(Elem t) const {
    if (!_inverse_flag) {
      throw NotInverseError("natural order requested on non-inverse semigroup '" + _name + "'");
    }
    return _below[t];
  }

  AxiomReport check_inverse_semigroup_axioms(CayleyTable const& table) {
    AxiomReport r;
    auto const  n = table.size();
    auto const& k = simd::active();

    r.associativity_witness = find_associativity_failure_exhaustive(table);
    r.associative           = !r.associativity_witness;
    r.triples_checked       = r.associative ? n * n * n : 0;

    std::vector<Elem> candidates(n);
    std::vector<Elem> idempotents;
    r.regular = true;
    for (Elem s = 0; s < n; ++s) {
      auto c = k.inverse_row(table.data(), n, s, candidates.data());
      r.pairs_checked += n;
      if (c == 0) {
        r.regular = false;
      }
      if (c == 1) {
        ++r.unique_inverse_count;
      } else if (!r.inverse_witness) {
        r.inverse_witness = s;
      }
      if (table(s, s) == s) {
        idempotents.push_back(s);
      }
    }
    r.idempotents_commute = true;
    for (auto e : idempotents) {
      for (auto f : idempotents) {
        ++r.pairs_checked;
        if (table(e, f) != table(f, e) && r.idempotents_commute) {
          r.idempotents_commute = false;
          r.commute_witness     = {e, f};
        }
      }
    }
    return r;
  }

}  // namespace brtk
