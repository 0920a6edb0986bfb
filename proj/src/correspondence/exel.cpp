#include "brtk/correspondence/exel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <unordered_map>

#include "brtk/algebra/inverse.hpp"
#include "brtk/error.hpp"

namespace brtk {

  namespace {

    void require_premorphism(Premorphism const& theta) {
      auto const r = check_unital_premorphism(theta);
      if (!r.unital) {
        throw ValidationError("not unital: theta(1) is not the identity of '" + theta.target->name() + "'");
      }
      if (!r.axiom) {
        auto const [g, h] = *r.witness;
        throw ValidationError("not a premorphism: axiom fails at (g,h) = (" + theta.source->label(g) + ","
                              + theta.source->label(h) + ")");
      }
    }

    void require_same_group(Premorphism const& theta, IntermediateExtension const& T) {
      if (!(*theta.source == T.group())) {
        throw ValidationError("premorphism source and '" + T.name() + "' live over different groups");
      }
    }

    Elem range_idempotent(FiniteSemigroup const& S, Elem s) {
      return S.product(s, S.inverse(s));
    }

  }  // namespace

  SemigroupHomomorphism tilde_theta(Premorphism const& theta, IntermediateExtension const& br) {
    require_premorphism(theta);
    require_same_group(theta, br);
    auto const& G   = *theta.source;
    auto const& S   = *theta.target;
    auto const  one = G.identity();

    SemigroupHomomorphism out{br.semigroup_ptr(), theta.target, std::vector<Elem>(br.size())};
    for (Elem i = 0; i < br.size(); ++i) {
      auto const& p   = br.at(i);
      if (!contains(p.subset, one) || !contains(p.subset, p.element)) {
        throw ValidationError("'" + br.name() + "' is not the Birget-Rhodes expansion: " + to_string(p));
      }
      auto        acc = theta(p.element);
      for (auto rest = p.subset & ~singleton(one) & ~singleton(p.element); rest != 0; rest &= rest - 1) {
        auto const a = static_cast<Elem>(std::countr_zero(rest));
        acc          = S.product(range_idempotent(S, theta(a)), acc);
      }
      out.image[i] = acc;
    }
    if (auto f = homomorphism_failure(out)) {
      throw ValidationError("theta~ is not a homomorphism at (" + to_string(br.at(f->first)) + ", "
                            + to_string(br.at(f->second)) + ")");
    }
    return out;
  }

  Premorphism hat_rho(SemigroupHomomorphism const& rho, IntermediateExtension const& br) {
    if (rho.source->table() != br.semigroup().table()) {
      throw ValidationError("hat_rho: homomorphism source is not '" + br.name() + "'");
    }
    if (auto f = homomorphism_failure(rho)) {
      throw ValidationError("hat_rho: not a homomorphism at (" + to_string(br.at(f->first)) + ", "
                            + to_string(br.at(f->second)) + ")");
    }
    auto const&       G = br.group();
    std::vector<Elem> table(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      table[g] = rho(br.index_or_throw(iota(G, g)));
    }
    auto theta = make_premorphism(br.group_ptr(), rho.target, std::move(table));
    require_premorphism(theta);
    return theta;
  }

  bool MeetCertificate::complete() const noexcept {
    return std::all_of(meets.begin(), meets.end(), [](auto const& m) { return m.has_value(); });
  }

  std::optional<GroupSubset> MeetCertificate::first_missing() const noexcept {
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!meets[i]) {
        return family[i];
      }
    }
    return std::nullopt;
  }

  std::optional<Elem> MeetCertificate::at(GroupSubset A) const {
    auto it = std::lower_bound(family.begin(), family.end(), A);
    if (it == family.end() || *it != A) {
      throw ValidationError("subset " + subset_string(A) + " is not in the certified family");
    }
    return meets[static_cast<std::size_t>(it - family.begin())];
  }

  std::optional<Elem> meet_of(Premorphism const& theta, GroupSubset A) {
    if (A == 0) {
      throw ValidationError("meet map on the empty subset");
    }
    auto const&       S = *theta.target;
    std::vector<Elem> family;
    for (; A != 0; A &= A - 1) {
      family.push_back(range_idempotent(S, theta(static_cast<Elem>(std::countr_zero(A)))));
    }
    return meet(S, family);
  }

  MeetCertificate meet_map(Premorphism const& theta, std::vector<GroupSubset> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    MeetCertificate cert;
    cert.meets.reserve(family.size());
    for (auto A : family) {
      cert.meets.push_back(meet_of(theta, A));
    }
    cert.family = std::move(family);
    return cert;
  }

  std::vector<Elem> theta_star_values(Premorphism const&           theta,
                                      IntermediateExtension const& T,
                                      MeetCertificate const&       certificate) {
    require_same_group(theta, T);
    auto const&       S = *theta.target;
    std::vector<Elem> out(T.size());
    for (Elem i = 0; i < T.size(); ++i) {
      auto const& p = T.at(i);
      auto const  I = certificate.at(p.subset);
      if (!I) {
        throw ValidationError("E(" + S.name() + ") has no meet for A = " + subset_string(p.subset));
      }
      out[i] = S.product(*I, theta(p.element));
    }
    return out;
  }

  SemigroupHomomorphism theta_star(Premorphism const& theta, IntermediateExtension const& T) {
    return theta_star(theta, T, meet_map(theta, support(T)));
  }

  SemigroupHomomorphism theta_star(Premorphism const&           theta,
                                   IntermediateExtension const& T,
                                   MeetCertificate const&       certificate) {
    require_premorphism(theta);
    SemigroupHomomorphism out{T.semigroup_ptr(), theta.target, theta_star_values(theta, T, certificate)};
    auto const&           G = T.group();
    for (Elem g = 0; g < G.order(); ++g) {
      auto const i = T.index_of(iota(G, g));
      if (!i || out(*i) != theta(g)) {
        throw ValidationError("theta* does not extend theta at " + G.label(g));
      }
    }
    if (auto f = homomorphism_failure(out)) {
      throw ValidationError("theta* is not a homomorphism on '" + T.name() + "' at (" + to_string(T.at(f->first))
                            + ", " + to_string(T.at(f->second)) + ")");
    }
    return out;
  }

  ExtensionSearch enumerate_extensions(Premorphism const&           theta,
                                       IntermediateExtension const& T,
                                       std::size_t                  node_budget) {
    require_same_group(theta, T);
    auto const& G   = T.group();
    auto const& S   = *theta.target;
    auto const  one = G.identity();

    std::vector<std::pair<Elem, Elem>> fixed;
    std::vector<Elem>                  priority;
    for (Elem g = 0; g < G.order(); ++g) {
      auto const i = T.index_or_throw(iota(G, g));
      fixed.emplace_back(i, theta(g));
      priority.push_back(i);
    }
    std::vector<Elem> range(G.order());
    for (Elem g = 0; g < G.order(); ++g) {
      range[g] = range_idempotent(S, theta(g));
    }
    // κ(A, 1) ≤ θ(a)θ(a)⁻¹ for a ∈ A whenever 1 ∈ A
    CandidateFilter filter = [&](Elem s, Elem v) {
      auto const& p = T.at(s);
      if (p.element != one || !contains(p.subset, one)) {
        return true;
      }
      for (auto A = p.subset; A != 0; A &= A - 1) {
        if (!S.leq(v, range[static_cast<Elem>(std::countr_zero(A))])) {
          return false;
        }
      }
      return true;
    };
    if (!S.is_inverse()) {
      filter = {};
    }
    HomSearchOptions opts;
    opts.node_budget = node_budget;
    auto found       = find_homomorphisms(T.semigroup(), S, fixed, filter, opts, priority);

    ExtensionSearch out;
    out.complete = found.complete;
    out.nodes    = found.nodes;
    for (auto& m : found.maps) {
      out.extensions.push_back({T.semigroup_ptr(), theta.target, std::move(m)});
    }
    return out;
  }

  std::optional<Elem> first_not_below(SemigroupHomomorphism const& kappa, SemigroupHomomorphism const& lambda) {
    auto const& S = *kappa.target;
    for (Elem t = 0; t < kappa.image.size(); ++t) {
      if (!S.leq(kappa(t), lambda(t))) {
        return t;
      }
    }
    return std::nullopt;
  }

  MeetPreservation is_meet_preserving(SemigroupHomomorphism const& phi, MeetScanOptions const& opts) {
    auto const& S = *phi.source;
    auto const& D = *phi.target;
    if (!S.is_inverse() || !D.is_inverse()) {
      throw NotInverseError("meet preservation needs inverse source and target");
    }
    MeetPreservation out;
    std::vector<Elem> image;
    auto check = [&](std::span<Elem const> family) {
      if (!out.preserving) {
        return;
      }
      ++out.families_checked;
      auto const m = greatest_lower_bound(S, family);
      if (!m) {
        return;
      }
      image.clear();
      for (auto s : family) {
        image.push_back(phi(s));
      }
      auto const mi = greatest_lower_bound(D, image);
      if (!mi || *mi != phi(*m)) {
        out.preserving  = false;
        out.witness.assign(family.begin(), family.end());
        out.source_meet = m;
        out.image_meet  = mi;
      }
    };
    auto all_subsets = [&](std::vector<Elem> const& pool) {
      std::vector<Elem> family;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()) && out.preserving; ++mask) {
        if (std::popcount(mask) < 2) {
          continue;
        }
        family.clear();
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if ((mask >> i) & 1u) {
            family.push_back(pool[i]);
          }
        }
        check(family);
      }
    };

    std::vector<Elem> everything(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      everything[s] = s;
    }
    std::vector<Elem> E(S.idempotents().begin(), S.idempotents().end());

    if (S.size() <= opts.full_bound) {
      all_subsets(everything);
      return out;
    }
    if (E.size() <= opts.idempotent_bound) {
      all_subsets(E);
    } else {
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i + 1; j < E.size(); ++j) {
          Elem const pair[] = {E[i], E[j]};
          check(pair);
          for (std::size_t k = j + 1; k < E.size(); ++k) {
            Elem const triple[] = {E[i], E[j], E[k]};
            check(triple);
          }
        }
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = s + 1; t < S.size(); ++t) {
        Elem const pair[] = {s, t};
        check(pair);
      }
    }
    std::mt19937_64                             rng(opts.seed);
    std::uniform_int_distribution<Elem>         pick(0, static_cast<Elem>(S.size() - 1));
    std::uniform_int_distribution<std::size_t>  len(2, 5);
    std::vector<Elem>                           family;
    for (std::size_t k = 0; k < opts.samples && out.preserving; ++k) {
      family.clear();
      for (auto l = len(rng); l > 0; --l) {
        family.push_back(pick(rng));
      }
      check(family);
    }
    return out;
  }

  bool LemmaReport::ok() const noexcept {
    return std::all_of(items.begin(), items.end(), [](LemmaItem const& i) { return i.failures.empty(); });
  }

  LemmaReport lemma_4_7_checks(Premorphism const& theta, std::vector<GroupSubset> const& family_in) {
    require_premorphism(theta);
    auto const& G = *theta.source;
    auto const& S = *theta.target;

    std::vector<GroupSubset> family(family_in);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto in_family = [&](GroupSubset A) { return std::binary_search(family.begin(), family.end(), A); };

    std::unordered_map<GroupSubset, std::optional<Elem>> cache;
    auto I = [&](GroupSubset A) {
      auto it = cache.find(A);
      if (it == cache.end()) {
        it = cache.emplace(A, meet_of(theta, A)).first;
      }
      return it->second;
    };
    auto lbl = [&](std::optional<Elem> e) { return e ? S.label(*e) : std::string("none"); };

    LemmaReport report;
    LemmaItem   one{"i", 0, {}};
    for (auto A : family) {
      auto const IA = I(A);
      for (auto B : family) {
        if (!in_family(A | B)) {
          continue;
        }
        ++one.checked;
        auto const IB = I(B);
        auto const IU = I(A | B);
        if (!IA || !IB || !IU || *IU != S.product(*IA, *IB)) {
          one.failures.push_back("I_{A u B} != I_A I_B for A = " + subset_string(A) + ", B = " + subset_string(B)
                                 + ": " + lbl(IU) + " vs " + lbl(IA) + " * " + lbl(IB));
        }
      }
      for (auto rest = A; rest != 0; rest &= rest - 1) {
        auto const g = static_cast<Elem>(std::countr_zero(rest));
        ++one.checked;
        auto const Ig = I(singleton(g));
        if (!IA || !Ig || S.product(*IA, *Ig) != *IA) {
          one.failures.push_back("I_A I_{g} != I_A for A = " + subset_string(A) + ", g = " + G.label(g));
        }
      }
    }
    report.items.push_back(std::move(one));

    LemmaItem  two{"ii", 0, {}};
    auto const exhaustive = family.size() <= 10;
    auto       check_sub  = [&](std::vector<GroupSubset> const& sub) {
      GroupSubset U = 0;
      for (auto A : sub) {
        U |= A;
      }
      if (!in_family(U)) {
        return;
      }
      ++two.checked;
      std::vector<Elem> meets;
      for (auto A : sub) {
        auto const IA = I(A);
        if (!IA) {
          two.failures.push_back("meet missing for " + subset_string(A));
          return;
        }
        meets.push_back(*IA);
      }
      auto const m  = greatest_lower_bound(S, meets);
      auto const IU = I(U);
      if (!m || !IU || *m != *IU) {
        std::string names;
        for (auto A : sub) {
          names += subset_string(A);
        }
        two.failures.push_back("meet of I over " + names + " is " + lbl(m) + ", I of the union is " + lbl(IU));
      }
    };
    if (exhaustive) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << family.size()); ++mask) {
        if (std::popcount(mask) < 2) {
          continue;
        }
        std::vector<GroupSubset> sub;
        for (std::size_t i = 0; i < family.size(); ++i) {
          if ((mask >> i) & 1u) {
            sub.push_back(family[i]);
          }
        }
        check_sub(sub);
      }
    } else {
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
          check_sub({family[i], family[j]});
          for (std::size_t k = j + 1; k < family.size(); ++k) {
            check_sub({family[i], family[j], family[k]});
          }
        }
      }
    }
    report.items.push_back(std::move(two));

    LemmaItem three{"iii", 0, {}};
    for (Elem g = 0; g < G.order(); ++g) {
      for (auto B : family) {
        ++three.checked;
        auto const gB  = translate(G, g, B);
        auto const IB  = I(B);
        auto const IgB = I(gB);
        if (!IB || !IgB || S.product(theta(g), *IB) != S.product(*IgB, theta(g))) {
          three.failures.push_back("theta(g) I_B != I_gB theta(g) for g = " + G.label(g) + ", B = "
                                   + subset_string(B));
        }
      }
    }
    report.items.push_back(std::move(three));
    return report;
  }

}  // namespace brtk
