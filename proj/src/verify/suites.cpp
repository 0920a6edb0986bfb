#include "brtk/verify/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "brtk/algebra/homomorphism.hpp"
#include "brtk/correspondence/exel.hpp"
#include "brtk/correspondence/generators.hpp"
#include "brtk/error.hpp"
#include "brtk/topology/propositions.hpp"

namespace brtk {

  namespace {

    using GroupPtr = std::shared_ptr<FiniteGroup const>;
    using SpacePtr = std::shared_ptr<FiniteTopology const>;

    GroupPtr group(std::string const& descriptor) {
      return std::make_shared<FiniteGroup const>(FiniteGroup::from_descriptor(descriptor));
    }

    std::vector<GroupPtr> groups_up_to(std::size_t order) {
      std::vector<GroupPtr> out;
      for (std::size_t n = 1; n <= order; ++n) {
        out.push_back(std::make_shared<FiniteGroup const>(FiniteGroup::cyclic(n)));
        if (n == 4) {
          out.push_back(group("Z2xZ2"));
        }
      }
      return out;
    }

    std::string space_id(FiniteTopology const& t) {
      if (!t.name().empty()) {
        return t.name();
      }
      std::string s = "X" + std::to_string(t.size()) + "[";
      for (std::size_t x = 0; x < t.size(); ++x) {
        s += (x ? "," : "") + t.neighbourhood(x).to_string();
      }
      return s + "]";
    }

    std::string elem_pair(FiniteSemigroup const& S, std::pair<Elem, Elem> p) {
      return "(" + S.label(p.first) + ", " + S.label(p.second) + ")";
    }

    std::uint64_t derive(std::uint64_t seed, std::string_view salt) {
      return seed * 0x9E3779B97F4A7C15ull ^ std::hash<std::string_view>{}(salt);
    }

    // Spaces for the topology suites: every topology up to max_points, then
    // discrete spaces above that.
    std::vector<SpacePtr> spaces(VerifyConfig const& c) {
      std::vector<SpacePtr> out;
      for (std::size_t n = 1; n <= c.topology_max_points; ++n) {
        for (auto& t : all_topologies(n)) {
          if (t.is_discrete()) {
            t.rename("discrete" + std::to_string(n));
          } else if (t == FiniteTopology::sierpinski()) {
            t.rename("sierpinski");
          }
          out.push_back(std::make_shared<FiniteTopology const>(std::move(t)));
        }
      }
      for (std::size_t n = c.topology_max_points + 1; n <= c.discrete_max_points; ++n) {
        out.push_back(std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n)));
      }
      return out;
    }

    // Runs body, turning a library exception into a failed check.
    template <typename Body>
    void guarded(VerificationReport& r, std::string const& suite, std::string const& tag, std::string const& instance,
                 Body&& body) {
      try {
        body();
      } catch (SizeLimitError const& e) {
        r.skip(suite, tag, instance, std::string("size bound: ") + e.what());
      } catch (Error const& e) {
        r.fail(suite, tag, instance, std::string("exception: ") + e.what());
      }
    }

    // ---- counts ------------------------------------------------------------

    std::uint64_t brute_partial_injections(std::size_t n) {
      // maps x -> {0..n-1, undefined}, counting the injective ones
      std::uint64_t    count = 0;
      std::vector<int> img(n, 0);
      for (;;) {
        std::uint32_t seen = 0;
        bool          ok   = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          if (img[x] < static_cast<int>(n)) {
            ok = !((seen >> img[x]) & 1u);
            seen |= 1u << img[x];
          }
        }
        count += ok;
        std::size_t i = 0;
        while (i < n && ++img[i] == static_cast<int>(n) + 1) {
          img[i++] = 0;
        }
        if (i == n) {
          return count;
        }
      }
    }

    std::uint64_t closed_form_partial_injections(std::size_t n) {
      std::uint64_t total = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        std::uint64_t c = 1, f = 1;
        for (std::size_t i = 1; i <= k; ++i) {
          c = c * (n - k + i) / i;
          f *= i;
        }
        total += c * c * f;
      }
      return total;
    }

    std::uint64_t brute_pairs(std::size_t n, bool with_one_and_g) {
      std::uint64_t count = 0;
      for (std::size_t g = 0; g < n; ++g) {
        for (std::uint64_t A = 1; A < (std::uint64_t{1} << n); ++A) {
          count += !with_one_and_g || ((A & 1u) && ((A >> g) & 1u));
        }
      }
      return count;
    }

    void suite_counts(VerifyConfig const&, VerificationReport& r) {
      std::string const s = "counts";
      for (std::size_t n = 2; n <= 4; ++n) {
        auto const id = "I(" + std::to_string(n) + ")";
        guarded(r, s, "symmetric-inverse-monoid-size", id, [&] {
          auto const built = symmetric_inverse_monoid(n).size();
          auto const brute = brute_partial_injections(n);
          auto const form  = closed_form_partial_injections(n);
          r.check(built == brute && brute == form, true, s, "symmetric-inverse-monoid-size", id,
                  "built " + std::to_string(built) + ", brute force " + std::to_string(brute) + ", closed form "
                      + std::to_string(form));
        });
      }
      for (std::size_t n = 2; n <= 4; ++n) {
        auto const G  = std::make_shared<FiniteGroup const>(FiniteGroup::cyclic(n));
        auto const id = G->name();
        guarded(r, s, "expansion-size", id, [&] {
          auto const built = birget_rhodes(G).size();
          auto const brute = brute_pairs(n, true);
          auto const form  = (std::uint64_t{1} << (n - 1)) + (n - 1) * (std::uint64_t{1} << (n - 2));
          r.check(built == brute && brute == form, true, s, "expansion-size", id,
                  "built " + std::to_string(built) + ", brute force " + std::to_string(brute) + ", closed form "
                      + std::to_string(form));
        });
      }
      for (std::size_t n = 2; n <= 3; ++n) {
        auto const G  = std::make_shared<FiniteGroup const>(FiniteGroup::cyclic(n));
        auto const id = G->name();
        guarded(r, s, "semidirect-product-size", id, [&] {
          auto const built = semidirect_product(G).size();
          auto const brute = brute_pairs(n, false);
          auto const form  = ((std::uint64_t{1} << n) - 1) * n;
          r.check(built == brute && brute == form, true, s, "semidirect-product-size", id,
                  "built " + std::to_string(built) + ", brute force " + std::to_string(brute) + ", closed form "
                      + std::to_string(form));
        });
      }
    }

    // ---- axioms ------------------------------------------------------------

    void axioms_of(VerificationReport& r, std::string const& id, FiniteSemigroup const& S) {
      std::string const s      = "axioms";
      auto const        report = check_inverse_semigroup_axioms(S.table());
      auto const        n      = static_cast<std::uint64_t>(S.size());
      bool const        full   = report.triples_checked == n * n * n;
      std::ostringstream why;
      why << "inverse semigroup: " << report.inverse_semigroup() << ", triples " << report.triples_checked << " of "
          << n * n * n;
      r.check(report.inverse_semigroup() && full, true, s, "associative-unique-inverses-commuting-idempotents", id,
              why.str());
    }

    void suite_axioms(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "axioms";
      for (std::size_t n = 1; n <= 4; ++n) {
        auto const id = "I(" + std::to_string(n) + ")";
        guarded(r, s, "associative-unique-inverses-commuting-idempotents", id,
                [&] { axioms_of(r, id, *symmetric_inverse_monoid(n).semigroup); });
      }
      for (auto const& t : spaces(c)) {
        auto const id = "Gamma(" + space_id(*t) + ")";
        guarded(r, s, "associative-unique-inverses-commuting-idempotents", id,
                [&] { axioms_of(r, id, gamma(t).semigroup()); });
      }
      for (auto const& G : groups_up_to(4)) {
        guarded(r, s, "associative-unique-inverses-commuting-idempotents", "BR(" + G->name() + ")",
                [&] { axioms_of(r, "BR(" + G->name() + ")", birget_rhodes(G).semigroup()); });
      }
      for (auto const& G : groups_up_to(3)) {
        guarded(r, s, "associative-unique-inverses-commuting-idempotents", "P*(" + G->name() + ")x" + G->name(),
                [&] { axioms_of(r, "P*(" + G->name() + ")x" + G->name(), semidirect_product(G).semigroup()); });
      }
    }

    // ---- exel --------------------------------------------------------------

    void round_trip(VerificationReport& r, std::string const& id, Premorphism const& theta,
                    IntermediateExtension const& br) {
      std::string const s = "exel";
      guarded(r, s, "tilde-is-homomorphism", id, [&] {
        auto const tilde = tilde_theta(theta, br);
        r.pass(s, "tilde-is-homomorphism", id);
        auto const back = hat_rho(tilde, br);
        r.check(back == theta, true, s, "hat-of-tilde-is-theta", id, "hat(tilde(theta)) = " + describe(back));
      });
    }

    void suite_exel(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "exel";
      for (auto const& G : groups_up_to(c.exhaustive_max_group_order)) {
        auto const br = birget_rhodes(G);
        for (std::size_t x = 1; x <= c.exhaustive_max_points; ++x) {
          auto const I    = shared_symmetric_inverse_monoid(x);
          auto const base = G->name() + " -> I(" + std::to_string(x) + ")";
          auto const pres = enumerate_premorphisms(G, I->semigroup, c.budget);
          if (!pres.complete) {
            r.skip(s, "premorphism-enumeration", base, "budget exceeded");
            continue;
          }
          for (std::size_t k = 0; k < pres.premorphisms.size(); ++k) {
            round_trip(r, base + " #" + std::to_string(k), pres.premorphisms[k], br);
          }
          std::vector<std::pair<Elem, Elem>> fixed{
              {br.index_or_throw({singleton(G->identity()), G->identity()}), *I->semigroup->identity()}};
          HomSearchOptions opts;
          opts.node_budget = c.budget;
          auto const homs  = find_homomorphisms(br.semigroup(), *I->semigroup, fixed, {}, opts);
          if (!homs.complete) {
            r.skip(s, "homomorphism-enumeration", base, "budget exceeded");
            continue;
          }
          r.check(homs.maps.size() == pres.premorphisms.size(), true, s, "premorphisms-match-homomorphisms", base,
                  std::to_string(pres.premorphisms.size()) + " premorphisms, " + std::to_string(homs.maps.size())
                      + " homomorphisms");
          for (std::size_t k = 0; k < homs.maps.size(); ++k) {
            auto const id = base + " rho#" + std::to_string(k);
            guarded(r, s, "tilde-of-hat-is-rho", id, [&] {
              SemigroupHomomorphism const rho{br.semigroup_ptr(), I->semigroup, homs.maps[k]};
              auto const                  back = tilde_theta(hat_rho(rho, br), br);
              r.check(back == rho, true, s, "tilde-of-hat-is-rho", id, "tilde(hat(rho)) differs from rho");
            });
          }
        }
      }

      std::map<std::string, IntermediateExtension> expansions;
      auto expansion = [&](GroupPtr const& G) -> IntermediateExtension const& {
        auto it = expansions.find(G->name());
        if (it == expansions.end()) {
          it = expansions.emplace(G->name(), birget_rhodes(G)).first;
        }
        return it->second;
      };
      for (auto const& entry : premorphism_catalog(c.catalog_max_group_order, c.catalog_max_points)) {
        round_trip(r, "catalog: " + entry.name, entry.theta, expansion(entry.theta.source));
      }

      // induced partial actions on every space up to three points
      std::vector<GroupPtr> acting{group("Z2"), group("Z3"), group("S3")};
      for (auto const& G : acting) {
        auto const actions = all_actions(G, 3);
        for (std::size_t k = 0; k < actions.size(); ++k) {
          for (auto& t : all_topologies(3)) {
            auto const T = std::make_shared<FiniteTopology const>(std::move(t));
            for (auto const& Y : T->opens()) {
              if (Y.none()) {
                continue;
              }
              auto const id = "induced: " + G->name() + " action " + std::to_string(k) + " on " + space_id(*T)
                            + " to " + Y.to_string();
              try {
                auto const a = induced_partial_action(actions[k], T, Y);
                auto const p = check_unital_premorphism(a.theta);
                r.check(p.ok(), true, s, "induced-action-is-premorphism", id,
                        p.witness ? "axiom fails at " + elem_pair(*a.theta.target, *p.witness) : "not unital");
                if (p.ok()) {
                  round_trip(r, id, a.theta, expansion(G));
                }
              } catch (ValidationError const&) {
                // the action does not act by homeomorphisms of this space
              }
            }
          }
        }
      }
    }

    // ---- extensions and meet identities---------------------------------------

    struct Instance {
      std::string name;
      Premorphism theta;
    };

    // Exhaustive premorphisms into I(1), I(2) plus catalog entries, a seeded
    // subset of at most premorphisms_per_group of them.
    std::vector<Instance> suite_premorphisms(GroupPtr const& G, VerifyConfig const& c, VerificationReport& r,
                                             std::string const& suite) {
      std::vector<Instance> all;
      for (std::size_t x = 1; x <= 2; ++x) {
        auto const pres = enumerate_premorphisms(G, shared_symmetric_inverse_monoid(x)->semigroup, c.budget);
        if (!pres.complete) {
          r.skip(suite, "premorphism-enumeration", G->name() + " -> I(" + std::to_string(x) + ")",
                 "budget exceeded");
          continue;
        }
        for (std::size_t k = 0; k < pres.premorphisms.size(); ++k) {
          all.push_back({G->name() + " -> I(" + std::to_string(x) + ") #" + std::to_string(k), pres.premorphisms[k]});
        }
      }
      for (auto const& e : premorphism_catalog(c.catalog_max_group_order, c.catalog_max_points)) {
        if (*e.theta.source == *G) {
          all.push_back({"catalog: " + e.name, e.theta});
        }
      }
      if (all.size() > c.premorphisms_per_group) {
        std::mt19937_64 rng(derive(c.seed, "premorphisms " + G->name()));
        std::vector<std::size_t> idx(all.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          idx[i] = i;
        }
        for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
          std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
          std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(c.premorphisms_per_group);
        std::sort(idx.begin(), idx.end());
        std::vector<Instance> kept;
        for (auto i : idx) {
          kept.push_back(std::move(all[i]));
        }
        all = std::move(kept);
      }
      return all;
    }

    std::vector<GroupPtr> extension_groups(VerifyConfig const& c) {
      auto gs = groups_up_to(std::max<std::size_t>(c.extension_exhaustive_max_order, 4));
      std::erase_if(gs, [&](GroupPtr const& G) {
        return G->order() > c.extension_exhaustive_max_order && (G->order() != 4 || c.extension_samples == 0);
      });
      return gs;
    }

    ExtensionCatalog extensions_of(GroupPtr const& G, VerifyConfig const& c, bool monoid) {
      EnumerationOptions o;
      o.inverse_only         = monoid;
      o.require_monoid       = monoid;
      o.exhaustive_max_order = c.extension_exhaustive_max_order;
      o.samples              = c.extension_samples;
      o.seed                 = derive(c.seed, "extensions " + G->name());
      return enumerate_intermediate_extensions(G, o);
    }

    std::string family_string(FiniteSemigroup const& S, std::vector<Elem> const& family) {
      std::string out = "{";
      for (std::size_t i = 0; i < family.size(); ++i) {
        out += (i ? ", " : "") + S.label(family[i]);
      }
      return out + "}";
    }

    void theorem_checks(VerificationReport& r, VerifyConfig const& c, std::string const& id,
                        Premorphism const& theta, IntermediateExtension const& T) {
      std::string const s    = "theorem-4-8";
      auto const        cert = meet_map(theta, support(T));
      std::optional<SemigroupHomomorphism> star;
      std::string                          star_error;
      try {
        star = theta_star(theta, T, cert);
      } catch (ValidationError const& e) {
        star_error = e.what();
      }
      r.check(star.has_value() == cert.complete(), true, s, "theta-star-iff-meets-total", id,
              star ? "theta* built although a meet is missing" : "certificate total but theta* failed: " + star_error);
      if (!star) {
        return;
      }
      auto const ext = enumerate_extensions(theta, T, c.budget);
      if (!ext.complete) {
        r.skip(s, "extensions-below-theta-star", id, "budget exceeded after " + std::to_string(ext.nodes) + " nodes");
        return;
      }
      MeetScanOptions scan;
      scan.seed = derive(c.seed, id);
      for (std::size_t k = 0; k < ext.extensions.size(); ++k) {
        auto const& kappa = ext.extensions[k];
        auto const  kid   = id + " kappa#" + std::to_string(k);
        auto const  below = first_not_below(kappa, *star);
        r.check(!below, true, s, "extensions-below-theta-star", kid,
                below ? "kappa not below theta* at " + T.semigroup().label(*below) : "");
        auto const mp = is_meet_preserving(kappa, scan);
        r.check((kappa == *star) == mp.preserving, true, s, "extension-is-theta-star-iff-meet-preserving", kid,
                mp.preserving ? "meet preserving but differs from theta*"
                              : "equals theta* but does not preserve the meet of "
                                    + family_string(T.semigroup(), mp.witness));
      }
    }

    // One record per non-monoid T, summarising every suite premorphism.
    std::string observe(VerifyConfig const& c, std::vector<Instance> const& pres, IntermediateExtension const& T) {
      std::size_t built = 0, extensions = 0, above = 0, incomplete = 0;
      std::string first_failure;
      for (auto const& p : pres) {
        try {
          auto const star = theta_star(p.theta, T);
          ++built;
          auto const ext = enumerate_extensions(p.theta, T, c.budget);
          incomplete += !ext.complete;
          extensions += ext.extensions.size();
          for (auto const& k : ext.extensions) {
            above += first_not_below(k, star).has_value();
          }
        } catch (Error const& e) {
          if (first_failure.empty()) {
            first_failure = p.name + ": " + e.what();
          }
        }
      }
      std::ostringstream out;
      out << (T.is_inverse() ? "inverse" : "not inverse") << ", no identity ({1},1); theta* a homomorphism for "
          << built << " of " << pres.size() << " premorphisms; " << extensions << " extensions, " << above
          << " not below theta*";
      if (incomplete) {
        out << ", " << incomplete << " searches over budget";
      }
      if (!first_failure.empty()) {
        out << "; first failure " << first_failure;
      }
      return out.str();
    }

    void suite_extensions(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "theorem-4-8";
      for (auto const& G : extension_groups(c)) {
        auto const pres = suite_premorphisms(G, c, r, s);
        auto const cat  = extensions_of(G, c, true);
        for (auto const& T : cat.extensions) {
          for (auto const& p : pres) {
            auto const id = T.name() + " / " + p.name;
            guarded(r, s, "theta-star-iff-meets-total", id, [&] { theorem_checks(r, c, id, p.theta, T); });
          }
        }
        if (!c.explore_non_monoid) {
          continue;
        }
        for (auto const& T : extensions_of(G, c, false).extensions) {
          if (T.is_intermediate()) {
            continue;
          }
          r.add({s, "non-monoid-exploration", T.name(), Status::hypothesis_not_met, observe(c, pres, T)});
        }
      }
    }

    void suite_meet_identities(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "lemma-4-7";
      for (auto const& G : extension_groups(c)) {
        auto const pres = suite_premorphisms(G, c, r, s);
        for (auto const& T : extensions_of(G, c, true).extensions) {
          auto const family = support(T);
          for (auto const& p : pres) {
            auto const id = T.name() + " / " + p.name;
            guarded(r, s, "meet-map-identities", id, [&] {
              for (auto const& item : lemma_4_7_checks(p.theta, family).items) {
                r.check(item.failures.empty(), true, s, "meet-map-identity-" + item.name, id,
                        item.failures.empty() ? "" : item.failures.front());
              }
            });
          }
        }
      }
    }

    // ---- topology ----------------------------------------------------------

    bool has_comparable_pair(Gamma const& G) {
      for (Elem f = 0; f < G.size(); ++f) {
        for (Elem g = 0; g < G.size(); ++g) {
          if (f != g && G.at(f).is_restriction_of(G.at(g))) {
            return true;
          }
        }
      }
      return false;
    }

    std::string point_pair(Gamma const& G, std::optional<std::pair<std::size_t, std::size_t>> p) {
      if (!p) {
        return "no witness";
      }
      return G.at(static_cast<Elem>(p->first)).to_string() + " and " + G.at(static_cast<Elem>(p->second)).to_string();
    }

    void suite_compact_open(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-1";
      for (auto const& X : spaces(c)) {
        auto const id = "Gamma(" + space_id(*X) + ")";
        guarded(r, s, "tau-co-T0", id, [&] {
          auto const G   = gamma(X);
          auto const co  = tau_co(G);
          auto const sep = separation_axioms(co.topology);
          bool const hyp = X->is_discrete();
          r.check(sep.t0, hyp, s, "tau-co-T0", id, "indistinguishable: " + point_pair(G, sep.t0_witness));
          if (has_comparable_pair(G)) {
            r.check(!sep.t1, true, s, "tau-co-not-T1", id, "T1 despite a strictly comparable pair");
          } else {
            r.skip(s, "tau-co-not-T1", id, "no strictly comparable pair");
          }
          auto const ev = evaluation_hypotheses(G, co.topology);
          r.check(ev.ok(), hyp, s, "evaluation-open-and-continuous", id,
                  ev.witness ? "at f = " + G.at(ev.witness->first).to_string() + ", x = "
                                   + std::to_string(ev.witness->second)
                             : "no witness");
          auto const top = check_topological_inverse_semigroup(co);
          r.check(top.product_continuous, hyp, s, "tau-co-product-continuous", id,
                  top.product_point ? "at " + elem_pair(G.semigroup(), *top.product_point) : "no witness");
        });
      }
    }

    void suite_coarsest_topology(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "coarsest-topology";
      for (std::size_t n = 2; n <= std::min<std::size_t>(3, c.discrete_max_points); ++n) {
        auto const X  = std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n));
        auto const G  = gamma(X);
        auto const co = tau_co(G).topology;
        auto const base = "Gamma(discrete" + std::to_string(n) + ")";
        guarded(r, s, "tau-co-coarsest", base, [&] {
          auto const cat = coarsest_topology_catalog(G);
          r.pass(s, "semigroup-topology-catalog", base,
                 std::to_string(cat.topologies.size()) + " semigroup topologies (all of them), "
                     + std::to_string(cat.meeting_hypotheses()) + " meet the evaluation hypotheses");
          for (std::size_t i = 0; i < cat.topologies.size(); ++i) {
            auto const id = base + " " + cat.topologies[i].name();
            if (cat.hypotheses[i]) {
              r.check(cat.topologies[i].finer_than(co), true, s, "tau-co-coarsest", id,
                      "tau_co is not contained in " + cat.topologies[i].name());
            } else {
              r.add({s, "tau-co-coarsest", id, Status::hypothesis_not_met,
                     "evaluation not continuous or Gamma*X not open"});
            }
          }
        });
      }
    }

    void suite_inverse_compact_open(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-4";
      for (auto const& X : spaces(c)) {
        auto const id = "Gamma(" + space_id(*X) + ")";
        guarded(r, s, "tau-ico-topological", id, [&] {
          auto const G   = gamma(X);
          auto const co  = tau_co(G);
          auto const ico = tau_ico(G);
          auto const hco = tau_hco(G);
          auto const top = check_topological_inverse_semigroup(ico);
          std::string why;
          if (top.product_point) {
            why = "product escapes at " + elem_pair(G.semigroup(), *top.product_point);
          } else if (top.inversion_point) {
            why = "inversion at " + G.semigroup().label(*top.inversion_point);
          }
          r.check(top.ok(), X->is_discrete(), s, "tau-ico-topological", id, why);
          r.check(ico.topology.finer_than(co.topology), true, s, "tau-co-within-tau-ico", id, "a tau_co open is missing");
          r.check(hco.topology.finer_than(ico.topology), true, s, "tau-ico-within-tau-hco", id,
                  "a tau_ico open is missing");
        });
      }
    }

    void order_check(VerificationReport& r, std::string const& id, TopologizedSemigroup const& ts) {
      std::string const s   = "topology-3-8";
      auto const        top = check_topological_inverse_semigroup(ts);
      if (!top.ok()) {
        r.add({s, "T2-iff-order-closed", id, Status::hypothesis_not_met, "not a topological inverse semigroup"});
        return;
      }
      auto const o = order_closed_iff_T2(ts);
      std::string why = std::string("T2 ") + (o.t2 ? "yes" : "no") + ", order closed " + (o.order_closed ? "yes" : "no");
      r.check(o.agree(), true, s, "T2-iff-order-closed", id, why);
    }

    void suite_order_closed(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-8";
      for (auto const& X : spaces(c)) {
        auto const id = "Gamma(" + space_id(*X) + ")";
        guarded(r, s, "T2-iff-order-closed", id, [&] {
          auto const G = gamma(X);
          order_check(r, id + " tau_co", tau_co(G));
          order_check(r, id + " tau_ico", tau_ico(G));
          order_check(r, id + " tau_hco", tau_hco(G));
        });
      }
      std::vector<std::pair<std::string, std::shared_ptr<FiniteSemigroup const>>> carriers{
          {"I(1)", symmetric_inverse_monoid(1).semigroup},
          {"I(2)", symmetric_inverse_monoid(2).semigroup},
          {"BR(Z2)", birget_rhodes(group("Z2")).semigroup_ptr()},
          {"BR(Z3)", birget_rhodes(group("Z3")).semigroup_ptr()},
      };
      for (auto const& [name, S] : carriers) {
        guarded(r, s, "T2-iff-order-closed", name, [&] {
          for (auto const& tau : semigroup_topologies(*S)) {
            order_check(r, name + " " + tau.name(), {name, S, tau});
          }
        });
      }
    }

    void suite_hyperspace_refinement(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-9";
      for (std::size_t n = 1; n <= c.discrete_max_points; ++n) {
        auto const X  = std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n));
        auto const id = "Gamma(discrete" + std::to_string(n) + ")";
        guarded(r, s, "tau-hco-hausdorff-topological", id, [&] {
          auto const G   = gamma(X);
          auto const hco = tau_hco(G);
          auto const top = check_topological_inverse_semigroup(hco);
          auto const sep = separation_axioms(hco.topology);
          r.check(top.ok(), true, s, "tau-hco-topological", id, "product or inversion discontinuous");
          r.check(sep.t2, true, s, "tau-hco-T2", id, "not separated: " + point_pair(G, sep.t2_witness));
        });
      }
    }

    void suite_idempotents_as_closed_sets(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-12";
      for (auto const& X : spaces(c)) {
        auto const id = space_id(*X);
        guarded(r, s, "idempotents-isomorphic-to-CL", id, [&] {
          auto const iso = idempotent_iso(X);
          r.check(iso.bijective && iso.homomorphic, true, s, "phi-bijective-homomorphism", id, iso.witness);
          r.check(iso.continuous && iso.open, X->is_discrete(), s, "phi-homeomorphism", id,
                  iso.witness.empty() ? "phi or its inverse is discontinuous" : iso.witness);
        });
      }
    }

    void suite_domain_meets(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "topology-3-14";
      std::vector<SpacePtr> Zs;
      for (std::size_t n = 1; n <= std::min<std::size_t>(3, c.topology_max_points); ++n) {
        for (auto& t : all_topologies(n)) {
          Zs.push_back(std::make_shared<FiniteTopology const>(std::move(t)));
        }
      }
      for (std::size_t n = 1; n <= std::min<std::size_t>(3, c.discrete_max_points); ++n) {
        auto const X = std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n));
        auto const G = gamma(X);
        auto const E = G.semigroup().idempotents();
        std::mt19937_64 rng(derive(c.seed, "eta " + std::to_string(n)));
        for (auto const& Z : Zs) {
          for (std::size_t k = 0; k < c.domain_meet_samples; ++k) {
            std::vector<Elem> eta(Z->size());
            for (auto& e : eta) {
              e = E[std::uniform_int_distribution<std::size_t>(0, E.size() - 1)(rng)];
            }
            std::string id = "Gamma(discrete" + std::to_string(n) + ") Z=" + space_id(*Z) + " eta=[";
            for (std::size_t z = 0; z < eta.size(); ++z) {
              id += (z ? "," : "") + G.at(eta[z]).to_string();
            }
            id += "]";
            guarded(r, s, "domain-meet-is-meet", id, [&] {
              auto const d = check_domain_meet(G, Z, eta);
              r.check(d.mismatches == 0, true, s, "domain-meet-is-meet", id,
                      "differs at A = " + (d.witness ? d.witness->to_string() : std::string("?")));
              if (d.eta_continuous) {
                r.check(d.continuous, true, s, "meet-map-continuous", id,
                        "discontinuous at A = "
                            + (d.continuity_witness ? d.continuity_witness->to_string() : std::string("?")));
              } else {
                r.add({s, "meet-map-continuous", id, Status::hypothesis_not_met, "eta is not continuous"});
              }
            });
          }
        }
      }
    }

    void suite_point_set_family(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "remark-3-11";
      for (std::size_t n = 1; n <= c.discrete_max_points; ++n) {
        auto const id = "Gamma(discrete" + std::to_string(n) + ")";
        guarded(r, s, "hco-equals-point-set-topology", id, [&] {
          auto const G   = gamma(std::make_shared<FiniteTopology const>(FiniteTopology::discrete(n)));
          auto const hco = tau_hco(G).topology;
          auto const pts = tau_point_sets(G).topology;
          std::string why;
          for (Elem f = 0; f < G.size() && why.empty(); ++f) {
            if (hco.neighbourhood(f) != pts.neighbourhood(f)) {
              why = "neighbourhoods of " + G.at(f).to_string() + " differ";
            }
          }
          r.check(why.empty(), true, s, "hco-equals-point-set-topology", id, why);
        });
      }
    }

    void semilattice_check(VerificationReport& r, VerifyConfig const& c, std::string const& id,
                           TopologizedSemigroup const& E, bool hypothesis) {
      std::string const s  = "lemma-4-12";
      auto const        sm = small_semilattices_and_pi(E, c.pi_bound);
      r.check(sm.small, hypothesis, s, "small-semilattices", id,
              "U of " + (sm.witness_point ? E.carrier->label(*sm.witness_point) : std::string("?"))
                  + " is not a subsemilattice");
      if (!sm.pi_checked) {
        r.skip(s, "product-map-continuous", id, sm.skip_reason);
      } else if (!sm.small || !sm.hausdorff) {
        r.add({s, "product-map-continuous", id, Status::hypothesis_not_met,
               std::string("pi ") + (sm.pi_continuous ? "continuous" : "discontinuous")
                   + (sm.hausdorff ? "" : "; not Hausdorff") + (sm.small ? "" : "; no small semilattices")});
      } else {
        r.check(sm.pi_continuous, true, s, "product-map-continuous", id,
                "discontinuous at " + (sm.pi_witness ? sm.pi_witness->to_string() : std::string("?")));
      }
    }

    void suite_small_semilattices(VerifyConfig const& c, VerificationReport& r) {
      std::string const s = "lemma-4-12";
      for (auto const& X : spaces(c)) {
        auto const id = "E(Gamma(" + space_id(*X) + ")) tau_hco";
        guarded(r, s, "small-semilattices", id, [&] {
          auto const G = gamma(X);
          semilattice_check(r, c, id, idempotent_part(tau_hco(G)), X->is_discrete());
        });
      }
      for (auto const& G : groups_up_to(4)) {
        auto const id = "E(BR(" + G->name() + ")) discrete";
        guarded(r, s, "small-semilattices", id, [&] {
          auto const br = birget_rhodes(G);
          semilattice_check(r, c, id,
                            idempotent_part({br.name(), br.semigroup_ptr(), FiniteTopology::discrete(br.size())}),
                            true);
        });
      }
    }

    void suite_translation_premorphism(VerifyConfig const&, VerificationReport& r) {
      std::string const s = "translation-premorphism";
      for (auto const& d : {"Z3", "Z4", "Z2xZ2", "Z5"}) {
        auto const G = group(d);
        guarded(r, s, "translation-premorphism", G->name(), [&] {
          auto const L  = lambda_premorphism(G);
          auto const id = G->name();
          r.check(L.premorphism && L.l_one_identity, true, s, "translation-premorphism", id, L.witness);
          r.check(L.range_idempotent, true, s, "translation-range-idempotents", id, L.witness);
          r.check(L.homomorphism && L.extends, true, s, "lambda-extends-translation", id, L.witness);
          r.check(L.meets_complement, true, s, "meet-is-identity-on-complement", id, L.witness);
          r.check(L.agrees_with_star, true, s, "lambda-equals-theta-star", id, L.witness);
        });
      }
    }

    using SuiteFn = void (*)(VerifyConfig const&, VerificationReport&);

    std::vector<std::pair<std::string, SuiteFn>> const& registry() {
      static std::vector<std::pair<std::string, SuiteFn>> const r{
          {"counts", &suite_counts},
          {"axioms", &suite_axioms},
          {"exel", &suite_exel},
          {"theorem-4-8", &suite_extensions},
          {"lemma-4-7", &suite_meet_identities},
          {"topology-3-1", &suite_compact_open},
          {"coarsest-topology", &suite_coarsest_topology},
          {"topology-3-4", &suite_inverse_compact_open},
          {"topology-3-8", &suite_order_closed},
          {"topology-3-9", &suite_hyperspace_refinement},
          {"topology-3-12", &suite_idempotents_as_closed_sets},
          {"topology-3-14", &suite_domain_meets},
          {"remark-3-11", &suite_point_set_family},
          {"lemma-4-12", &suite_small_semilattices},
          {"translation-premorphism", &suite_translation_premorphism},
      };
      return r;
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> n;
      for (auto const& [name, fn] : registry()) {
        n.push_back(name);
      }
      n.push_back("all");
      return n;
    }();
    return names;
  }

  VerificationReport run_suite(std::string const& name, VerifyConfig const& config) {
    VerificationReport report(name, config.seed);
    if (name == "all") {
      std::vector<std::future<VerificationReport>> parts;
      for (auto const& [n, fn] : registry()) {
        parts.push_back(std::async(std::launch::async, [&config, n = n, fn = fn] {
          VerificationReport part(n, config.seed);
          fn(config, part);
          return part;
        }));
      }
      for (auto& p : parts) {
        report.merge(p.get());
      }
    } else {
      auto const& reg = registry();
      auto it = std::find_if(reg.begin(), reg.end(), [&](auto const& e) { return e.first == name; });
      if (it == reg.end()) {
        throw ValidationError("unknown suite '" + name + "'");
      }
      it->second(config, report);
    }
    report.sort();
    return report;
  }

}  // namespace brtk
