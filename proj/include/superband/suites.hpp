#pragma once

// Seeded verification suites behind `superband verify`. Each suite draws its
// own stream from the configured seed, so suites are independent of the order
// they run in. Reports are ordered by suite, then by identity label.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "evolution.hpp"
#include "expr.hpp"
#include "families.hpp"
#include "gamma.hpp"
#include "io.hpp"
#include "random.hpp"

namespace superband {

  enum class Suite { algebra, supermatrix, gamma, families, analysis, resolvent, all };
  enum class Format { text, json };

  inline constexpr Suite kSuites[] = {Suite::algebra,  Suite::supermatrix,
                                      Suite::gamma,    Suite::families,
                                      Suite::analysis, Suite::resolvent};

  inline char const* to_string(Suite s) {
    switch (s) {
      case Suite::algebra: return "algebra";
      case Suite::supermatrix: return "supermatrix";
      case Suite::gamma: return "gamma";
      case Suite::families: return "families";
      case Suite::analysis: return "analysis";
      case Suite::resolvent: return "resolvent";
      case Suite::all: return "all";
    }
    return "?";
  }

  inline Suite parse_suite(std::string const& name) {
    for (Suite s : kSuites) {
      if (name == to_string(s)) {
        return s;
      }
    }
    if (name == "all") {
      return Suite::all;
    }
    throw ConfigError("unknown suite '" + name + "'");
  }

  struct SuiteConfig {
    unsigned      generators = 4;
    std::uint64_t seed       = 42;
    Suite         suite      = Suite::all;
    Format        format     = Format::text;
    unsigned      samples    = 200;

    void validate() const {
      if (generators < 1 || generators > kMaxGenerators) {
        throw ConfigError("--generators must be in 1..16");
      }
      if (samples < 1) {
        throw ConfigError("--samples must be at least 1");
      }
    }
  };

  struct ReportEntry {
    std::string             suite;
    std::string             id;
    std::string             statement;
    bool                    pass      = true;
    bool                    skipped   = false;
    std::size_t             instances = 0;
    std::optional<io::json> counterexample;
    double                  seconds = 0;
  };

  struct ExitReport {
    SuiteConfig              config;
    std::vector<ReportEntry> entries;

    [[nodiscard]] bool pass() const {
      return std::all_of(entries.begin(), entries.end(),
                         [](ReportEntry const& e) { return e.pass; });
    }
    [[nodiscard]] int exit_code() const {
      return pass() ? 0 : 1;
    }

    /// Durations are left out unless asked for, so identical configurations
    /// give byte-identical output.
    [[nodiscard]] io::json to_json(bool timings = false) const {
      io::json checks = io::json::array();
      for (auto const& e : entries) {
        io::json j{{"suite", e.suite},
                   {"id", e.id},
                   {"statement", e.statement},
                   {"status", e.skipped ? "skip" : (e.pass ? "pass" : "fail")},
                   {"instances", e.instances}};
        if (e.counterexample) {
          j["counterexample"] = *e.counterexample;
        }
        if (timings) {
          j["seconds"] = e.seconds;
        }
        checks.push_back(std::move(j));
      }
      return io::json{{"generators", config.generators},
                      {"seed", config.seed},
                      {"suite", to_string(config.suite)},
                      {"samples", config.samples},
                      {"pass", pass()},
                      {"checks", checks}};
    }

    [[nodiscard]] std::string to_text(bool timings = true) const {
      std::ostringstream out;
      for (auto const& e : entries) {
        out << e.suite << ' ' << e.id << ": "
            << (e.skipped ? "skip" : (e.pass ? "pass" : "FAIL")) << "  ("
            << e.instances << " instances";
        if (timings) {
          out << ", " << e.seconds << " s";
        }
        out << ")  " << e.statement << '\n';
        if (e.counterexample) {
          out << "    counterexample: " << e.counterexample->dump() << '\n';
        }
      }
      out << (pass() ? "all checks passed" : "some checks FAILED") << '\n';
      return out.str();
    }
  };

  /// Accumulates pass/fail per identity label across instances.
  class Recorder {
   public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    template <typename F>
    bool check(std::string const& id, std::string const& statement, F&& pred,
               std::function<io::json()> const& witness = {}) {
      auto& e     = entry(id, statement);
      auto  start = std::chrono::steady_clock::now();
      bool  ok    = pred();
      e.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                 - start)
                       .count();
      ++e.instances;
      if (!ok && e.pass) {
        e.pass = false;
        if (witness) {
          e.counterexample = witness();
        }
      }
      return ok;
    }

    void skip(std::string const& id, std::string const& statement) {
      entry(id, statement).skipped = true;
    }

    /// Folds a CheckList produced for one instance.
    void absorb(CheckList const& list, std::function<io::json()> const& witness) {
      for (auto const& c : list.checks()) {
        check(c.id, c.statement, [&] { return c.pass; }, witness);
      }
    }

    [[nodiscard]] std::vector<ReportEntry> entries() const {
      std::vector<ReportEntry> out;
      for (auto const& [id, e] : entries_) {
        out.push_back(e);
      }
      return out;
    }

   private:
    ReportEntry& entry(std::string const& id, std::string const& statement) {
      auto [it, fresh] = entries_.try_emplace(id);
      if (fresh) {
        it->second.suite     = suite_;
        it->second.id        = id;
        it->second.statement = statement;
      }
      return it->second;
    }

    std::string                        suite_;
    std::map<std::string, ReportEntry> entries_;
  };

  namespace suites {

    using io::json;

    inline json element_witness(std::initializer_list<Element> xs) {
      json out = json::array();
      for (auto const& x : xs) {
        out.push_back(io::to_json(x));
      }
      return out;
    }

    /// Annihilator-based checks are skipped above this size.
    inline constexpr unsigned kAnnihilatorMaxGenerators = 10;

    inline void algebra(Sampler& rng, unsigned samples, Recorder& rec) {
      auto const& alg = rng.algebra();
      for (unsigned i = 0; i < samples; ++i) {
        auto x = rng.any(), y = rng.any(), z = rng.any();
        auto w = [&] { return element_witness({x, y, z}); };
        rec.check("assoc", "(x y) z = x (y z)",
                  [&] { return (x * y) * z == x * (y * z); }, w);
        rec.check("distrib", "x (y + z) = x y + x z",
                  [&] { return x * (y + z) == x * y + x * z; }, w);
        auto a = rng.odd(), b = rng.odd(), e = rng.even();
        auto wo = [&] { return element_witness({a, b, e}); };
        rec.check("anticomm", "a b = -b a and a^2 = 0 for odd a, b",
                  [&] { return a * b == -(b * a) && (a * a).is_zero(); }, wo);
        rec.check("central", "even elements commute with everything",
                  [&] { return e * x == x * e && e * a == a * e; }, wo);
        rec.check("grading", "parity of products adds",
                  [&] {
                    auto ok = [](Element const& p, bool odd) {
                      return odd ? p.is_odd() : p.is_even();
                    };
                    return ok(a * b, false) && ok(e * a, true)
                           && ok(e * rng.even(), false);
                  },
                  wo);
        auto u = rng.any() + alg.scalar(rng.coefficient());
        if (!is_zero(u.body())) {
          rec.check("inverse", "x x^-1 = x^-1 x = 1 for nonzero body",
                    [&] {
                      auto inv = u.inverse();
                      return u * inv == Element(1) && inv * u == Element(1);
                    },
                    [&] { return element_witness({u}); });
        }
        auto soul = x.soul();
        rec.check("nilpotent", "the soul is nilpotent of index <= (n+1)/2 + 1",
                  [&] {
                    auto k = soul.nilpotency_index();
                    return k && *k <= (alg.generators() + 1) / 2 + 1
                           && soul.pow(*k).is_zero();
                  },
                  [&] { return element_witness({soul}); });
        rec.check("expr", "reading the printed form gives the element back",
                  [&] { return parse_element(alg, x.to_string()) == x; },
                  [&] { return element_witness({x}); });
        if (alg.generators() > kAnnihilatorMaxGenerators) {
          rec.skip("ann-sound", "annihilator basis kills the span");
          rec.skip("ann-member", "annihilator membership matches direct test");
          continue;
        }
        std::vector<Element> span{rng.odd(2)};
        if (rng.coin(0.4)) {
          span.push_back(rng.odd(1));
        }
        auto ann = annihilator_odd(alg, span);
        auto ws  = [&] {
          json j = json::array();
          for (auto const& v : span) {
            j.push_back(io::to_json(v));
          }
          return j;
        };
        rec.check("ann-sound", "annihilator basis kills the span",
                  [&] {
                    for (auto const& g : ann.basis) {
                      for (auto const& v : span) {
                        if (!(v * g).is_zero()) {
                          return false;
                        }
                      }
                    }
                    return true;
                  },
                  ws);
        Element candidate(alg.generators(), {});
        for (auto const& g : ann.basis) {
          if (rng.coin(0.3)) {
            candidate += rng.coefficient() * g;
          }
        }
        if (rng.coin(0.3)) {
          candidate += rng.odd(1);
        }
        rec.check("ann-member", "annihilator membership matches direct test",
                  [&] {
                    bool direct = std::all_of(span.begin(), span.end(),
                                              [&](Element const& v) {
                                                return (v * candidate).is_zero();
                                              });
                    return ann.contains(alg, candidate) == direct;
                  },
                  ws);
      }
    }

    inline void supermatrix(Sampler& rng, unsigned samples, Recorder& rec) {
      std::pair<unsigned, unsigned> const shapes[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
      for (unsigned i = 0; i < samples; ++i) {
        auto m = rng.one_one_invertible_b();
        auto w = [&] { return io::to_json(m); };
        auto [even_part, odd_part] = ber_parts(m);
        rec.check("ber-add", "Ber M = Ber M_even + Ber M_odd on (1|1)",
                  [&] { return berezinian(m) == even_part + odd_part; }, w);
        rec.check("ber-nil", "(Ber M_odd)^2 = 0",
                  [&] { return (odd_part * odd_part).is_zero(); }, w);

        auto [p, q] = shapes[i % 4];
        auto x      = rng.supermatrix(p, q, true);
        auto y      = rng.supermatrix(p, q, true);
        auto wxy    = [&] { return json::array({io::to_json(x), io::to_json(y)}); };
        rec.check("ber-mult", "Ber(M N) = Ber M Ber N",
                  [&] { return berezinian(x * y) == berezinian(x) * berezinian(y); },
                  wxy);
        rec.check("str-cyclic", "str(M N) = str(N M)",
                  [&] { return supertrace(x * y) == supertrace(y * x); }, wxy);
        rec.check("inverse", "M M^-1 = M^-1 M = I",
                  [&] {
                    auto inv = inverse(x);
                    auto id  = GrassmannMatrix::identity(p, q);
                    return x * inv == id && inv * x == id;
                  },
                  wxy);
        rec.check("ber-inv", "Ber(M^-1) Ber M = 1",
                  [&] { return berezinian(inverse(x)) * berezinian(x) == Element(1); },
                  wxy);
        // Antitriangle with p = 1: Ber = -Gamma B^-1 Delta / det B.
        auto anti = x;
        {
          Matrix<Element> e = anti.entries();
          e(0, 0)           = Element(0);
          anti              = GrassmannMatrix(p, q, std::move(e));
        }
        rec.check("reduction", "zero even-even block classifies as odd-reduced",
                  [&] { return classify_reduction(anti) == Reduction::odd_reduced || p > 1; },
                  [&] { return io::to_json(anti); });
        if (p == 1) {
          rec.check("ber-anti",
                    "Ber of a (1|q) antitriangle = -det(G B^-1 D) / det B",
                    [&] {
                      auto g = anti.block(Block::even_odd);
                      auto b = anti.block(Block::odd_odd);
                      auto d = anti.block(Block::odd_even);
                      auto lhs = berezinian(anti);
                      auto rhs = -(det_even(g * inverse_even(b) * d)
                                   * det_even(b).inverse());
                      return lhs == rhs;
                    },
                    [&] { return io::to_json(anti); });
        }
      }
    }

    inline void gamma(Sampler& rng, unsigned samples, Recorder& rec) {
      auto const& alg = rng.algebra();
      if (alg.generators() > kAnnihilatorMaxGenerators) {
        for (char const* id : {"chain-product", "chain-ber", "left-zero",
                               "band-consistent", "membership", "idempotent"}) {
          rec.skip(id, "needs the odd annihilator");
        }
      } else {
        std::pair<unsigned, unsigned> const shapes[] = {{1, 1}, {1, 2}, {2, 2}};
        for (unsigned i = 0; i < samples; ++i) {
          auto [p, q] = shapes[i % 3];
          auto chain  = rng.strong_gamma_chain(p, q, 3 + i % 3);
          auto w      = [&] {
            json j = json::array();
            for (auto const& m : chain) {
              j.push_back(io::to_json(m));
            }
            return j;
          };
          auto report = chain_product_verify(chain);
          rec.check("chain-product", "strong Gamma chain product has the closed form",
                    [&] { return report.matches_closed_form; }, w);
          rec.check("chain-ber",
                    "chain Berezinian = -det(G_1 C D_n) / det(B_1 C B_n)",
                    [&] { return report.ber_matches(); }, w);

          // Matrices [[0, g_i], [d, 1]] with g_i in V and d in Ann V form a
          // left-zero band.
          Element g1 = rng.odd(2);
          auto    ann = annihilator_odd(alg, std::vector<Element>{g1}).basis;
          Element d   = rng.coefficient() * ann[rng.integer(0, static_cast<int>(ann.size()) - 1)];
          Element g2  = rng.coefficient() * g1;
          GrassmannMatrix m1(1, 1, {{Element(0), g1}, {d, Element(1)}});
          GrassmannMatrix m2(1, 1, {{Element(0), g2}, {d, Element(1)}});
          auto wm = [&] { return json::array({io::to_json(m1), io::to_json(m2)}); };
          auto band = band_pair_check(m1, m2);
          rec.check("left-zero", "constructed left-zero pairs satisfy M N = M",
                    [&] {
                      return band.relation == (g1 == g2 ? BandRelation::both
                                                        : BandRelation::left_zero);
                    },
                    wm);
          rec.check("band-consistent",
                    "block conditions agree with multiplication",
                    [&] {
                      auto r = rng.supermatrix(1 + i % 2, 1 + i % 2);
                      auto s = rng.supermatrix(1 + i % 2, 1 + i % 2);
                      auto zero_ee = [](GrassmannMatrix x) {
                        Matrix<Element> e = x.entries();
                        for (std::size_t a = 0; a < x.p(); ++a) {
                          for (std::size_t b = 0; b < x.p(); ++b) {
                            e(a, b) = Element(0);
                          }
                        }
                        return GrassmannMatrix(x.p(), x.q(), std::move(e));
                      };
                      return band.consistent()
                             && band_pair_check(zero_ee(r), zero_ee(s)).consistent();
                    },
                    wm);
          rec.check("idempotent", "[[0, g], [d, 1]] with g d = d g = 0 is idempotent",
                    [&] { return idempotent_strong_check(m1) && m1 * m1 == m1; }, wm);
          GammaSet gs(alg, {g1});
          rec.check("membership", "left membership for G in V, D in Ann V",
                    [&] {
                      return gamma_membership(m1, gs, Side::left)
                             && (d.is_zero() || g1 * d != Element(0)
                                 || gamma_membership(
                                     GrassmannMatrix(1, 1, {{Element(0), d}, {g1, Element(1)}}),
                                     gs, Side::right));
                    },
                    wm);
        }
      }
      for (unsigned i = 0; i < samples; ++i) {
        // V = span{g, b g} with b a square-zero even monomial is b-stable.
        if (alg.generators() < 3) {
          break;
        }
        Element g = rng.odd(2);
        Element b = alg.monomial({static_cast<unsigned>(rng.integer(1, alg.generators() - 1)),
                                  alg.generators()},
                                 1);
        std::vector<Element> span{g};
        if (!(b * g).is_zero() && odd_rank(alg, std::vector<Element>{g, b * g}) == 2) {
          span.push_back(b * g);
        }
        rec.check("stabilized", "b Gamma lies in Gamma for constructed spans",
                  [&] { return GammaSet(alg, span, {b}).stabilized(); },
                  [&] { return element_witness({g, b}); });
      }
      for (unsigned i = 0; i < std::min(samples, 20u); ++i) {
        Element alpha = rng.odd(2);
        auto    w     = [&] { return element_witness({alpha}); };
        rec.check("closure", "P and E close with t, Q with s, T with t+s; Y and A do not close",
                  [&] {
                    auto c = [&](FamilyKind k) {
                      return closure_check(make_family(k, alpha));
                    };
                    return c(FamilyKind::P).substitution == "t"
                           && c(FamilyKind::Q).substitution == "s"
                           && c(FamilyKind::E).substitution == "t"
                           && c(FamilyKind::T).substitution == "t+s"
                           && !c(FamilyKind::Y).closed && !c(FamilyKind::A).closed;
                  },
                  w);
      }
    }

    inline void families(Sampler& rng, unsigned samples, Recorder& rec) {
      unsigned const rounds = std::min(samples, 50u);
      for (unsigned i = 0; i < rounds; ++i) {
        Element alpha = rng.odd(2);
        Element sigma = rng.odd(2), rho = rng.odd(2);
        Element u = rng.even(), v = rng.even();
        auto    w = [&] { return element_witness({alpha, sigma, rho, u, v}); };
        rec.absorb(verify_semigroup_laws(alpha, sigma, rho, u, v), w);
        rec.absorb(differential_sequence(alpha, 8).checks, w);
        rec.check("cayley",
                  "direct products reproduce the reference table outside its "
                  "three known misprints",
                  [&] {
                    auto t = cayley_table_verify(alpha);
                    std::vector<std::string> cells;
                    for (auto const& c : t.discrepancies) {
                      cells.push_back(c.row + "x" + c.col + "=" + c.computed);
                    }
                    std::vector<std::string> const known = {
                        "P(t)xY(t)=Y(0)", "P(s)xY(t)=Y(0)", "Y(t)xP(s)=At"};
                    return t.closed && t.upper_left_associative && cells == known;
                  },
                  w);
        Element tau = rng.coin() ? alpha * rng.odd(1) : rng.nilpotent_even();
        auto    f   = make_family(FamilyKind::P, alpha);
        auto    g   = make_family(FamilyKind::T, alpha);
        rec.check("nilpotent-time",
                  "P and T commute at a nilpotent time annihilating alpha",
                  [&] { return nilpotent_time_commute_check(f, g, tau, alpha).consistent(); },
                  [&] { return element_witness({alpha, tau}); });
        auto fam = rng.family(1, 1, 1);
        rec.check("smoothing", "trapezoid rule equals the integral on t-linear families",
                  [&] { return smoothing(fam) == smoothing_trapezoid(fam); },
                  [&] { return io::to_json(fam); });
        auto poly = rng.family(1 + i % 2, 1, 1 + i % 3);
        rec.check("functional", "F(t+s) - F(t)F(s) matches its Taylor form iff it should",
                  [&] {
                    auto r = functional_residual(poly);
                    return r.matches_taylor == (r.residual == r.taylor);
                  },
                  [&] { return io::to_json(poly); });
      }
    }

    inline void analysis(Sampler& rng, unsigned samples, Recorder& rec) {
      for (unsigned i = 0; i < samples; ++i) {
        unsigned p = 1 + i % 2;
        ParamMatrix f(p, p);
        bool        constructed = false;
        switch (i % 4) {
          case 0:
          case 1: {
            auto [k0, k1] = rng.band_pair(p);
            f = lift(k0) + TimePoly::variable(kT) * lift(k1);
            constructed = true;
            break;
          }
          case 2: {
            auto [k0, k1] = rng.band_pair(p);
            f = lift(k0) + TimePoly::variable(kT) * lift(k1 + rng.even(1) * rng.supermatrix(p, p));
            break;
          }
          default: f = rng.family(p, p, 1);
        }
        auto w   = [&] { return io::to_json(f); };
        auto rep = equivalence_report(f, true);
        rec.check("theorem", "band, functional and differential statements agree",
                  [&] { return rep.agree(); }, w);
        if (constructed) {
          rec.check("theorem-positive", "constructed band pairs satisfy all three",
                    [&] { return rep.band && rep.functional && rep.differential; }, w);
        }
        auto comps = components_of(f);
        auto sys   = band_component_system_check(comps);
        rec.check("system", "component relations hold iff the band equation holds",
                  [&] { return sys.consistent(); }, w);
        rec.check("ak", "A_K = K'(0) = K_1",
                  [&] { return lift(generator_of(f)) == lift(comps.generator()); }, w);
        auto power = rng.power_band(p, 2 + i % 3);
        auto wp    = [&] { return io::to_json(power.family()); };
        rec.check("kn", "power-type band families satisfy the component system",
                  [&] {
                    auto r = band_component_system_check(power);
                    return r.holds() && r.band_equation;
                  },
                  wp);
        rec.check("kkn", "raw functional residual equals the double sum",
                  [&] { return n_functional_residual(power).matches(); }, wp);
        rec.check("u", "differential defect equals U_n",
                  [&] { return n_differential_defect(power).matches(); }, wp);
      }
    }

    inline void resolvent(Sampler& rng, unsigned samples, Recorder& rec) {
      auto const& alg = rng.algebra();
      for (unsigned i = 0; i < samples; ++i) {
        Element alpha = rng.odd(2);
        auto    w     = [&] { return element_witness({alpha}); };
        auto    P     = make_family(FamilyKind::P, alpha);
        auto    T     = make_family(FamilyKind::T, alpha);
        auto    A     = eval_at(make_family(FamilyKind::A, alpha), Element(0));
        auto    rp    = laplace(P);
        auto    rt    = laplace(T);
        auto    zi    = [](int k) { return LaurentPoly::monomial(Element(1), -k); };
        LaurentPoly a(alpha), zero;
        rec.check("rz", "laplace(P) = [[0, a/z^2], [a/z, 1/z]]",
                  [&] { return rp == LaurentMatrix(1, 1, {{zero, a * zi(2)}, {a * zi(1), zi(1)}}); },
                  w);
        rec.check("rz1", "laplace(T) = [[1/z, a/z^2], [0, 1/z]]",
                  [&] { return rt == LaurentMatrix(1, 1, {{zi(1), a * zi(2)}, {zero, zi(1)}}); },
                  w);
        rec.check("rrt", "R_T(z) - R_T(w) = (w - z) R_T(z) R_T(w)",
                  [&] { return resolvent_defect(rt).is_zero(); }, w);
        rec.check("rra", "R_P resolvent defect = (w - z)/(z w^2) A",
                  [&] {
                    return resolvent_defect(rp)
                           == generator_resolvent_factor() * lift_laurent(A);
                  },
                  w);
        auto f = rng.family(1, 1, 3), g = rng.family(1, 1, 2);
        rec.check("laplace-linear", "laplace(F + G) = laplace(F) + laplace(G)",
                  [&] { return laplace(f + g) == laplace(f) + laplace(g); },
                  [&] { return json::array({io::to_json(f), io::to_json(g)}); });

        GrassmannVector x0({rng.even()}, {rng.odd()});
        auto wx = [&] { return json::array({io::to_json(alpha), io::to_json(x0)}); };
        auto t  = TimePoly::variable(kT);
        rec.check("xx", "P orbit = (a k0 t, a x0 + k0)",
                  [&] {
                    return orbit(P, x0)
                           == ParamVector({t * TimePoly(alpha * x0[1])},
                                          {TimePoly(alpha * x0[0] + x0[1])});
                  },
                  wx);
        rec.check("xxt", "T orbit = (x0 + a k0 t, k0)",
                  [&] {
                    return orbit(T, x0)
                           == ParamVector({TimePoly(x0[0]) + t * TimePoly(alpha * x0[1])},
                                          {TimePoly(x0[1])});
                  },
                  wx);
        rec.check("xax", "both orbits solve X' = A X",
                  [&] {
                    return cauchy_defect(P, x0).is_zero() && cauchy_defect(T, x0).is_zero();
                  },
                  wx);
        GrassmannVector y0({Element(0)}, {x0[1]});
        rec.check("coincide", "P and T orbits coincide when x0 = 0",
                  [&] { return orbit(P, y0) == orbit(T, y0); }, wx);
        rec.check("xxp", "P has the moving-time property, T is translational",
                  [&] {
                    return moving_time_check(P) == Evolution::moving_time
                           && moving_time_check(T) == Evolution::translational;
                  },
                  w);
        rec.check("apx", "obstruction equals [A, P(t)] X(t) and vanishes iff a k0 = 0",
                  [&] {
                    auto ob = commutativity_obstruction(x0, alpha);
                    return TimePoly(ob) == commutator_on_orbit(x0, alpha)
                           && ob.is_zero() == (alpha * x0[1]).is_zero();
                  },
                  wx);
        (void)alg;
      }
    }

  }  // namespace suites

  inline ExitReport run_suite(SuiteConfig const& cfg) {
    cfg.validate();
    ExitReport report{cfg, {}};
    auto alg = create_algebra(cfg.generators);
    for (Suite s : kSuites) {
      if (cfg.suite != Suite::all && cfg.suite != s) {
        continue;
      }
      Sampler  rng(alg, cfg.seed ^ (0x9e3779b97f4a7c15ull * (static_cast<unsigned>(s) + 1)));
      Recorder rec(to_string(s));
      switch (s) {
        case Suite::algebra: suites::algebra(rng, cfg.samples, rec); break;
        case Suite::supermatrix: suites::supermatrix(rng, cfg.samples, rec); break;
        case Suite::gamma: suites::gamma(rng, cfg.samples, rec); break;
        case Suite::families: suites::families(rng, cfg.samples, rec); break;
        case Suite::analysis: suites::analysis(rng, cfg.samples, rec); break;
        case Suite::resolvent: suites::resolvent(rng, cfg.samples, rec); break;
        case Suite::all: break;
      }
      for (auto& e : rec.entries()) {
        report.entries.push_back(std::move(e));
      }
    }
    return report;
  }

}  // namespace superband
