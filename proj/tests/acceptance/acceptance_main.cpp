// Copyright 2026 The catsheaf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   catsheaf_acceptance <path-to-catsheaf-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catsheaf/dsl/commands.hpp"
#include "catsheaf/sieve.hpp"
#include "catsheaf/yoneda.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace catsheaf {
namespace {

std::string g_cli;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string data_path(const std::string& name) {
  return std::string(CATSHEAF_TEST_DATA) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

AmbientPtr ob(FiniteCategory base) {
  return std::make_shared<const AmbientCategory>(
      build_ob({std::move(base), AmbientMode::kInclusionsOnly, {}, kDefaultCap}));
}

HomTablePtr table(AmbientPtr a) { return std::make_shared<const HomTable>(std::move(a), kDefaultCap); }

AmbientPtr explicit_edz() {
  return std::make_shared<const AmbientCategory>(build_explicit_all_functors(
      {{"E", share(fixtures::empty())}, {"Disc2", share(fixtures::disc2())},
       {"Z2", share(fixtures::z2())}},
      kDefaultCap));
}

Outcome criterion1() {
  const auto start = Clock::now();
  const std::vector<FiniteCategory> cats = {fixtures::empty(), fixtures::disc2(), fixtures::arrow(),
                                            fixtures::walk3(), fixtures::z2(), fixtures::s3(),
                                            fixtures::square()};
  Outcome o;
  std::size_t mutants = 0, disagreements = 0, missed = 0, still_categories = 0;
  for (const auto& c : cats) {
    if (!validate_category(c).valid()) {
      o.pass = false;
      o.detail += "fixture invalid; ";
    }
  }
  for (const auto& c : cats) {
    const auto n = static_cast<Mor>(c.morphism_count());
    auto check = [&](FiniteCategory m, bool must_break) {
      ++mutants;
      const bool valid = validate_category(m).valid();
      if (valid != oracle::is_category(m)) ++disagreements;
      if (must_break && valid) ++missed;
      if (valid) ++still_categories;
    };
    for (Mor g = 0; g < n; ++g) {
      for (Mor f = 0; f < n; ++f) {
        const Mor original = c.composite(g, f);
        const bool composable = c.target(f) == c.source(g);
        for (Mor r = kNone; r < n; ++r) {
          if (r == original) continue;
          CategoryEditor e(c);
          e.set_composite(g, f, r);
          const bool typed = r != kNone && composable && c.source(r) == c.source(f) &&
                             c.target(r) == c.target(g);
          check(std::move(e).release(), !typed);
        }
      }
    }
    for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
      for (Mor f = 0; f < n; ++f) {
        if (f == c.identity(a)) continue;
        CategoryEditor e(c);
        e.set_identity(a, f);
        check(std::move(e).release(), true);
      }
    }
    for (Mor f = 0; f < n; ++f) {
      for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
        if (a == c.target(f)) continue;
        CategoryEditor e(c);
        e.set_target(f, a);
        check(std::move(e).release(), true);
      }
    }
  }
  const double t = seconds_since(start);
  o.pass = o.pass && disagreements == 0 && missed == 0 && t < 1.0;
  o.detail += std::to_string(cats.size()) + " fixtures valid; " + std::to_string(mutants) +
              " mutants, " + std::to_string(mutants - still_categories) +
              " rejected, " + std::to_string(still_categories) +
              " re-typed mutants are categories per oracle, " + std::to_string(disagreements) +
              " disagreements, " + std::to_string(missed) + " missed; " + std::to_string(t) + " s";
  return o;
}

Outcome criterion2() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t pairs = 0;
  std::vector<std::string> failures;
  auto sweep = [&](const std::string& label, AmbientPtr amb) {
    HomTable t(amb, kDefaultCap);
    for (Obj u = 0; u < static_cast<Obj>(amb->size()); ++u) {
      for (Obj v = 0; v < static_cast<Obj>(amb->size()); ++v) {
        BijectionReport r = check_yoneda_pair(t, u, v, kDefaultCap);
        ++pairs;
        if (!r.verdict) {
          failures.push_back(label + "(" + r.source + "," + r.target + "): " +
                             std::to_string(r.left_count) + " vs " +
                             std::to_string(r.right_count));
        }
      }
    }
  };
  sweep("O(Disc2)", ob(fixtures::disc2()));
  sweep("O(Arrow)", ob(fixtures::arrow()));
  sweep("O(Square)", ob(fixtures::square()));
  sweep("explicit{E,Disc2,Z2}", explicit_edz());
  const double t = seconds_since(start);
  o.pass = failures.empty() && t < 30.0;
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(failures.size()) + " unequal";
  for (const auto& f : failures) o.detail += "; " + f;
  o.detail += "; " + std::to_string(t) + " s";
  return o;
}

Outcome criterion3() {
  const auto start = Clock::now();
  Outcome o;
  for (auto [label, base] : std::vector<std::pair<std::string, FiniteCategory>>{
           {"O(Disc2)", fixtures::disc2()}, {"O(Arrow)", fixtures::arrow()}}) {
    HomTable t(ob(base), kDefaultCap);
    ValidationReport r = check_embedding(t, kDefaultCap);
    o.detail += label + (r.valid() ? " ok; " : " " + r.violations.front().law + "; ");
    o.pass = o.pass && r.valid();
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 30.0;
  o.detail += std::to_string(t) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t squares = 0, failures = 0;
  for (AmbientPtr amb : {ob(fixtures::disc2()), ob(fixtures::arrow()), ob(fixtures::z2()),
                         ob(fixtures::walk3()), explicit_edz()}) {
    HomTable t(amb, kDefaultCap);
    const FiniteCategory& c = *amb->carrier;
    for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
      const Obj u = c.source(theta);
      const Obj v = c.target(theta);
      for (Mor phi = 0; phi < static_cast<Mor>(c.morphism_count()); ++phi) {
        const Obj w1 = c.source(phi);
        const Obj w = c.target(phi);
        const Functor down_u = t.precompose(u, phi);
        const Functor down_v = t.precompose(v, phi);
        const Functor over_w = covariant_hom_action(t, w, theta);
        const Functor over_w1 = covariant_hom_action(t, w1, theta);
        const FunctorCategory& src = t.hom(w, u);
        bool ok = true;
        for (Obj x = 0; x < static_cast<Obj>(src.objects.size()); ++x) {
          ok = ok && over_w1(down_u(x)) == down_v(over_w(x));
        }
        for (Mor m = 0; m < static_cast<Mor>(src.morphisms.size()); ++m) {
          ok = ok && over_w1.on_morphism(down_u.on_morphism(m)) ==
                         down_v.on_morphism(over_w.on_morphism(m));
        }
        ++squares;
        if (!ok) ++failures;
      }
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(squares) + " squares, " + std::to_string(failures) + " failures";
  return o;
}

Outcome criterion5() {
  const auto start = Clock::now();
  Outcome o;
  for (auto [label, c, expected] : std::vector<std::tuple<std::string, FiniteCategory, std::size_t>>{
           {"Z2", fixtures::z2(), 2}, {"S3", fixtures::s3(), 1}}) {
    const std::size_t got = endo_nat_monoid(identity_functor(share(c))).elements.size();
    const std::size_t want = oracle::center_size(c);
    o.pass = o.pass && got == want && got == expected;
    o.detail += label + " " + std::to_string(got) + " (oracle " + std::to_string(want) + "); ";
  }
  const double t = seconds_since(start);
  o.pass = o.pass && t < 1.0;
  o.detail += std::to_string(t) + " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  HomTablePtr t = table(ob(fixtures::disc2()));
  const Obj u = *t->ambient().find_object(fixtures::disc2());
  const auto sieves = enumerate_sieves(t, u, kDefaultCap);
  std::vector<ClassicalSieve> seen;
  for (const auto& s : sieves) {
    ClassicalSieve c = classical_bridge(s);
    if (!is_classical_sieve(c) || std::find(seen.begin(), seen.end(), c) != seen.end()) {
      o.pass = false;
    }
    seen.push_back(c);
  }
  const std::size_t want = oracle::classical_sieve_count(*t->ambient().carrier, u);
  o.pass = o.pass && sieves.size() == want;
  o.detail = std::to_string(sieves.size()) + " sieves, classical oracle " + std::to_string(want);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t total = 0, round_trips = 0, discrepancies = 0;
  for (FiniteCategory base : {fixtures::disc2(), fixtures::arrow(), fixtures::z2()}) {
    HomTablePtr t = table(ob(base));
    const Obj u = *t->ambient().find_object(base);
    for (const auto& s : enumerate_sieves(t, u, kDefaultCap)) {
      ++total;
      try {
        ObSieveData d = decompose_ob_sieve(s);
        if (sieve_from_ob_data(t, u, d) == s) ++round_trips;
        if (!compare_compatibility_directions(*t, u, d).reverse_inclusion) ++discrepancies;
      } catch (const Error&) {
      }
    }
  }
  dsl::ParseResult pr = dsl::parse_workspace(read_file(data_path("acceptance.cat")));
  bool reported = false;
  if (pr.ok()) {
    dsl::Session session(*pr.workspace);
    const dsl::ReportRecord q = session.decompose("Q");
    const auto& body = std::get<dsl::DecompositionReport>(q.body);
    reported = !body.reverse_inclusion && !body.reverse_failures.empty();
  }
  o.pass = total > 0 && round_trips == total && discrepancies > 0 && reported;
  o.detail = std::to_string(round_trips) + "/" + std::to_string(total) + " round trips; " +
             std::to_string(discrepancies) + " sieves over O(Z2) with a reverse-inclusion gap; " +
             "decompose report " + (reported ? "emitted" : "missing");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t cases = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++cases;
    if (!ok) ++failures;
  };
  struct Hom {
    std::vector<Functor> functors;
    std::vector<NaturalTransformation> nats;
  };
  auto hom = [](const CategoryPtr& c, const CategoryPtr& d) {
    Hom h;
    h.functors = enumerate_functors(c, d, kDefaultCap);
    for (const auto& f : h.functors) {
      for (const auto& g : h.functors) {
        for (auto& n : enumerate_nats(f, g, kDefaultCap)) h.nats.push_back(std::move(n));
      }
    }
    return h;
  };
  auto horizontal = [](const NaturalTransformation& tau, const NaturalTransformation& sigma) {
    return vcompose_nats(whisker_left(tau.target, sigma), whisker_right(tau, sigma.source));
  };
  const std::vector<CategoryPtr> small = {share(fixtures::terminal()), share(fixtures::disc2()),
                                          share(fixtures::arrow()), share(fixtures::z2())};
  for (const auto& c : small) {
    for (const auto& d : small) {
      const Hom cd = hom(c, d);
      for (const auto& e : small) {
        const Hom de = hom(d, e);
        // Interchange.
        for (const auto& s1 : cd.nats) {
          for (const auto& s2 : cd.nats) {
            if (!(s1.target == s2.source)) continue;
            for (const auto& t1 : de.nats) {
              for (const auto& t2 : de.nats) {
                if (!(t1.target == t2.source)) continue;
                expect(horizontal(vcompose_nats(t2, t1), vcompose_nats(s2, s1)) ==
                       vcompose_nats(horizontal(t2, s2), horizontal(t1, s1)));
              }
            }
          }
        }
        // Distribution over vertical composition.
        for (const auto& theta : cd.functors) {
          for (const auto& s1 : de.nats) {
            for (const auto& s2 : de.nats) {
              if (!(s1.target == s2.source)) continue;
              expect(whisker_right(vcompose_nats(s2, s1), theta) ==
                     vcompose_nats(whisker_right(s2, theta), whisker_right(s1, theta)));
            }
          }
        }
        for (const auto& theta : de.functors) {
          for (const auto& s1 : cd.nats) {
            for (const auto& s2 : cd.nats) {
              if (!(s1.target == s2.source)) continue;
              expect(whisker_left(theta, vcompose_nats(s2, s1)) ==
                     vcompose_nats(whisker_left(theta, s2), whisker_left(theta, s1)));
            }
          }
        }
        // Associativity with mixed whiskers.
        for (const auto& phi : cd.functors) {
          for (const auto& theta : de.functors) {
            const Functor tp = compose_functors(theta, phi);
            for (const auto& s : hom(e, e).nats) {
              expect(whisker_right(whisker_right(s, theta), phi) == whisker_right(s, tp));
            }
            for (const auto& s : hom(c, c).nats) {
              expect(whisker_left(theta, whisker_left(phi, s)) == whisker_left(tp, s));
            }
            for (const auto& s : hom(d, d).nats) {
              expect(whisker_left(theta, whisker_right(s, phi)) ==
                     whisker_right(whisker_left(theta, s), phi));
            }
          }
        }
      }
    }
  }
  o.pass = failures == 0 && cases >= 1000;
  o.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::string args = "run '" + data_path("acceptance.cat") + "' --format json";
  const Run first = run_cli(args);
  const Run second = run_cli(args);
  o.pass = !first.out.empty() && first.out == second.out && first.status == second.status;
  o.detail = std::to_string(first.out.size()) + " bytes per run, " +
             (first.out == second.out ? "identical" : "different");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t round_trips = 0, fixtures_seen = 0;
  for (const char* name : {"categories.cat", "acceptance.cat"}) {
    ++fixtures_seen;
    dsl::ParseResult a = dsl::parse_workspace(read_file(data_path(name)));
    if (!a.ok()) continue;
    const std::string text = dsl::serialize_workspace(*a.workspace);
    dsl::ParseResult b = dsl::parse_workspace(text);
    if (b.ok() && dsl::same_data(*a.workspace, *b.workspace) &&
        dsl::serialize_workspace(*b.workspace) == text) {
      ++round_trips;
    }
  }
  std::istringstream manifest(read_file(data_path("malformed/expected.txt")));
  std::string line;
  std::size_t files = 0, correct = 0;
  std::vector<std::string> wrong;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string file, code;
    int row = 0, col = 0;
    fields >> file >> code >> row >> col;
    ++files;
    const std::string path = data_path("malformed/" + file);
    const Run r = run_cli("validate '" + path + "' --format json");
    bool ok = r.status == 2;
    try {
      dsl::ReportRecord rec = dsl::from_json_line(r.out.substr(0, r.out.find('\n')));
      const auto& v = std::get<ValidationReport>(rec.body).violations.at(0);
      ok = ok && v.law == code &&
           v.ids.at(0) == path + ":" + std::to_string(row) + ":" + std::to_string(col);
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok) {
      ++correct;
    } else {
      wrong.push_back(file);
    }
  }
  o.pass = round_trips == fixtures_seen && files == 12 && correct == files;
  o.detail = std::to_string(round_trips) + "/" + std::to_string(fixtures_seen) +
             " fixture files round-trip; " + std::to_string(correct) + "/" +
             std::to_string(files) + " malformed files exit 2 with the expected code and span";
  for (const auto& w : wrong) o.detail += "; wrong: " + w;
  return o;
}

}  // namespace
}  // namespace catsheaf

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: catsheaf_acceptance <catsheaf-cli>\n";
    return 2;
  }
  catsheaf::g_cli = argv[1];
  const std::vector<std::function<catsheaf::Outcome()>> criteria = {
      catsheaf::criterion1, catsheaf::criterion2, catsheaf::criterion3, catsheaf::criterion4,
      catsheaf::criterion5, catsheaf::criterion6, catsheaf::criterion7, catsheaf::criterion8,
      catsheaf::criterion9, catsheaf::criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    catsheaf::Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
