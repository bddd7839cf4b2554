/*
 * Copyright (c) 2026 The heckop authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <set>

#include "core/catalog.hpp"
#include "core/rootdata.hpp"
#include "doctest.h"

using namespace heckop;

TEST_CASE("positive system counts and contents") {
  RootDatum rd2(2, Case::II);
  CHECK(rd2.positive_roots().size() == 6);  // n + n(n-1) + n
  std::set<IVec> expect = {{1, 0}, {0, 1}, {-1, 1}, {1, 1}, {2, 0}, {0, 2}};
  std::set<IVec> got;
  for (const Root &r : rd2.positive_roots()) got.insert(r.coords);
  CHECK(got == expect);

  RootDatum rd2i(2, Case::I);
  CHECK(rd2i.positive_roots().size() == 4);  // n(n-1) + n
  CHECK(rd2i.carrier_roots().size() == 6);
}

TEST_CASE("weyl group size and closure") {
  for (int n = 1; n <= 3; ++n) {
    RootDatum rd(n, Case::II);
    long long expect = 1;
    for (int k = 1; k <= n; ++k) expect *= k;
    expect <<= n;
    CHECK(rd.weyl_order() == expect);
    CHECK((long long)rd.weyl().size() == expect);

    // distinct elements forming a group
    std::set<std::pair<IVec, IVec>> seen;
    for (const WeylElement &w : rd.weyl()) seen.insert({w.perm, w.signs});
    CHECK((long long)seen.size() == expect);
    for (const WeylElement &a : rd.weyl())
      for (const WeylElement &b : rd.weyl()) {
        WeylElement c = RootDatum::compose(a, b);
        CHECK(seen.count({c.perm, c.signs}) == 1);
      }
  }
}

TEST_CASE("minus identity is present and acts correctly") {
  RootDatum rd(2, Case::II);
  bool found = false;
  for (const WeylElement &w : rd.weyl()) {
    if (w.perm == IVec{0, 1} && w.signs == IVec{-1, -1}) found = true;
  }
  CHECK(found);
  // (w x)[perm[j]] = signs[j] x[j]
  WeylElement w;
  w.perm = {1, 0};
  w.signs = {1, -1};
  Vec x = {3.0, 5.0};
  Vec wx = rd.act(w, x);
  CHECK(wx[1] == 3.0);
  CHECK(wx[0] == -5.0);
}

TEST_CASE("weyl action permutes roots within orbits") {
  for (int n = 2; n <= 3; ++n) {
    for (Case cs : {Case::I, Case::II}) {
      RootDatum rd(n, cs);
      std::set<std::pair<IVec, int>> tagged;
      for (const Root &r : rd.positive_roots()) {
        tagged.insert({r.coords, int(r.orbit)});
        IVec neg = r.coords;
        for (int &v : neg) v = -v;
        tagged.insert({neg, int(r.orbit)});
      }
      for (const WeylElement &w : rd.weyl())
        for (const Root &r : rd.positive_roots()) {
          std::vector<double> rc(r.coords.begin(), r.coords.end());
          Vec img = rd.act(w, rc);
          IVec imgi(n);
          for (int j = 0; j < n; ++j) imgi[j] = (int)img[j];
          CHECK(tagged.count({imgi, int(r.orbit)}) == 1);
        }
    }
  }
}

TEST_CASE("rho by summation matches the closed form") {
  RootDatum rd(2, Case::II);
  Mult m{2, 2, 1};
  Vec rho = rd.rho(m);
  CHECK(rho[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(rho[1] == doctest::Approx(4.0).epsilon(1e-15));
  Vec closed = rd.rho_closed_form(m);
  CHECK(rho[0] == closed[0]);
  CHECK(rho[1] == closed[1]);

  // exact match for several multiplicities and ranks
  for (int n = 1; n <= 3; ++n) {
    RootDatum rdn(n, Case::II);
    for (Mult mm : {Mult{0, 0, 0}, Mult{4, 1, 3}, Mult{-2, 1, 3},
                    Mult{8, 6, 1}}) {
      Vec a = rdn.rho(mm), b = rdn.rho_closed_form(mm);
      for (int j = 0; j < n; ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-15));
    }
  }
}

TEST_CASE("rho variants") {
  RootDatum rd1(1, Case::II);
  Vec rt = rd1.rho(Mult{4, 0, -1}, RhoMode::RhoTilde);
  CHECK(rt[0] == doctest::Approx(3.0));  // (|4| * 1 + |-1| * 2) / 2

  RootDatum rd2(2, Case::II);
  Vec rs = rd2.rho(Mult{1, 1, 1}, RhoMode::RhoS);
  CHECK(rs[0] == doctest::Approx(0.5));
  CHECK(rs[1] == doctest::Approx(0.5));

  Vec zero = rd2.rho(Mult{0, 0, 0});
  CHECK(zero[0] == 0.0);
  CHECK(zero[1] == 0.0);
}

TEST_CASE("multiplicity shifts") {
  Mult m{2, 2, 1};
  Mult p = shift_mult(m, 1, +1);
  CHECK(p.s == 0);
  CHECK(p.m == 2);
  CHECK(p.l == 3);
  Mult q = shift_mult(m, 1, -1);
  CHECK(q.s == 4);
  CHECK(q.l == -1);
  Mult id = shift_mult(m, 0, +1);
  CHECK(id == m);
  CHECK(shift_mult(m, -2, +1).s == -2);  // |l| enters, not l

  // rho(m_+(l)) = rho(m) + 2|l| rho_s exactly
  for (int n = 1; n <= 3; ++n) {
    RootDatum rd(n, Case::II);
    for (int l = 0; l <= 3; ++l) {
      Vec a = rd.rho(shift_mult(m, l, +1));
      Vec b = rd.rho(m);
      Vec rs = rd.rho(m, RhoMode::RhoS);
      for (int j = 0; j < n; ++j)
        CHECK(a[j] == doctest::Approx(b[j] + 2.0 * l * rs[j]).epsilon(1e-15));
    }
  }
}

TEST_CASE("membership in the admissible multiplicity cone") {
  RootDatum rd(2, Case::II);
  CHECK(rd.in_m_ge(Mult{-2, 1, 3}));   // m_+(1) of (0,1,1)
  CHECK(!rd.in_m_ge(Mult{4, 2, -1}));  // m_-(1) of (2,2,1): long < 0
  for (const char *key :
       {"AIII:p=2,q=3", "BDI:q=5", "DIII:j=4", "CI:j=2", "EIII"}) {
    SpaceSpec s = resolve_space(key);
    RootDatum rdk(s.rank, s.cs);
    CHECK(rdk.in_m_ge(s.mult));
    for (int l = 0; l <= 8; ++l)
      CHECK(rdk.in_m_ge(shift_mult(s.mult, l, +1)));
  }
}

TEST_CASE("catalog rows") {
  SpaceSpec eiii = resolve_space("EIII");
  CHECK(eiii.rank == 2);
  CHECK(eiii.cs == Case::II);
  CHECK(eiii.mult == Mult{8, 6, 1});

  SpaceSpec ci = resolve_space("CI:j=2");
  CHECK(ci.cs == Case::I);
  CHECK(ci.mult == Mult{0, 1, 1});
  CHECK(ci.rank == 2);

  SpaceSpec aiii = resolve_space("AIII:p=2,q=2");
  CHECK(aiii.cs == Case::I);
  CHECK(aiii.mult == Mult{0, 2, 1});

  SpaceSpec aiii2 = resolve_space("AIII:p=2,q=3");
  CHECK(aiii2.cs == Case::II);
  CHECK(aiii2.mult == Mult{2, 2, 1});

  SpaceSpec d4 = resolve_space("DIII:j=4");
  CHECK(d4.cs == Case::I);
  CHECK(d4.rank == 2);
  CHECK(d4.mult == Mult{0, 4, 1});
  SpaceSpec d5 = resolve_space("DIII:j=5");
  CHECK(d5.cs == Case::II);
  CHECK(d5.rank == 2);
  CHECK(d5.mult == Mult{4, 4, 1});

  SpaceSpec evii = resolve_space("EVII");
  CHECK(evii.rank == 3);
  CHECK(evii.mult == Mult{0, 8, 1});

  CHECK_THROWS_AS(resolve_space("nope"), UsageError);
  CHECK_THROWS_AS(resolve_space("AIII:p=3,q=2"), UsageError);
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(RootDatum(0, Case::I), UsageError);
  CHECK_THROWS_AS(RootSystem(2, Case::I, Mult{1, 2, 1}), UsageError);
  CHECK_NOTHROW(RootSystem(2, Case::I, Mult{0, 2, 1}));
}
