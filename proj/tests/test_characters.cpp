#include <random>
#include <set>

#include "doctest.h"
#include "kcv/characters.hpp"
#include "kcv/errors.hpp"

using namespace kcv;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum of contents j - i over the boxes
long long content_sum(const Partition& a) {
  long long s = 0;
  for (int i = 0; i < int(a.size()); ++i)
    for (int j = 0; j < a[i]; ++j) s += j - i;
  return s;
}

void orthonormal(const CharacterTable& t) {
  bool ok = true;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) ok &= scalar_product(t.rows[a], t.rows[b]) == Cyclo(a == b ? 1 : 0);
  CHECK(ok);
  long long sq = 0;
  for (std::size_t a = 0; a < t.size(); ++a) sq += t.degree(a) * t.degree(a);
  CHECK(sq == (long long)t.group->order());
  CHECK(t.size() == t.group->classes().size());
}

Partition ones(int n) { return Partition(n, 1); }

}  // namespace

TEST_CASE("tables are orthonormal and complete") {
  std::vector<std::pair<Series, int>> cases{{Series::A, 4}, {Series::B, 3}, {Series::B, 4}, {Series::D, 4},
                                              {Series::D, 5}, {Series::F4, 4}, {Series::I2, 7}, {Series::I2, 8}};
  for (auto [s, k] : cases) {
    auto g = cached_group(s, k);
    auto t = character_table(g);
    CAPTURE(g->name());
    orthonormal(*t);
    CHECK(t->row_of(trivial_character(*g)) >= 0);
    CHECK(t->row_of(sign_character(*g)) >= 0);
    CHECK(t->row_of(reflection_character(*g)) >= 0);
    CHECK(t->b[t->row_of(trivial_character(*g))] == 0);
    CHECK(t->b[t->row_of(sign_character(*g))] == g->num_positive());
    CHECK(t->b[t->row_of(reflection_character(*g))] == 1);
  }
}

TEST_CASE("type A labels against hook lengths and contents") {
  for (int n = 2; n <= 6; ++n) {
    auto g = cached_group(Series::A, n - 1);
    auto t = character_table(g);
    CHECK(t->size() == partitions(n).size());
    Elt tau = g->generator(0);
    for (std::size_t i = 0; i < t->size(); ++i) {
      const Partition& a = t->labels[i].alpha;
      long long f = hook_dimension(a);
      CHECK(t->degree(i) == f);
      // chi(tau) binom(n,2) = f * content sum
      CHECK(t->rows[i](tau).to_integer() * binomial(n, 2) == f * content_sum(a));
    }
  }
}

TEST_CASE("type B labels") {
  for (int n = 2; n <= 4; ++n) {
    auto g = cached_group(Series::B, n);
    auto t = character_table(g);
    CHECK(t->size() == bipartitions(n).size());
    CHECK(t->row_of(trivial_character(*g)) == t->find_pair({n}, {}));
    CHECK(t->row_of(sign_character(*g)) == t->find_pair({}, ones(n)));
    for (std::size_t i = 0; i < t->size(); ++i) {
      const auto& L = t->labels[i];
      long long d = binomial(n, size_of(L.alpha)) * hook_dimension(L.alpha) * hook_dimension(L.beta);
      CHECK(t->degree(i) == d);
    }
    // (-1)^{#t} is ((),(n))
    std::vector<Cyclo> v;
    for (Elt x = 0; x < g->order(); ++x) {
      int k = 0;
      for (int s : g->word(x)) k += s == 0;
      v.emplace_back(k % 2 ? -1 : 1);
    }
    CHECK(t->row_of(from_elementwise(*g, v)) == t->find_pair({}, {n}));
  }
}

TEST_CASE("type D labels and the split pairs") {
  for (int n : {2, 3, 4, 5, 6}) {
    auto g = cached_group(Series::D, n);
    auto t = character_table(g);
    CAPTURE(n);
    int split = 0;
    for (std::size_t i = 0; i < t->size(); ++i) {
      const auto& L = t->labels[i];
      long long d = binomial(n, size_of(L.alpha)) * hook_dimension(L.alpha) * hook_dimension(L.beta);
      if (L.split) {
        ++split;
        d /= 2;
      }
      CHECK(t->degree(i) == d);
    }
    CHECK(split == (n % 2 ? 0 : 2 * int(partitions(n / 2).size())));
  }
  auto t2 = character_table(cached_group(Series::D, 2));
  CHECK(resolve_split_pair(*t2, {1}).difference == -2);
  auto t4 = character_table(cached_group(Series::D, 4));
  CHECK(resolve_split_pair(*t4, {2}).difference == 4);
  CHECK(resolve_split_pair(*t4, {1, 1}).difference == 4);
  CHECK_THROWS_AS(resolve_split_pair(*character_table(cached_group(Series::D, 5)), {2}), UnsupportedType);
  // b = 4 n(alpha) + n/2
  CHECK(t4->b[t4->find_split({2}, +1)] == 2);
  CHECK(t4->b[t4->find_split({1, 1}, +1)] == 6);
}

TEST_CASE("tensoring split characters with the sign") {
  for (int n : {2, 4, 6}) {
    auto g = cached_group(Series::D, n);
    auto t = character_table(g);
    auto eps = sign_character(*g);
    for (auto& a : partitions(n / 2))
      for (int sg : {+1, -1}) {
        int r = t->row_of(tensor(t->rows[t->find_split(a, sg)], eps));
        int want = t->find_split(transpose(a), (n / 2) % 2 ? -sg : sg);
        CHECK(r == want);
      }
  }
}

TEST_CASE("restriction from B to D") {
  for (int n : {3, 4}) {
    auto ctx = make_d_in_b(n);
    auto tb = character_table(ctx.B);
    auto td = character_table(ctx.D);
    const auto& cl = ctx.D->classes();
    for (std::size_t i = 0; i < tb->size(); ++i) {
      const auto& L = tb->labels[i];
      ClassFunction r(*ctx.D);
      for (std::size_t c = 0; c < cl.size(); ++c) r.values[c] = tb->rows[i](ctx.embed[cl.reps[c]]);
      if (L.alpha == L.beta) {
        CHECK(r == td->rows[td->find_split(L.alpha, 1)] + td->rows[td->find_split(L.alpha, -1)]);
      } else {
        CHECK(r == td->rows[td->find_pair(L.alpha, L.beta)]);
      }
    }
  }
}

TEST_CASE("diamond on characters") {
  auto g = cached_group(Series::D, 4);
  auto t = character_table(g);
  auto id = diamond_on_characters(*t, identity_automorphism(*g));
  for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == int(i));
  auto p = diamond_on_characters(*t, diagram_automorphism(*g));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& L = t->labels[i];
    if (L.split)
      CHECK(p[i] == t->find_split(L.alpha, -L.split));
    else
      CHECK(p[i] == int(i));
  }
  CHECK(irr_diamond(*t, diagram_automorphism(*g)).size() == t->size() - 4);
}

TEST_CASE("dihedral and F4 tables") {
  for (int m = 2; m <= 6; ++m) {
    auto t = character_table(cached_group(Series::I2, 2 * m));
    CHECK(t->size() == std::size_t(m + 3));
    for (auto nm : {"1", "eps", "eps1", "eps2"}) CHECK(t->degree(t->find(nm)) == 1);
    for (int j = 1; j < m; ++j) CHECK(t->degree(t->find("chi_" + std::to_string(j))) == 2);
  }
  auto t5 = character_table(cached_group(Series::I2, 5));
  CHECK(t5->size() == 4);
  CHECK_THROWS_AS(t5->find("eps1"), IndexOutOfRange);
  auto t = character_table(cached_group(Series::F4, 4));
  CHECK(t->size() == 25);
  std::set<std::string> names;
  for (auto& L : t->labels) {
    names.insert(L.name);
    CHECK(t->degree(t->find(L.name)) == std::stoll(L.name.substr(0, L.name.find('_'))));
  }
  CHECK(names.size() == 25);
  CHECK(t->b[t->find("1_4")] == 24);
  CHECK(t->b[t->find("4_2")] == 1);
  CHECK(t->b[t->find("12_1")] == 4);
}

TEST_CASE("induction") {
  auto g = cached_group(Series::D, 4);
  Subgroup one{g.get(), {g->identity()}};
  CHECK(induce(one, {Cyclo(1)}) == regular_character(*g));
  Subgroup all{g.get(), {}};
  for (Elt x = 0; x < g->order(); ++x) all.elements.push_back(x);
  auto t = character_table(g);
  CHECK(j_induce(*t, all) == t->row_of(sign_character(*g)));
  // Frobenius reciprocity on random subgroups
  std::mt19937 rng(7);
  for (auto [s, k] : std::vector<std::pair<Series, int>>{{Series::B, 3}, {Series::D, 4}, {Series::I2, 8}}) {
    auto G = cached_group(s, k);
    auto T = character_table(G);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<Elt> pick(0, Elt(G->order() - 1));
      auto h = generate_subgroup(*G, {pick(rng), pick(rng)});
      const auto& chi = T->rows[rng() % T->size()];
      auto psi = restrict_to(T->rows[rng() % T->size()], h);
      CHECK(scalar_product(induce(h, psi), chi) == scalar_product(h, psi, restrict_to(chi, h)));
    }
  }
}

TEST_CASE("j-induction from Young subgroups") {
  // chi^alpha is j-induced from the sign of S_{alpha*}
  for (int n = 2; n <= 5; ++n) {
    auto g = cached_group(Series::A, n - 1);
    auto t = character_table(g);
    std::vector<int> chain;
    for (int i = 0; i < n - 1; ++i) chain.push_back(i);
    for (auto& a : partitions(n)) {
      int r = j_induce(*t, young_subgroup(*g, chain, transpose(a)));
      CHECK(t->labels[r].alpha == a);
    }
  }
  auto g = cached_group(Series::B, 3);
  auto t = character_table(g);
  auto all = db_reflection_subgroup(*g, {}, {3});
  CHECK(all.elements.size() == g->order());
  CHECK(j_induce(*t, all) == t->row_of(sign_character(*g)));
  CHECK(count_reflections(all) == g->num_positive());
}
