// Builds the bundled character tables from concrete group models: classes by
// brute-force conjugation, irreducibles from explicit constructions. Each
// table is validated before it is written.
//
//   corpus_builder OUTDIR          write d30.tbl, sl23.tbl, a5.tbl
//   corpus_builder --check DIR     exit 1 unless DIR holds identical files

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tworoot/chartable.hpp"
#include "tworoot/cyclotomic.hpp"

namespace {

using tworoot::Cyclotomic;
using tworoot::Rational;

// A finite group given by its elements (index 0 is the identity) and a
// multiplication table.
struct FiniteGroup {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
  std::vector<int> order;
  std::vector<std::vector<std::size_t>> classes;  // identity first, then by (order, least member)
  std::vector<std::size_t> class_of;

  template <typename T, typename Mul>
  static FiniteGroup build(const std::vector<T>& elems, Mul op) {
    FiniteGroup g;
    g.n = elems.size();
    const auto index = [&elems](const T& x) {
      return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), x) - elems.begin());
    };
    g.mul.assign(g.n, std::vector<std::size_t>(g.n));
    for (std::size_t a = 0; a < g.n; ++a) {
      for (std::size_t b = 0; b < g.n; ++b) {
        g.mul[a][b] = index(op(elems[a], elems[b]));
        if (g.mul[a][b] == g.n) throw std::logic_error("element set not closed");
      }
    }
    for (std::size_t a = 0; a < g.n; ++a) {
      if (g.mul[0][a] != a) throw std::logic_error("element 0 is not the identity");
    }
    g.inv.resize(g.n);
    g.order.resize(g.n);
    for (std::size_t a = 0; a < g.n; ++a) {
      for (std::size_t b = 0; b < g.n; ++b) {
        if (g.mul[a][b] == 0) g.inv[a] = b;
      }
      std::size_t x = a;
      int k = 1;
      while (x != 0) {
        x = g.mul[x][a];
        ++k;
      }
      g.order[a] = k;
    }
    g.class_of.assign(g.n, g.n);
    std::vector<std::vector<std::size_t>> found;
    for (std::size_t a = 0; a < g.n; ++a) {
      if (g.class_of[a] != g.n) continue;
      std::vector<std::size_t> cls;
      for (std::size_t x = 0; x < g.n; ++x) {
        const std::size_t c = g.mul[g.mul[x][a]][g.inv[x]];
        if (g.class_of[c] == g.n) {
          g.class_of[c] = found.size();
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      found.push_back(std::move(cls));
    }
    std::stable_sort(found.begin(), found.end(), [&g](const auto& a, const auto& b) {
      return std::pair(g.order[a[0]], a[0]) < std::pair(g.order[b[0]], b[0]);
    });
    g.classes = std::move(found);
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      for (std::size_t x : g.classes[c]) g.class_of[x] = c;
    }
    return g;
  }

  std::size_t rep(std::size_t c) const { return classes[c][0]; }

  tworoot::CharacterTable skeleton(const std::string& name) const {
    tworoot::CharacterTable t;
    t.name = name;
    t.order = static_cast<std::int64_t>(n);
    for (const auto& cls : classes) {
      t.classes.push_back(tworoot::ConjugacyClass{static_cast<std::int64_t>(cls.size()), order[cls[0]],
                                                  class_of[inv[cls[0]]]});
    }
    return t;
  }

  // Values of a per-element function at class representatives.
  std::vector<Cyclotomic> on_classes(const std::function<Cyclotomic(std::size_t)>& f) const {
    std::vector<Cyclotomic> out;
    for (std::size_t c = 0; c < classes.size(); ++c) out.push_back(f(rep(c)));
    return out;
  }

  // Fixed points of x on the right cosets of the subgroup h.
  std::int64_t coset_fixed_points(const std::vector<std::size_t>& h, std::size_t x) const {
    std::int64_t count = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t c = mul[mul[inv[y]][x]][y];
      if (std::find(h.begin(), h.end(), c) != h.end()) ++count;
    }
    return count / static_cast<std::int64_t>(h.size());
  }

  std::vector<std::size_t> closure(std::vector<std::size_t> gens) const {
    std::vector<bool> in(n, false);
    std::vector<std::size_t> elems{0};
    in[0] = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t s : gens) {
        const std::size_t y = mul[elems[i]][s];
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

std::vector<Cyclotomic> pointwise(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                                  const std::function<Cyclotomic(const Cyclotomic&, const Cyclotomic&)>& f) {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f(a[i], b[i]));
  return out;
}

std::vector<Cyclotomic> times(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  return pointwise(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; });
}

std::vector<Cyclotomic> constant(std::size_t k, std::int64_t v) { return std::vector<Cyclotomic>(k, Cyclotomic(v)); }

// Dihedral group of order 30: pairs (k, e) standing for r^k s^e.
tworoot::CharacterTable dihedral30() {
  using E = std::array<int, 2>;
  std::vector<E> elems;
  for (int e = 0; e < 2; ++e) {
    for (int k = 0; k < 15; ++k) elems.push_back({k, e});
  }
  const auto g = FiniteGroup::build(elems, [](const E& a, const E& b) {
    const int k = ((a[0] + (a[1] == 0 ? b[0] : -b[0])) % 15 + 15) % 15;
    return E{k, a[1] ^ b[1]};
  });
  auto t = g.skeleton("D30");
  const std::size_t k = t.class_count();
  const auto rotation = [&elems](std::size_t x) { return elems[x][1] == 0 ? std::optional<int>(elems[x][0]) : std::nullopt; };

  t.irreducibles.push_back(constant(k, 1));
  t.irreducibles.push_back(g.on_classes([&elems](std::size_t x) { return Cyclotomic(elems[x][1] == 0 ? 1 : -1); }));
  for (int j = 1; j <= 7; ++j) {
    t.irreducibles.push_back(g.on_classes([&](std::size_t x) {
      const auto r = rotation(x);
      return r ? tworoot::zeta(15, j * *r) + tworoot::zeta(15, -j * *r) : Cyclotomic();
    }));
  }
  // Degree d; zero on reflections; l1 + l2 - 1 on nonidentity rotations, with
  // l1, l2 the nontrivial characters of the rotation group trivial on r^3.
  const auto constructed = [&](std::int64_t degree) {
    return g.on_classes([&, degree](std::size_t x) {
      if (x == 0) return Cyclotomic(degree);
      const auto r = rotation(x);
      if (!r) return Cyclotomic();
      return tworoot::zeta(3, *r) + tworoot::zeta(3, 2 * *r) - Cyclotomic(1);
    });
  };
  t.functions.push_back({"chi16", constructed(16)});
  t.functions.push_back({"chi15", constructed(15)});
  return t;
}

// Binary tetrahedral group (isomorphic to SL(2,3)) as unit quaternions
// (a + bi + cj + dk) / 2 with integer a, b, c, d.
tworoot::CharacterTable sl23() {
  using Q = std::array<int, 4>;
  std::vector<Q> elems{{2, 0, 0, 0}};
  for (int s : {1, -1}) {
    for (int axis = 0; axis < 4; ++axis) {
      Q q{0, 0, 0, 0};
      q[static_cast<std::size_t>(axis)] = 2 * s;
      if (q != elems[0]) elems.push_back(q);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    Q q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = (mask >> i) & 1 ? -1 : 1;
    elems.push_back(q);
  }
  const auto g = FiniteGroup::build(elems, [](const Q& x, const Q& y) {
    const int a = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    const int b = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    const int c = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
    const int d = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
    return Q{a / 2, b / 2, c / 2, d / 2};
  });
  if (g.n != 24) throw std::logic_error("binary tetrahedral group has the wrong order");
  auto t = g.skeleton("SL(2,3)");
  const std::size_t k = t.class_count();

  // Linear characters through the quotient by the derived subgroup.
  std::vector<std::size_t> commutators;
  for (std::size_t x = 0; x < g.n; ++x) {
    for (std::size_t y = 0; y < g.n; ++y) commutators.push_back(g.mul[g.mul[g.inv[x]][g.inv[y]]][g.mul[x][y]]);
  }
  const auto derived = g.closure(commutators);
  std::size_t gen = 0;
  while (g.order[gen] != 3) ++gen;
  const auto coset_power = [&](std::size_t x) {
    std::size_t p = 0;
    for (int e = 0; e < 3; ++e) {
      if (std::find(derived.begin(), derived.end(), g.mul[g.inv[p]][x]) != derived.end()) return e;
      p = g.mul[p][gen];
    }
    throw std::logic_error("derived subgroup does not have index 3");
  };
  const auto lambda = g.on_classes([&](std::size_t x) { return tworoot::zeta(3, coset_power(x)); });
  const auto lambda_bar = g.on_classes([&](std::size_t x) { return tworoot::zeta(3, 2 * coset_power(x)); });
  // Twice the real part is the trace of the 2-dimensional representation; the
  // rotation action on pure quaternions has trace 4 Re(q)^2 - 1.
  const auto two_dim = g.on_classes([&elems](std::size_t x) { return Cyclotomic(elems[x][0]); });
  const auto three_dim = g.on_classes([&elems](std::size_t x) { return Cyclotomic(elems[x][0] * elems[x][0] - 1); });

  t.irreducibles = {constant(k, 1), lambda, lambda_bar, two_dim, times(two_dim, lambda), times(two_dim, lambda_bar),
                    three_dim};
  const auto sylow3 = g.closure({gen});
  const auto perm = g.on_classes([&](std::size_t x) { return Cyclotomic(g.coset_fixed_points(sylow3, x)); });
  t.functions.push_back({"perm8", perm});
  t.functions.push_back({"chi7", pointwise(perm, constant(k, 1), [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; })});
  return t;
}

// Alternating group on {0, ..., 4}.
tworoot::CharacterTable a5() {
  using P = std::array<int, 5>;
  std::vector<P> elems;
  P p{0, 1, 2, 3, 4};
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    }
    if (inversions % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // (x * y)(i) = x(y(i)).
  const auto g = FiniteGroup::build(elems, [](const P& x, const P& y) {
    P z;
    for (std::size_t i = 0; i < 5; ++i) z[i] = x[static_cast<std::size_t>(y[i])];
    return z;
  });
  auto t = g.skeleton("A5");
  const std::size_t k = t.class_count();

  const auto fixed = [&elems](std::size_t x) {
    std::int64_t f = 0;
    for (std::size_t i = 0; i < 5; ++i) f += elems[x][i] == static_cast<int>(i);
    return f;
  };
  const auto fixed_pairs = [&elems](std::size_t x) {
    std::int64_t f = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const int a = elems[x][static_cast<std::size_t>(i)], b = elems[x][static_cast<std::size_t>(j)];
        f += std::min(a, b) == i && std::max(a, b) == j;
      }
    }
    return f;
  };
  const auto chi4 = g.on_classes([&](std::size_t x) { return Cyclotomic(fixed(x) - 1); });
  const auto chi5 = g.on_classes([&](std::size_t x) { return Cyclotomic(fixed_pairs(x) - fixed(x)); });

  // The two degree-3 characters: their sum R / 3 comes from the regular
  // character, their difference is +-sqrt5 on the two classes of 5-cycles.
  const P cycle{1, 2, 3, 4, 0};
  const std::size_t cycle_class =
      g.class_of[static_cast<std::size_t>(std::find(elems.begin(), elems.end(), cycle) - elems.begin())];
  const Cyclotomic sqrt5 = tworoot::zeta(5, 1) - tworoot::zeta(5, 2) - tworoot::zeta(5, 3) + tworoot::zeta(5, 4);
  std::vector<Cyclotomic> half_sum, half_diff;
  for (std::size_t c = 0; c < k; ++c) {
    const Cyclotomic r = Cyclotomic(c == 0 ? 60 : 0) - Cyclotomic(1) - Cyclotomic(4) * chi4[c] - Cyclotomic(5) * chi5[c];
    half_sum.push_back(r * Rational(1, 6));
    Cyclotomic d;
    if (t.classes[c].element_order == 5) d = c == cycle_class ? sqrt5 : -sqrt5;
    half_diff.push_back(d * Rational(1, 2));
  }
  const auto plus = [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; };
  const auto minus = [](const Cyclotomic& a, const Cyclotomic& b) { return a - b; };
  t.irreducibles = {constant(k, 1), pointwise(half_sum, half_diff, plus), pointwise(half_sum, half_diff, minus), chi4,
                    chi5};

  // Value 0, 1, 2 on 2-, 3-, 5-elements; the degree is the least a >= 0 with
  // a = 0 mod 4, 1 mod 3, 2 mod 5, found by scanning.
  std::int64_t degree = 0;
  while (!(degree % 4 == 0 && degree % 3 == 1 && degree % 5 == 2)) ++degree;
  t.functions.push_back({"crt3", g.on_classes([&](std::size_t x) {
                           if (x == 0) return Cyclotomic(degree);
                           const int o = g.order[x];
                           return Cyclotomic(o == 2 ? 0 : o == 3 ? 1 : 2);
                         })});
  return t;
}

std::string render(const tworoot::CharacterTable& t) {
  tworoot::validate(t);
  const std::string text = "# Generated by corpus_builder; do not edit.\n" + tworoot::format_table(t);
  tworoot::validate(tworoot::parse_table(text));
  return text;
}

std::map<std::string, std::string> build_all() {
  return {{"d30.tbl", render(dihedral30())}, {"sl23.tbl", render(sl23())}, {"a5.tbl", render(a5())}};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const bool check = !args.empty() && args[0] == "--check";
  const char* usage = "usage: corpus_builder OUTDIR | corpus_builder --check DIR\n";
  if (!args.empty() && (args[0] == "-h" || args[0] == "--help")) {
    std::cout << usage;
    return 0;
  }
  if (args.size() != (check ? 2u : 1u) || args.back().rfind('-', 0) == 0) {
    std::cerr << usage;
    return 2;
  }
  const std::filesystem::path dir = args.back();
  try {
    int status = 0;
    for (const auto& [file, text] : build_all()) {
      const auto path = dir / file;
      if (check) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream existing;
        existing << in.rdbuf();
        const bool same = in.good() || in.eof() ? existing.str() == text : false;
        std::cout << file << (same ? " matches\n" : " differs\n");
        if (!same) status = 1;
      } else {
        std::filesystem::create_directories(dir);
        std::ofstream(path, std::ios::binary) << text;
        std::cout << "wrote " << path.string() << '\n';
      }
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "corpus_builder: " << e.what() << '\n';
    return 1;
  }
}
