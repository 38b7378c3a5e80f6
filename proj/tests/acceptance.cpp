// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tenscan/error.hpp"
#include "tenscan/oracle.hpp"
#include "tenscan/pencil.hpp"
#include "tenscan/spatial.hpp"

using namespace tenscan;
using namespace tenscan::testing;

namespace {

// Collects the first few failure messages of a criterion.
struct Report {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;
  std::string summary;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

SpatialMatrix random_tensor(const PrimeField& f, std::size_t m, std::size_t n, std::size_t q,
                            Rng& rng) {
  SpatialMatrix t(f, m, n, q);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j, k) = random_residue(f, rng);
  return t;
}

TransformWitness random_witness(const PrimeField& f, std::size_t m, std::size_t n, std::size_t q,
                                Rng& rng) {
  return {random_invertible(f, m, rng), random_invertible(f, n, rng),
          random_invertible(f, q, rng)};
}

// Criterion 1: the label partition of all 2x2x2 tensors over GF(2) is the
// orbit partition.
void exhaustive_gf2(Report& r) {
  PrimeField f(2);
  const std::array<std::size_t, 3> d{2, 2, 2};
  const auto orbits = oracle::orbit_partition(d, f);
  std::map<CanonicalSum, std::set<std::uint64_t>> by_label;
  for (std::uint64_t idx = 0; idx < 256; ++idx)
    by_label[canonical_label(oracle::tensor_from_index(idx, f, d))].insert(idx);
  std::set<std::set<std::uint64_t>> labels, orbit_sets;
  for (const auto& [label, members] : by_label) labels.insert(members);
  for (const auto& o : orbits) orbit_sets.insert({o.members.begin(), o.members.end()});
  r.check(labels == orbit_sets, "label classes differ from orbits");
  std::ostringstream s;
  s << orbits.size() << " orbits, " << by_label.size() << " labels";
  r.summary = s.str();
}

// Criterion 2: over GF(3), distinct orbit representatives carry distinct
// labels.
void representatives_gf3(Report& r) {
  PrimeField f(3);
  const std::array<std::size_t, 3> d{2, 2, 2};
  const auto orbits = oracle::orbit_partition(d, f);
  std::vector<CanonicalSum> labels;
  for (const auto& o : orbits)
    labels.push_back(canonical_label(oracle::tensor_from_index(o.representative, f, d)));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      r.check((labels[i] == labels[j]) == (i == j),
              "orbits " + std::to_string(i) + " and " + std::to_string(j));
  r.summary = std::to_string(orbits.size()) + " orbits compared pairwise";
}

// Criterion 3: every returned witness maps its input to the claimed target.
void witness_soundness(Report& r) {
  Rng rng(301);
  std::size_t too_small = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t m = random_size(1, 4, rng), n = random_size(1, 2, rng),
                        q = random_size(1, 2, rng);
      const auto a = random_tensor(f, m, n, q, rng);
      const std::string where = "p=" + std::to_string(p) + " trial " + std::to_string(trial);

      if (q == 2) {
        try {
          const auto t1 = theorem1_form(a);
          r.check(apply_transform(a, t1.witness) == synthesize_tensor(t1.sum, f),
                  "theorem1_form " + where);
        } catch (const Error& e) {
          r.check(e.kind() == ErrorKind::FieldTooSmall, "theorem1_form threw " + where);
          ++too_small;
        }
      }

      const auto rp = regular_part(a);
      const auto image = apply_transform(a, rp.witness);
      SpatialMatrix padded(f, m, n, q);
      for (std::size_t k = 0; k < rp.part.q(); ++k)
        for (std::size_t i = 0; i < rp.part.m(); ++i)
          for (std::size_t j = 0; j < rp.part.n(); ++j) padded(i, j, k) = rp.part(i, j, k);
      r.check(image == padded && is_regular(rp.part), "regular_part " + where);

      if (!rp.part.is_zero()) {
        const auto c = classify_regular(rp.part);
        r.check(apply_transform(rp.part, c.witness) == representative(c.cls, f),
                "classify_regular " + where);
      }

      const auto b = apply_transform(a, random_witness(f, m, n, q, rng));
      try {
        const auto e = equivalent(a, b);
        r.check(e.equivalent && e.witness && apply_transform(a, *e.witness) == b,
                "equivalent " + where);
      } catch (const Error& e) {
        r.check(e.kind() == ErrorKind::FieldTooSmall, "equivalent threw " + where);
      }
    }
  }
  r.summary = std::to_string(r.checks) + " witnesses, " + std::to_string(too_small) +
              " FieldTooSmall";
}

MatrixPair planted_pencil(const PrimeField& f, Rng& rng) {
  for (;;) {
    std::vector<MatrixPair> parts;
    const std::size_t count = random_size(1, 4, rng);
    for (std::size_t i = 0; i < count; ++i) {
      switch (random_size(0, 3, rng)) {
        case 0: parts.push_back(block_matrices(PencilBlock::right(random_size(1, 3, rng)), f)); break;
        case 1: parts.push_back(block_matrices(PencilBlock::left(random_size(1, 3, rng)), f)); break;
        case 2: parts.push_back(block_matrices(PencilBlock::infinite(random_size(1, 3, rng)), f)); break;
        default: {
          Poly chi = random_monic(f, random_size(1, 3, rng), rng);
          parts.push_back({Matrix::identity(f, chi.degree()), companion(chi)});
        }
      }
    }
    MatrixPair sum = direct_sum(parts, f);
    const std::size_t m = sum.first.rows(), n = sum.first.cols();
    if (m > 6 || n > 6) continue;
    Matrix p = random_invertible(f, m, rng), q = random_invertible(f, n, rng);
    return {p * sum.first * q, p * sum.second * q};
  }
}

// Criterion 4: Kronecker witnesses, dimensions and conjugation invariance.
void kronecker_soundness(Report& r) {
  Rng rng(401);
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int trial = 0; trial < 1000; ++trial) {
      MatrixPair pair{Matrix(f, 0, 0), Matrix(f, 0, 0)};
      const std::size_t m = random_size(0, 6, rng), n = random_size(0, 6, rng);
      switch (trial % 3) {
        case 0: pair = {random_matrix(f, m, n, rng), random_matrix(f, m, n, rng)}; break;
        case 1: {
          const std::size_t k = random_size(0, std::min(m, n), rng);
          pair = {random_low_rank(f, m, n, k, rng), random_low_rank(f, m, n, k, rng)};
          break;
        }
        default: pair = planted_pencil(f, rng);
      }
      const std::string where = "p=" + std::to_string(p) + " trial " + std::to_string(trial);
      const auto res = kronecker_form(pair.first, pair.second);
      const auto canon = synthesize(res.form, f);
      const Matrix rt = res.witness.R.transpose();
      r.check(rt * pair.first * res.witness.S == canon.first &&
                  rt * pair.second * res.witness.S == canon.second,
              "witness " + where);
      r.check(res.form.rows() == pair.first.rows() && res.form.cols() == pair.first.cols(),
              "block dims " + where);
      const Matrix x = random_invertible(f, pair.first.rows(), rng);
      const Matrix y = random_invertible(f, pair.first.cols(), rng);
      const auto conj = kronecker_form(x * pair.first * y, x * pair.second * y);
      r.check(conj.form == res.form, "conjugation " + where);
    }
  }
  r.summary = "3000 pencils";
}

// Criterion 5: the rational formula agrees with the characteristic polynomial
// of the transformed companion matrix.
void mobius_identity(Report& r) {
  Rng rng(501);
  std::size_t rejected = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (int done = 0; done < 1000;) {
      const Poly chi = random_monic(f, random_size(1, 4, rng), rng);
      Matrix t = random_invertible(f, 2, rng);
      const Mobius2x2 mob(f, t(0, 0), t(0, 1), t(1, 0), t(1, 1));
      Poly lhs(f);
      try {
        lhs = mobius_transform(chi, mob);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Inadmissible) throw;
        ++rejected;
        continue;
      }
      r.check(lhs == mobius_charpoly_check(chi, mob), "p=" + std::to_string(p));
      ++done;
    }
  }
  r.summary = "3000 admissible pairs, " + std::to_string(rejected) + " inadmissible redrawn";
}

// Criterion 6: the catalog representatives are pairwise inequivalent.
void catalog_inequivalent(Report& r) {
  std::size_t pairs = 0, oracle_pairs = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    const auto catalog = theorem2_catalog(f);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto a = representative(catalog[i], f);
      r.check(is_regular(a), "catalog entry not regular");
      for (std::size_t j = i + 1; j < catalog.size(); ++j) {
        const auto b = representative(catalog[j], f);
        ++pairs;
        if (a.dims() != b.dims()) continue;
        ++oracle_pairs;
        const auto res = oracle::oracle_equivalent(a, b);
        r.check(!res.equivalent, "p=" + std::to_string(p) + " " +
                                     std::string(to_string(catalog[i].label)) + " ~ " +
                                     std::string(to_string(catalog[j].label)));
      }
    }
  }
  r.summary = std::to_string(pairs) + " pairs, " + std::to_string(oracle_pairs) +
              " same-shape pairs by oracle";
}

// Criterion 7: A(1) over GF(5) reaches the diagonal pair by the chain: add
// the first slice to the second, diagonalize by similarity, halve the second
// slice, subtract it from the first.
void worked_example(Report& r) {
  PrimeField f(5);
  const auto s2 = [&](std::initializer_list<std::initializer_list<std::int64_t>> a,
                      std::initializer_list<std::initializer_list<std::int64_t>> b) {
    return SpatialMatrix(f, 2, 2, std::vector<Matrix>{Matrix(f, a), Matrix(f, b)});
  };
  const Matrix I = Matrix::identity(f, 2);
  const SpatialMatrix a1 = representative({RegularLabel::A, FieldElem(f, 1)}, f);
  const Matrix P(f, {{1, 1}, {4, 1}});
  const TransformWitness steps[] = {
      {I, I, Matrix(f, {{1, 1}, {0, 1}})},
      {inverse(P).transpose(), P, I},
      {I, I, Matrix(f, {{1, 0}, {0, 3}})},
      {I, I, Matrix(f, {{1, 0}, {4, 1}})},
  };
  const SpatialMatrix expected[] = {
      s2({{1, 0}, {0, 1}}, {{1, 1}, {1, 1}}),
      s2({{1, 0}, {0, 1}}, {{0, 0}, {0, 2}}),
      s2({{1, 0}, {0, 1}}, {{0, 0}, {0, 1}}),
      s2({{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}),
  };
  r.check(a1 == s2({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}), "A(1) representative");
  SpatialMatrix cur = a1;
  TransformWitness total = TransformWitness::identity(f, 2, 2, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    cur = apply_transform(cur, steps[i]);
    total = TransformWitness::compose(total, steps[i]);
    r.check(cur == expected[i], "step " + std::to_string(i + 1));
  }
  r.check(apply_transform(a1, total) == expected[3], "composed witness");
  const auto e = equivalent(a1, expected[3]);
  r.check(e.equivalent && e.witness && apply_transform(a1, *e.witness) == expected[3],
          "equivalent");
  r.summary = "4-step chain composed and verified";
}

// Criterion 8: the closed-form test agrees with the general decision.
void lemma2_agreement(Report& r) {
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    std::vector<FieldElem> els;
    for (std::uint64_t x = 0; x < p; ++x) els.emplace_back(f, static_cast<std::int64_t>(x));
    for (const auto& u : els)
      for (const auto& v : els)
        for (const auto& u2 : els)
          for (const auto& v2 : els)
            r.check(lemma2_equivalent(u, v, u2, v2) ==
                        equivalent(d_tensor(u, v), d_tensor(u2, v2)).equivalent,
                    "p=" + std::to_string(p));
  }
  r.summary = std::to_string(r.checks) + " quadruples";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Report&)> run;
  };
  const Criterion criteria[] = {
      {1, "GF(2) 2x2x2 labels match the orbit partition", 5, exhaustive_gf2},
      {2, "GF(3) 2x2x2 labels separate orbit representatives", 60, representatives_gf3},
      {3, "witness soundness on random tensors", 60, witness_soundness},
      {4, "Kronecker soundness on random pencils", 60, kronecker_soundness},
      {5, "Moebius formula equals the companion route", 10, mobius_identity},
      {6, "catalog representatives are pairwise inequivalent", 120, catalog_inequivalent},
      {7, "A(1) over GF(5) reduces to the diagonal pair", 1, worked_example},
      {8, "closed-form 2x2x2 test agrees with equivalent", 60, lemma2_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = secs > c.limit_seconds;
    const bool ok = r.failures == 0 && !slow;
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << r.summary << "; " << std::fixed << std::setprecision(2) << secs << " s of "
              << c.limit_seconds << " s)\n";
    for (const auto& note : r.notes) std::cout << "    " << note << '\n';
    if (r.failures) std::cout << "    " << r.failures << " of " << r.checks << " checks failed\n";
    if (slow) std::cout << "    exceeded the time limit\n";
  }
  return failed ? 1 : 0;
}
