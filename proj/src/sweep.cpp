#include "unram/sweep.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace unram {

namespace {

void compositions(const std::vector<Integer>& marks, std::size_t i, const Integer& left, std::vector<Integer>& k,
                  std::vector<std::vector<Integer>>& out) {
  if (i == marks.size()) {
    if (left == 0) out.push_back(k);
    return;
  }
  for (Integer v = 0; v * marks[i] <= left; ++v) {
    k[i] = v;
    compositions(marks, i + 1, left - v * marks[i], k, out);
  }
}

SweepPointResult verify_one(const Alcove& a, const std::vector<OmegaElement>& omega,
                            const std::vector<HyperspecialVertex>& vertices, const AlcovePoint& x) {
  SweepPointResult r;
  r.point = x;
  try {
    RGroupData rg = stabilizer(a, omega, x, 0);
    r.r_group = rg.group.structure();
    TheoremReport rep = verify_main_theorem(a, vertices, rg);
    r.records = std::move(rep.records);
    r.passed = rep.passed;
  } catch (const std::exception& e) {
    r.passed = false;
    r.error = e.what();
  }
  return r;
}

SweepResult collect(std::vector<SweepPointResult> points) {
  SweepResult s;
  s.points = std::move(points);
  for (const auto& p : s.points) {
    s.records += p.records.size();
    if (!p.error.empty()) ++s.failures;
    for (const auto& rec : p.records)
      if (!rec.pass) ++s.failures;
  }
  return s;
}

}  // namespace

std::vector<AlcovePoint> enumerate_points(const Alcove& a, const std::vector<OmegaElement>& omega,
                                          std::size_t max_denominator) {
  std::vector<AlcovePoint> out;
  std::set<std::vector<Rational>> seen;
  std::vector<Integer> marks(a.marks.begin(), a.marks.end());
  for (std::size_t q = 1; q <= max_denominator; ++q) {
    std::vector<std::vector<Integer>> ks;
    std::vector<Integer> k(marks.size());
    compositions(marks, 0, Integer(static_cast<unsigned long>(q)), k, ks);
    for (const auto& c : ks) {
      std::vector<Rational> bary;
      for (std::size_t i = 1; i < c.size(); ++i) {
        Rational v(c[i], Integer(static_cast<unsigned long>(q)));
        v.canonicalize();
        bary.push_back(v);
      }
      AlcovePoint p = a.from_barycentric(bary);
      AlcovePoint canon = reduce_to_alcove(a, omega, p.coordinates).point;
      if (seen.insert(canon.barycentric).second) out.push_back(std::move(canon));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepResult verify_points_serial(const Alcove& a, const std::vector<OmegaElement>& omega,
                                 const std::vector<HyperspecialVertex>& vertices,
                                 const std::vector<AlcovePoint>& points) {
  std::vector<SweepPointResult> results;
  results.reserve(points.size());
  for (const auto& x : points) results.push_back(verify_one(a, omega, vertices, x));
  return collect(std::move(results));
}

SweepResult verify_points_parallel(const Alcove& a, const std::vector<OmegaElement>& omega,
                                   const std::vector<HyperspecialVertex>& vertices,
                                   const std::vector<AlcovePoint>& points, int jobs) {
  std::vector<SweepPointResult> results(points.size());
  const long n = static_cast<long>(points.size());
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long i = 0; i < n; ++i) results[i] = verify_one(a, omega, vertices, points[i]);
  (void)jobs;
  return collect(std::move(results));
}

}  // namespace unram
