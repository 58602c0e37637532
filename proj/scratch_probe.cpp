#include <chrono>
#include <cstdio>
#include <vector>

#include "core/opwords.hpp"

using namespace qts;
using Clock = std::chrono::steady_clock;

static long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  set_degree_cap(12);
  set_mn_cap(16);

  std::vector<SymF> pool;
  for (int d = 0; d <= 3; ++d)
    for (const auto& lam : partitions_of(d))
      pool.push_back(SymF::basis_elem(Basis::p, lam));
  printf("pool: %zu\n", pool.size());

  QTRatio minv = QTRatio::M().inverse();
  auto bracket = [&](int cm, int cn, int am, int an, const SymF& f) {
    SymF ab = apply_q(cm, cn, apply_q(am, an, f));
    SymF ba = apply_q(am, an, apply_q(cm, cn, f));
    return (ab - ba).scaled(minv);
  };

  struct Case {
    int cm, cn, am, an;
  };
  std::vector<Case> cases = {
      {10, 7, 2, 1}, {7, 5, 5, 3}, {4, 3, 8, 5}, {1, 1, 11, 7}};
  std::vector<std::vector<SymF>> results;
  for (auto& c : cases) {
    auto t0 = Clock::now();
    std::vector<SymF> imgs;
    for (auto& f : pool) imgs.push_back(bracket(c.cm, c.cn, c.am, c.an, f));
    printf("bracket [(%d,%d),(%d,%d)]: %ld ms\n", c.cm, c.cn, c.am, c.an,
           ms_since(t0));
    results.push_back(std::move(imgs));
  }
  auto t0 = Clock::now();
  std::vector<SymF> direct;
  for (auto& f : pool) direct.push_back(apply_q(12, 8, f));
  printf("direct Q(12,8): %ld ms\n", ms_since(t0));

  bool all_eq = true;
  for (size_t u = 1; u < results.size(); ++u)
    if (results[u] != results[0]) all_eq = false;
  printf("brackets agree: %s\n", all_eq ? "yes" : "NO");
  printf("direct matches bracket/M: %s\n",
         direct == results[0] ? "yes" : "NO");
  return 0;
}
