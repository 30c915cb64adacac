// Benchmark: serial reference scan vs the block-parallel scan on real class
// data.  Both paths must return identical results; the benchmark checks that
// while it times them.

#include <chrono>
#include <cstdio>
#include <string>

#include "ctk/jordan.hpp"
#include "ctk/rack.hpp"

using namespace ctk;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Timing {
  double serial = 0, parallel = 0;
  bool agree = true;
};

Timing time_scan(const rack::ClassRack& O, char which, std::size_t budget) {
  rack::Budget bs, bp;
  bs.pair_budget = bp.pair_budget = budget;
  bs.quad_budget = bp.quad_budget = budget;
  bs.parallel = false;
  bp.parallel = true;
  auto run = [&](const rack::Budget& b) {
    switch (which) {
      case 'D': return rack::check_type_D(O, b);
      case 'C': return rack::check_type_C(O, b);
      default: return rack::check_type_F(O, b);
    }
  };
  Timing t;
  auto t0 = std::chrono::steady_clock::now();
  auto rs = run(bs);
  auto t1 = std::chrono::steady_clock::now();
  auto rp = run(bp);
  auto t2 = std::chrono::steady_clock::now();
  t.serial = seconds(t0, t1);
  t.parallel = seconds(t1, t2);
  t.agree = rs.cert.has_value() == rp.cert.has_value() &&
            rs.complete == rp.complete;
  if (rs.cert && rp.cert)
    t.agree = t.agree && rs.cert->witnesses == rp.cert->witnesses;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  std::string spec = argc > 1 ? argv[1] : "sp4:3/z";
  std::size_t budget = argc > 2 ? std::stoull(argv[2]) : 50000;
#ifdef CTK_HAVE_OPENMP
  std::printf("# OpenMP enabled\n");
#else
  std::printf("# OpenMP not available: parallel path falls back to serial\n");
#endif
  std::printf("# group %s, budget %zu\n", spec.c_str(), budget);
  auto G = grp::make_group(spec);
  auto classes = grp::conjugacy_classes(G);
  bool ok = true;
  for (const auto& cl : classes) {
    if (jordan::classify_element(G, cl.rep) != jordan::ElementKind::Mixed)
      continue;
    rack::ClassRack O;
    O.G = &G;
    O.rep = cl.rep;
    O.members = cl.members;
    for (char which : {'D', 'C', 'F'}) {
      Timing t = time_scan(O, which, budget);
      std::printf("class |O|=%6zu  type %c  serial %8.3fs  parallel %8.3fs  "
                  "speedup %5.2fx  %s\n",
                  cl.members.size(), which, t.serial, t.parallel,
                  t.parallel > 0 ? t.serial / t.parallel : 0.0,
                  t.agree ? "agree" : "DISAGREE");
      ok = ok && t.agree;
    }
  }
  if (!ok) {
    std::fprintf(stderr, "serial and parallel scans disagreed\n");
    return 1;
  }
  return 0;
}
