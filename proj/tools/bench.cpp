// Serial vs OpenMP timing for the three data-parallel kernels:
//   - the consecutive-power fixed-point chain behind the orbit table
//   - subset enumeration behind numeric resonance detection
//   - the Cesaro average of the almost-periodic factor
//
// Usage: bench [N_table] [t_pairs] [N_cesaro]

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "toral/int_matrix.hpp"
#include "toral/json_io.hpp"
#include "toral/orbit.hpp"
#include "toral/resonance.hpp"
#include "toral/spectrum.hpp"

using namespace toral;

namespace {

IntMatrix quasi4() {
    return parse_matrix_json("[[0,0,0,-1],[1,0,0,8],[0,1,0,-6],[0,0,1,8]]");
}

template <typename F>
double timed(F&& fn) {
    double t0 = omp_get_wtime();
    fn();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   omp %8.3fs   speedup %.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    long n_table = argc > 1 ? std::atol(argv[1]) : 1500;
    int t_pairs = argc > 2 ? std::atoi(argv[2]) : 9;
    long n_cesaro = argc > 3 ? std::atol(argv[3]) : 20000000;

    std::printf("threads: %d\n", omp_get_max_threads());
    IntMatrix a = quasi4();

    OrbitTable ts, tp;
    double s1 = timed([&] { ts = mertens_series_serial(a, n_table, 60); });
    double p1 = timed([&] { tp = mertens_series(a, n_table, 60); });
    bool same_table = ts.rows.size() == tp.rows.size();
    for (size_t i = 0; same_table && i < ts.rows.size(); ++i)
        same_table = ts.rows[i].fix == tp.rows[i].fix &&
                     ts.rows[i].orbits == tp.rows[i].orbits &&
                     ts.rows[i].mertens == tp.rows[i].mertens;
    report("orbit table", s1, p1);
    std::printf("  tables identical: %s\n", same_table ? "yes" : "NO");

    std::vector<int> powers;
    for (int i = 1; i <= t_pairs; ++i) powers.push_back(i);
    Spectrum sp = spectrum_of_block(BlockSpec{a, powers}, 60);
    ResonanceProfile rs, rp;
    double s2 = timed([&] { rs = resonance_numeric_serial(sp); });
    double p2 = timed([&] { rp = resonance_numeric(sp); });
    report("resonance enumeration", s2, p2);
    std::printf("  m: serial %s, omp %s (t = %d, %llu subsets)\n", rs.m.str().c_str(),
                rp.m.str().c_str(), sp.t, 1ULL << (2 * sp.t));

    Spectrum base = classify(char_poly(a), 60);
    std::vector<Real> args(4, base.unit_args[0]);
    double vs = 0, vp = 0;
    double s3 = timed([&] { vs = cesaro_average_serial(args, n_cesaro); });
    double p3 = timed([&] { vp = cesaro_average(args, n_cesaro); });
    report("cesaro average", s3, p3);
    std::printf("  value: serial %.10f, omp %.10f\n", vs, vp);
    return 0;
}
