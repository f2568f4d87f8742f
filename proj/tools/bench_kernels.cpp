// Compares the parallel gate kernels against the serial reference on an
// identical workload: same circuit, same state size, timed separately, and
// the final amplitude vectors must agree bit for bit.

#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qspread/circuit.hpp"
#include "qspread/state.hpp"

namespace {

using namespace qspread;

Circuit workload(int n, int reps) {
    Circuit c(n);
    for (int r = 0; r < reps; ++r) {
        for (int q = 0; q < n; ++q) c.h(q);
        for (int q = 0; q + 1 < n; ++q) c.cx(q, q + 1);
        for (int q = 0; q < n; ++q) c.ry(q, 0.1 + 0.01 * q);
        c.ccx(0, 1, n - 1);
    }
    return c;
}

double run(KernelMode mode, const Circuit& c, Statevector& out) {
    Statevector s(c.num_qubits(), mode);
    const auto t0 = std::chrono::steady_clock::now();
    s.apply(c);
    const double p = s.marginal_probability(c.num_qubits() - 1);
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("  marginal(top) = %.17g\n", p);
    out = s;
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 20;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 8;
    if (n < 2 || n > kMaxQubits) {
        std::fprintf(stderr, "usage: bench_kernels [qubits 2..%d] [reps]\n", kMaxQubits);
        return 2;
    }

    const Circuit c = workload(n, reps);
    std::printf("workload: %d qubits, %zu gates\n", n, c.gates().size());

    Statevector serial(n), parallel(n);
    std::printf("serial reference:\n");
    const double t_serial = run(KernelMode::Serial, c, serial);
    std::printf("  time: %.3f s\n", t_serial);
    std::printf("parallel kernels:\n");
    const double t_parallel = run(KernelMode::Parallel, c, parallel);
    std::printf("  time: %.3f s\n", t_parallel);

    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < dim; ++i) {
        const std::complex<double> a = serial.amplitude(i);
        const std::complex<double> b = parallel.amplitude(i);
        if (a.real() != b.real() || a.imag() != b.imag()) {
            std::printf("MISMATCH at index %llu: (%.17g, %.17g) vs (%.17g, %.17g)\n",
                        static_cast<unsigned long long>(i), a.real(), a.imag(), b.real(),
                        b.imag());
            return 1;
        }
    }
    std::printf("bitwise-identical results: yes\n");
    std::printf("speedup: %.2fx\n", t_parallel > 0.0 ? t_serial / t_parallel : 0.0);
    return 0;
}
