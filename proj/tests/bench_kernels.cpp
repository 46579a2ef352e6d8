// Brute-force H^2(G; Z/2): serial reference against the OpenMP kernel, with the
// GF(2) linear algebra answer as a third opinion.
//   bench_kernels [--max-order N] [--repeat R]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "ftft/twogroup.hpp"

using namespace ftft;

namespace {

FiniteGroup table(const std::string& name, int n, const std::function<int(int, int)>& mul) {
    FiniteGroup g;
    for (int a = 0; a < n; ++a) g.labels.push_back(name + "[" + std::to_string(a) + "]");
    g.mult.assign(size_t(n), std::vector<int>(size_t(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[size_t(a)][size_t(b)] = mul(a, b);
    return g;
}

FiniteGroup cyclic(int n) {
    return table("Z" + std::to_string(n), n, [n](int a, int b) { return (a + b) % n; });
}

// S3 as r^k s^e at index 2k + e, with s r = r^-1 s
FiniteGroup s3() {
    return table("S3", 6, [](int a, int b) {
        int ka = a / 2, ea = a % 2, kb = b / 2, eb = b % 2;
        int k = (ka + (ea ? 3 - kb : kb)) % 3;
        return 2 * k + (ea ^ eb);
    });
}

double seconds(const std::function<void()>& f, int repeat) {
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < repeat; ++r) f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeat;
}

}  // namespace

int main(int argc, char** argv) {
    int max_order = 6, repeat = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--max-order")) max_order = std::atoi(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--repeat")) repeat = std::atoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: bench_kernels [--max-order N] [--repeat R]\n");
            return 2;
        }
    }
    std::vector<std::pair<std::string, FiniteGroup>> groups = {
        {"Z2", cyclic(2)}, {"Z3", cyclic(3)}, {"Z4", cyclic(4)},
        {"Z2xZ2", table("Z2xZ2", 4, [](int a, int b) { return a ^ b; })},
        {"Z5", cyclic(5)}, {"Z6", cyclic(6)}, {"S3", s3()}};

    std::printf("threads=%d\n", omp_get_max_threads());
    std::printf("%-7s %6s %10s %8s %10s %10s %8s\n", "group", "dim", "cocycles", "classes", "serial_s", "omp_s",
                "speedup");
    int bad = 0;
    for (const auto& [name, g] : groups) {
        if (g.order() > max_order) continue;
        BruteH2 s, p;
        double ts = seconds([&] { s = brute_h2_serial(g); }, repeat);
        double tp = seconds([&] { p = brute_h2_parallel(g); }, repeat);
        const size_t dim = h2_z2(g).dim();
        const bool ok = s.cocycles == p.cocycles && s.classes == p.classes && s.classes == (size_t(1) << dim);
        bad += !ok;
        std::printf("%-7s %6zu %10zu %8zu %10.4f %10.4f %8.2f%s\n", name.c_str(), dim, s.cocycles, s.classes, ts, tp,
                    tp > 0 ? ts / tp : 0.0, ok ? "" : "  MISMATCH");
    }
    return bad ? 1 : 0;
}
