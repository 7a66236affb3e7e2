#include "unitfrac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "unitfrac/enum3.hpp"

namespace unitfrac {

namespace {

template <typename F>
double median_ms(F&& body, int reps) {
    std::vector<double> times;
    times.reserve(reps);
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

std::optional<double> fit_slope(const std::vector<BenchPoint>& pts, double BenchPoint::*field) {
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : pts) {
        double x = std::log10(static_cast<double>(p.n));
        double y = std::log10(std::max(p.*field, 1e-6));  // clamp below timer resolution
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double den = n * sxx - sx * sx;
    if (den == 0) return std::nullopt;
    return (n * sxy - sx * sy) / den;
}

}  // namespace

BenchReport run_bench(u64 m, const std::vector<u64>& ns, int reps) {
    if (ns.empty()) throw std::invalid_argument("run_bench: empty n list");
    if (reps < 1) throw std::invalid_argument("run_bench: reps must be >= 1");
    BenchReport rep;
    rep.m = m;
    rep.reps = reps;
    for (u64 n : ns) {
        const Fraction f(mpz_class(static_cast<unsigned long>(m)),
                         mpz_class(static_cast<unsigned long>(n)));
        BenchPoint pt;
        pt.n = n;
        std::size_t cnt = 0;
        pt.enum3_ms = median_ms([&] { cnt = enumerate3(f).size(); }, reps);
        pt.count = cnt;
        pt.oracle_ms = median_ms([&] { (void)oracle3(f).size(); }, reps);
        rep.points.push_back(pt);
    }
    if (rep.points.size() >= 2) {
        rep.enum3_slope = fit_slope(rep.points, &BenchPoint::enum3_ms);
        rep.oracle_slope = fit_slope(rep.points, &BenchPoint::oracle_ms);
    }
    return rep;
}

std::string BenchReport::table() const {
    std::ostringstream s;
    s << "# bench m=" << m << " reps=" << reps << " (median wall ms)\n";
    s << "n,enumerate3_ms,oracle3_ms,count\n";
    for (const auto& p : points)
        s << p.n << ',' << p.enum3_ms << ',' << p.oracle_ms << ',' << p.count << '\n';
    if (enum3_slope)
        s << "# log-log slope enumerate3=" << *enum3_slope << " oracle3=" << *oracle_slope
          << '\n';
    else
        s << "# slopes omitted (single point)\n";
    return s.str();
}

}  // namespace unitfrac
