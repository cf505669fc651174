#include "tanrep/seqeval.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "tanrep/errors.hpp"
#include "tanrep/parallel.hpp"

namespace tanrep {

namespace {

namespace bmp = boost::multiprecision;
using Extended =
    bmp::number<bmp::cpp_bin_float<kExtendedBits, bmp::digit_base_2>, bmp::et_off>;

[[noreturn]] void domain_error(std::int64_t n) {
    throw Error(ErrorKind::DomainError, "tan(log n) <= 0 at n = " + std::to_string(n));
}

double double_value(std::int64_t n, double c, double theta, Sequence seq) {
    if (n <= 0) throw Error(ErrorKind::DomainError, "n must be positive");
    const double x = static_cast<double>(n);
    const double power = std::pow(x, c);
    if (seq == Sequence::Classical) return power;
    const double tn = std::tan(std::log(x));
    if (!(tn > 0.0)) domain_error(n);
    return power * std::pow(tn, theta);
}

}  // namespace

double floor_guard(double v) {
    // Roughly 4500 ulps of v; covers the conditioning of tan(log n) on a window.
    return std::max(kEscalationGuard, 1e-12 * std::abs(v));
}

double distance_to_nearest_integer(double v) {
    const double fr = v - std::floor(v);
    return std::min(fr, 1.0 - fr);
}

ValueEntry floor_value_double(std::int64_t n, double c, double theta, Sequence seq) {
    const double v = double_value(n, c, theta, seq);
    const double fl = std::floor(v);
    return {n, static_cast<std::int64_t>(fl), v - fl, false};
}

ValueEntry floor_value_extended(std::int64_t n, double c, double theta, Sequence seq) {
    if (n <= 0) throw Error(ErrorKind::DomainError, "n must be positive");
    const Extended x(n);
    Extended v = pow(x, Extended(c));
    if (seq == Sequence::Tangent) {
        const Extended tn = tan(log(x));
        if (tn <= 0) domain_error(n);
        v *= pow(tn, Extended(theta));
    }
    const Extended fl = floor(v);
    const Extended fr = v - fl;
    if (fr < Extended(kAmbiguityThreshold) || Extended(1) - fr < Extended(kAmbiguityThreshold)) {
        std::ostringstream os;
        os << "value at n = " << n << " is within 2^-40 of an integer (" << v.str(40) << ")";
        throw Error(ErrorKind::AmbiguousFloor, os.str());
    }
    return {n, static_cast<std::int64_t>(fl), static_cast<double>(fr), true};
}

ValueEntry floor_value(std::int64_t n, double c, double theta, Sequence seq) {
    const double v = double_value(n, c, theta, seq);
    if (distance_to_nearest_integer(v) >= floor_guard(v)) {
        const double fl = std::floor(v);
        return {n, static_cast<std::int64_t>(fl), v - fl, false};
    }
    return floor_value_extended(n, c, theta, seq);
}

double frac_norm(std::int64_t n, double c, double theta) {
    const ValueEntry e = floor_value(n, c, theta);
    return std::min(e.frac, 1.0 - e.frac);
}

ValueTable tabulate(std::span<const std::int64_t> ns, double c, double theta, Sequence seq,
                    std::size_t threads) {
    ValueTable out(ns.size());
    if (threads == 0) threads = default_threads();
    parallel_chunks(ns.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i) out[i] = floor_value(ns[i], c, theta, seq);
    });
    return out;
}

void write_value_csv(std::ostream& os, std::span<const ValueEntry> table) {
    os << "n,f,frac,certified\n";
    char buf[128];
    for (const auto& e : table) {
        std::snprintf(buf, sizeof buf, "%lld,%lld,%.12f,%s\n", static_cast<long long>(e.n),
                      static_cast<long long>(e.f), e.frac, e.certified ? "true" : "false");
        os << buf;
    }
}

}  // namespace tanrep
