#include "tanrep/io.hpp"

#include <charconv>
#include <cmath>

namespace tanrep {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

nlohmann::ordered_json window_to_json(const WindowParams& w) {
    nlohmann::ordered_json j;
    j["c"] = w.c;
    j["theta"] = w.theta;
    j["k"] = w.k;
    j["delta1"] = w.delta1;
    j["delta2"] = w.delta2;
    j["x"] = w.x;
    j["n_star"] = w.n_star;
    j["n1"] = w.n1;
    j["epsilon"] = w.epsilon;
    j["tau"] = w.tau;
    j["residual"] = w.residual;
    j["warnings"] = w.warnings;
    return j;
}

}  // namespace tanrep
