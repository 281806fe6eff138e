#include "okcaps/rat.hpp"

#include <stdexcept>

namespace okcaps {

Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

bool is_integer(const Rat& q) { return denominator(q) == 1; }

std::string rat_str(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Rat parse_rat(const std::string& s) {
    auto bad = [&] { return std::runtime_error("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

RatInterval sqrt_interval(const Rat& x, const Rat& eps) {
    if (x < 0) throw std::runtime_error("sqrt of negative rational");
    if (auto r = exact_sqrt(x)) return {*r, *r};
    if (eps <= 0) throw std::runtime_error("sqrt_interval: eps must be positive");
    // Scale so that floor(sqrt(x * S^2)) / S brackets sqrt(x) within 1/S.
    Int s = ceil_rat(Rat(2) / eps);
    Int scaled = floor_rat(x * s * s);
    Int root = sqrt(scaled);
    Rat lo(root, s);
    Rat hi(root + 2, s);
    if (lo * lo > x) lo = 0; // can only happen for tiny x; keep the bracket sound
    return {lo, hi};
}

std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Int n = numerator(x), d = denominator(x);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn == n && rd * rd == d) return Rat(rn, rd);
    return std::nullopt;
}

} // namespace okcaps
