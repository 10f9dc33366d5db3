#include "arakelov/numeric.hpp"

#include <array>
#include <cctype>
#include <cstring>

namespace arakelov {

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("rat_from_double: non-finite value");
    if (x == 0.0) return Rat(0);
    int exp2 = 0;
    double m = std::frexp(x, &exp2);  // x = m * 2^exp2, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    Int num = Int(std::ldexp(m, 53));
    exp2 -= 53;
    Rat q(num);
    if (exp2 >= 0) {
        q *= Rat(Int(1) << exp2);
    } else {
        q /= Rat(Int(1) << (-exp2));
    }
    return q;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("parse_rat: empty string");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw ParseError("parse_rat: zero denominator");
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            auto e = s.find_first_of("eE");
            if (e == std::string::npos) return Rat(Int(s));
        }
        // Decimal (possibly with exponent): parse as exact base-10 value.
        std::string t = s;
        long ten_exp = 0;
        auto e = t.find_first_of("eE");
        if (e != std::string::npos) {
            ten_exp = std::stol(t.substr(e + 1));
            t = t.substr(0, e);
        }
        dot = t.find('.');
        if (dot != std::string::npos) {
            ten_exp -= static_cast<long>(t.size() - dot - 1);
            t.erase(dot, 1);
        }
        if (t.empty() || t == "-" || t == "+") throw ParseError("parse_rat: bad number " + s);
        Rat q{Int(t)};
        Int p10 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(std::abs(ten_exp)));
        if (ten_exp >= 0) q *= Rat(p10); else q /= Rat(p10);
        return q;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("parse_rat: cannot parse '") + s + "': " + ex.what());
    }
}

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double log_rat(const Rat& q) {
    if (q <= 0) throw DomainError("log_rat: non-positive argument");
    const Int num = numerator(q), den = denominator(q);
    auto log_pos_int = [](const Int& n) {
        // n = m * 2^k with m representable in double
        const long bits = static_cast<long>(msb(n));  // floor(log2 n)
        if (bits <= 900) return std::log(to_double(n));
        const long shift = bits - 60;
        Int m = n >> shift;
        return std::log(to_double(m)) + static_cast<double>(shift) * std::log(2.0);
    };
    return log_pos_int(num) - log_pos_int(den);
}

double log_factorial(int n) {
    double s = 0.0;
    for (int k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
    return s;
}

double unit_ball_volume(int n) {
    // V_0 = 1, V_1 = 2, V_n = V_{n-2} * 2*pi/n
    double v0 = 1.0, v1 = 2.0;
    if (n == 0) return v0;
    if (n == 1) return v1;
    const double two_pi = 2.0 * M_PI;
    double v = (n % 2 == 0) ? v0 : v1;
    for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) v *= two_pi / k;
    return v;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace arakelov
