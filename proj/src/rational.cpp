#include "cubepeel/rational.hpp"
#include "cubepeel/error.hpp"

#include <cctype>

namespace cubepeel {

int sign(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

Rat parse_rational(const std::string& text) {
    using Int = boost::multiprecision::cpp_int;
    auto bad = [&]() {
        return input_error("bad-rational", "cannot parse rational '" + text + "'");
    };
    std::string s = text;
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s)) throw bad();
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) throw bad();
    Int d(den);
    if (d == 0) throw bad();
    return Rat(Int(num), d);
}

std::string format_rational(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

int sign_with_root(const Rat& a, const Rat& b, const Rat& s) {
    if (b == 0 || s == 0) return sign(a);
    if (a == 0) return sign(b);
    int sa = sign(a), sb = sign(b);
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|sqrt(s)
    int c = sign(a * a - b * b * s);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

int sign_with_two_roots(const Rat& a, const Rat& b1, const Rat& s1,
                        const Rat& b2, const Rat& s2) {
    if (b1 == 0 || s1 == 0) return sign_with_root(a, b2, s2);
    if (b2 == 0 || s2 == 0) return sign_with_root(a, b1, s1);
    // t = b1 sqrt(s1) + b2 sqrt(s2)
    int st;
    int sb1 = sign(b1), sb2 = sign(b2);
    if (sb1 == sb2) {
        st = sb1;
    } else {
        int c = sign(b1 * b1 * s1 - b2 * b2 * s2);
        st = (c == 0) ? 0 : (c > 0 ? sb1 : sb2);
    }
    if (st == 0) return sign(a);
    if (a == 0) return st;
    int sa = sign(a);
    if (sa == st) return sa;
    // |a| vs |t|: a^2 vs t^2 = b1^2 s1 + b2^2 s2 + 2 b1 b2 sqrt(s1 s2)
    int c = sign_with_root(a * a - b1 * b1 * s1 - b2 * b2 * s2,
                           -2 * b1 * b2, s1 * s2);
    if (c == 0) return 0;
    return (c > 0) ? sa : st;
}

Quad::Quad(Rat a_, Rat b_, Rat s_) : a(std::move(a_)), b(std::move(b_)), s(std::move(s_)) {
    if (s < 0) throw internal_error("negative-radicand", "Quad radicand must be >= 0");
    if (b == 0 || s == 0) { b = 0; s = 0; }
}

int sign(const Quad& q) { return sign_with_root(q.a, q.b, q.s); }

int compare(const Quad& x, const Quad& y) {
    return sign_with_two_roots(x.a - y.a, x.b, x.s, -y.b, y.s);
}

static const Rat& join_radicand(const Quad& x, const Quad& y) {
    if (x.b == 0) return y.s;
    if (y.b == 0) return x.s;
    if (x.s != y.s)
        throw internal_error("radicand-mismatch", "Quad arithmetic across different radicands");
    return x.s;
}

Quad add(const Quad& x, const Quad& y) {
    const Rat& s = join_radicand(x, y);
    return Quad(x.a + y.a, x.b + y.b, s);
}

Quad sub(const Quad& x, const Quad& y) {
    const Rat& s = join_radicand(x, y);
    return Quad(x.a - y.a, x.b - y.b, s);
}

Quad mul(const Quad& x, const Quad& y) {
    const Rat& s = join_radicand(x, y);
    return Quad(x.a * y.a + x.b * y.b * s, x.a * y.b + x.b * y.a, s);
}

Quad scale(const Rat& k, const Quad& x) { return Quad(k * x.a, k * x.b, x.s); }

} // namespace cubepeel
