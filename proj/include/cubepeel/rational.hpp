#ifndef CUBEPEEL_RATIONAL_HPP
#define CUBEPEEL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cubepeel {

using Rat = boost::multiprecision::cpp_rational;

int sign(const Rat& r);

// Parse "p/q" or "p" (reduced automatically); rejects q == 0 and garbage.
Rat parse_rational(const std::string& text);
// Canonical "p/q" form with q >= 1.
std::string format_rational(const Rat& r);

// sign(a + b*sqrt(s)), s >= 0.
int sign_with_root(const Rat& a, const Rat& b, const Rat& s);
// sign(a + b1*sqrt(s1) + b2*sqrt(s2)), s1, s2 >= 0.
int sign_with_two_roots(const Rat& a, const Rat& b1, const Rat& s1,
                        const Rat& b2, const Rat& s2);

// Exact value a + b*sqrt(s) in a single quadratic extension.  Values with
// different radicands may only be compared, not mixed arithmetically.
struct Quad {
    Rat a;     // rational part
    Rat b;     // coefficient of sqrt(s)
    Rat s;     // radicand, >= 0; kept 0 whenever b == 0

    Quad() = default;
    Quad(Rat a_, Rat b_, Rat s_);
    static Quad of(const Rat& r) { return Quad(r, 0, 0); }

    bool is_rational() const { return b == 0; }
};

int sign(const Quad& q);
int compare(const Quad& x, const Quad& y);
Quad add(const Quad& x, const Quad& y);   // requires compatible radicands
Quad sub(const Quad& x, const Quad& y);
Quad mul(const Quad& x, const Quad& y);   // requires compatible radicands
Quad scale(const Rat& k, const Quad& x);

// 2D point with quadratic coordinates sharing one radicand.
struct QPoint {
    Quad x, y;
};

} // namespace cubepeel

#endif
