#ifndef BSDLAB_CURVE_HPP
#define BSDLAB_CURVE_HPP

#include <array>
#include <optional>
#include <string>

#include "bsdlab/numutil.hpp"

namespace bsdlab {

// Affine rational point or the point at infinity; coordinates are exact.
struct RationalPoint {
    bool infinity = true;
    Rat x, y;

    static RationalPoint zero() { return RationalPoint{}; }
    static RationalPoint affine(Rat xx, Rat yy) { return {false, std::move(xx), std::move(yy)}; }
    bool operator==(const RationalPoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

std::string to_string(const RationalPoint& p);
RationalPoint parse_point(const std::string& s);

// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with the b/c/disc quantities cached at construction.
class CurveQ {
  public:
    CurveQ(Int a1, Int a2, Int a3, Int a4, Int a6, std::string label = "");

    const Int& a1() const { return a_[0]; }
    const Int& a2() const { return a_[1]; }
    const Int& a3() const { return a_[2]; }
    const Int& a4() const { return a_[3]; }
    const Int& a6() const { return a_[4]; }
    const std::array<Int, 5>& a() const { return a_; }

    const Int& b2() const { return b2_; }
    const Int& b4() const { return b4_; }
    const Int& b6() const { return b6_; }
    const Int& b8() const { return b8_; }
    const Int& c4() const { return c4_; }
    const Int& c6() const { return c6_; }
    const Int& disc() const { return disc_; }

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool contains(const RationalPoint& p) const;

    RationalPoint negate(const RationalPoint& p) const;
    RationalPoint add(const RationalPoint& p, const RationalPoint& q) const;
    RationalPoint mul(long n, const RationalPoint& p) const;

    // "label:[a1,a2,a3,a4,a6]" or bare "[a1,a2,a3,a4,a6]"
    static CurveQ parse(const std::string& line);

    bool operator==(const CurveQ& o) const { return a_ == o.a_; }

  private:
    std::array<Int, 5> a_;
    Int b2_, b4_, b6_, b8_, c4_, c6_, disc_;
    std::string label_;
};

}  // namespace bsdlab

#endif
