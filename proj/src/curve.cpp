#include "bsdlab/curve.hpp"

#include <sstream>

namespace bsdlab {

CurveQ::CurveQ(Int a1, Int a2, Int a3, Int a4, Int a6, std::string label)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
      label_(std::move(label)) {
    const Int &A1 = a_[0], &A2 = a_[1], &A3 = a_[2], &A4 = a_[3], &A6 = a_[4];
    b2_ = A1 * A1 + 4 * A2;
    b4_ = 2 * A4 + A1 * A3;
    b6_ = A3 * A3 + 4 * A6;
    b8_ = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 - A4 * A4;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ +
            9 * b2_ * b4_ * b6_;
    if (disc_ == 0) throw SingularCurve("curve: discriminant is zero");
    if (4 * b8_ != b2_ * b6_ - b4_ * b4_)
        throw Error("curve: b-identity failed");  // unreachable
    if (c4_ * c4_ * c4_ - c6_ * c6_ != 1728 * disc_)
        throw Error("curve: 1728 disc identity failed");  // unreachable
}

bool CurveQ::contains(const RationalPoint& p) const {
    if (p.infinity) return true;
    const Rat &x = p.x, &y = p.y;
    return y * y + Rat(a1()) * x * y + Rat(a3()) * y ==
           x * x * x + Rat(a2()) * x * x + Rat(a4()) * x + Rat(a6());
}

RationalPoint CurveQ::negate(const RationalPoint& p) const {
    if (p.infinity) return p;
    return RationalPoint::affine(p.x, -p.y - Rat(a1()) * p.x - Rat(a3()));
}

RationalPoint CurveQ::add(const RationalPoint& p, const RationalPoint& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Rat &x1 = p.x, &y1 = p.y, &x2 = q.x, &y2 = q.y;
    const Rat A1(a1()), A2(a2()), A3(a3()), A4(a4());
    if (x1 == x2 && y1 + y2 + A1 * x2 + A3 == 0) return RationalPoint::zero();
    Rat lam;
    if (x1 == x2) {
        lam = (3 * x1 * x1 + 2 * A2 * x1 + A4 - A1 * y1) /
              (2 * y1 + A1 * x1 + A3);
    } else {
        lam = (y2 - y1) / (x2 - x1);
    }
    const Rat nu = y1 - lam * x1;
    const Rat x3 = lam * lam + A1 * lam - A2 - x1 - x2;
    const Rat y3 = -(lam + A1) * x3 - nu - A3;
    return RationalPoint::affine(x3, y3);
}

RationalPoint CurveQ::mul(long n, const RationalPoint& p) const {
    RationalPoint r = RationalPoint::zero();
    RationalPoint q = p;
    if (n < 0) {
        q = negate(q);
        n = -n;
    }
    while (n) {
        if (n & 1) r = add(r, q);
        q = add(q, q);
        n >>= 1;
    }
    return r;
}

namespace {

Rat parse_rat(const std::string& tok) {
    const auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        return Rat(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational: '" + tok + "'");
    }
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(const RationalPoint& p) {
    if (p.infinity) return "O";
    std::ostringstream os;
    os << "(" << p.x << "," << p.y << ")";
    return os.str();
}

RationalPoint parse_point(const std::string& s0) {
    const std::string s = strip(s0);
    if (s == "O" || s == "0") return RationalPoint::zero();
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw ParseError("bad point: '" + s0 + "'");
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("bad point: '" + s0 + "'");
    return RationalPoint::affine(parse_rat(strip(s.substr(1, comma - 1))),
                                 parse_rat(strip(s.substr(comma + 1, s.size() - comma - 2))));
}

CurveQ CurveQ::parse(const std::string& line) {
    std::string label, body = strip(line);
    const auto bracket = body.find('[');
    if (bracket == std::string::npos)
        throw ParseError("curve: expected '[a1,a2,a3,a4,a6]' in '" + line + "'");
    if (bracket > 0) {
        auto head = strip(body.substr(0, bracket));
        if (!head.empty() && head.back() == ':') head.pop_back();
        label = strip(head);
    }
    const auto close = body.find(']', bracket);
    if (close == std::string::npos) throw ParseError("curve: missing ']' in '" + line + "'");
    std::string inner = body.substr(bracket + 1, close - bracket - 1);
    std::array<Int, 5> a;
    size_t idx = 0, pos = 0;
    while (idx < 5) {
        auto comma = inner.find(',', pos);
        std::string tok = strip(comma == std::string::npos ? inner.substr(pos)
                                                           : inner.substr(pos, comma - pos));
        if (tok.empty()) throw ParseError("curve: empty coefficient in '" + line + "'");
        try {
            a[idx] = Int(tok);
        } catch (const std::exception&) {
            throw ParseError("curve: bad integer '" + tok + "'");
        }
        ++idx;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (idx != 5) throw ParseError("curve: need 5 coefficients in '" + line + "'");
    return CurveQ(a[0], a[1], a[2], a[3], a[4], label);
}

}  // namespace bsdlab
