#pragma once

#include <mpfr.h>

#include <cmath>
#include <optional>
#include <string>

#include "arakelov/numeric.hpp"

namespace arakelov {

// Requested working precision (bits); overridable via ARAKELOV_PRECISION_BITS.
int default_precision_bits();
// Hard ceiling for precision escalation before PrecisionError.
int precision_cap_bits();

// ---------------------------------------------------------------------------
// Fast double interval with outward rounding by ulp-bumping.
// ---------------------------------------------------------------------------
struct DInt {
    double lo = 0.0, hi = 0.0;

    static DInt exact(double x) { return {x, x}; }
    static DInt hull(double a, double b) { return a <= b ? DInt{a, b} : DInt{b, a}; }
    static DInt from_rat(const Rat& q);

    bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }

    DInt operator-() const { return {-hi, -lo}; }
    DInt operator+(const DInt& o) const;
    DInt operator-(const DInt& o) const;
    DInt operator*(const DInt& o) const;
    DInt operator/(const DInt& o) const;  // throws if o contains zero
    DInt abs() const;
    DInt sqr() const;
};

DInt d_sqrt(const DInt& x);
DInt d_exp(const DInt& x);
DInt d_log(const DInt& x);

// Tri-state comparison against an exact threshold: true / false / nullopt (straddles).
std::optional<bool> d_le(const DInt& x, double bound);

// ---------------------------------------------------------------------------
// MPFR-backed interval, arbitrary precision, rigorous directed rounding.
// ---------------------------------------------------------------------------
class MpInt {
  public:
    explicit MpInt(int prec = 64);
    MpInt(const MpInt& o);
    MpInt(MpInt&& o) noexcept;
    MpInt& operator=(const MpInt& o);
    MpInt& operator=(MpInt&& o) noexcept;
    ~MpInt();

    static MpInt from_rat(const Rat& q, int prec);
    static MpInt from_int(long v, int prec);
    static MpInt from_double(double v, int prec);
    static MpInt pi(int prec);

    int prec() const { return prec_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    DInt to_dint() const { return {lo_d(), hi_d()}; }
    bool contains_zero() const;

    MpInt operator+(const MpInt& o) const;
    MpInt operator-(const MpInt& o) const;
    MpInt operator*(const MpInt& o) const;
    MpInt operator/(const MpInt& o) const;  // throws if o contains zero
    MpInt operator-() const;
    MpInt abs() const;
    MpInt sqr() const;
    MpInt sqrt() const;
    MpInt exp() const;
    MpInt log() const;
    MpInt mul_2exp(long e) const;
    MpInt mid() const;                     // zero-width midpoint interval
    static MpInt sym(const MpInt& r);      // [-hi(r), +hi(r)]

    // x <= q? tri-state.
    std::optional<bool> le_rat(const Rat& q) const;
    std::optional<bool> lt_rat(const Rat& q) const;
    std::optional<bool> le(const MpInt& o) const;
    // interval certainly inside (q - eps, q + eps)?
    bool within_rat(const Rat& q, const Rat& eps) const;

  private:
    mpfr_t lo_, hi_;
    int prec_;
    friend MpInt min_mp(const MpInt&, const MpInt&);
    friend MpInt max_mp(const MpInt&, const MpInt&);
};

MpInt min_mp(const MpInt& a, const MpInt& b);
MpInt max_mp(const MpInt& a, const MpInt& b);

// Complex interval helpers (used for embeddings of number fields).
template <typename I>
struct CIntT {
    I re, im;
    CIntT operator+(const CIntT& o) const { return {re + o.re, im + o.im}; }
    CIntT operator-(const CIntT& o) const { return {re - o.re, im - o.im}; }
    CIntT operator*(const CIntT& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CIntT operator/(const CIntT& o) const {
        I d = o.abs_sq();
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    I abs_sq() const { return re.sqr() + im.sqr(); }
};

using CDInt = CIntT<DInt>;
using CMpInt = CIntT<MpInt>;

}  // namespace arakelov
