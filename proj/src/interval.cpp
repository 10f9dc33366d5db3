#include "arakelov/interval.hpp"

#include <algorithm>
#include <cstdlib>

namespace arakelov {

int default_precision_bits() {
    static int bits = [] {
        if (const char* env = std::getenv("ARAKELOV_PRECISION_BITS")) {
            int v = std::atoi(env);
            if (v >= 16 && v <= (1 << 20)) return v;
        }
        return 128;
    }();
    return bits;
}

int precision_cap_bits() {
    return std::max(16384, 64 * default_precision_bits());
}

// ---------------------------------------------------------------------------
// DInt
// ---------------------------------------------------------------------------

namespace {
inline double bump_down(double x) {
    return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL);
}
inline double bump_up(double x) {
    return std::nextafter(std::nextafter(x, HUGE_VAL), HUGE_VAL);
}
}  // namespace

DInt DInt::from_rat(const Rat& q) {
    double m = to_double(q);
    // conversion is faithful but not directed; bump both ways
    return {bump_down(m), bump_up(m)};
}

DInt DInt::operator+(const DInt& o) const { return {bump_down(lo + o.lo), bump_up(hi + o.hi)}; }
DInt DInt::operator-(const DInt& o) const { return {bump_down(lo - o.hi), bump_up(hi - o.lo)}; }

DInt DInt::operator*(const DInt& o) const {
    const double p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return {bump_down(std::min(std::min(p1, p2), std::min(p3, p4))),
            bump_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

DInt DInt::operator/(const DInt& o) const {
    if (o.lo <= 0.0 && o.hi >= 0.0) throw DomainError("DInt: division by interval containing zero");
    const double p1 = lo / o.lo, p2 = lo / o.hi, p3 = hi / o.lo, p4 = hi / o.hi;
    return {bump_down(std::min(std::min(p1, p2), std::min(p3, p4))),
            bump_up(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

DInt DInt::abs() const {
    if (lo >= 0.0) return *this;
    if (hi <= 0.0) return {-hi, -lo};
    return {0.0, std::max(-lo, hi)};
}

DInt DInt::sqr() const {
    DInt a = abs();
    return {bump_down(a.lo * a.lo), bump_up(a.hi * a.hi)};
}

DInt d_sqrt(const DInt& x) {
    if (x.hi < 0.0) throw DomainError("d_sqrt: negative interval");
    double lo = x.lo > 0.0 ? bump_down(std::sqrt(x.lo)) : 0.0;
    if (lo < 0.0) lo = 0.0;
    return {lo, bump_up(std::sqrt(x.hi))};
}

DInt d_exp(const DInt& x) {
    // libm exp is within ~1 ulp; widen by 4 ulps plus a relative guard
    double lo = std::exp(x.lo), hi = std::exp(x.hi);
    return {bump_down(bump_down(lo)), bump_up(bump_up(hi))};
}

DInt d_log(const DInt& x) {
    if (x.lo <= 0.0) throw DomainError("d_log: non-positive interval");
    return {bump_down(bump_down(std::log(x.lo))), bump_up(bump_up(std::log(x.hi)))};
}

std::optional<bool> d_le(const DInt& x, double bound) {
    if (x.hi <= bound) return true;
    if (x.lo > bound) return false;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// MpInt
// ---------------------------------------------------------------------------

MpInt::MpInt(int prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

MpInt::MpInt(const MpInt& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

MpInt::MpInt(MpInt&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

MpInt& MpInt::operator=(const MpInt& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

MpInt& MpInt::operator=(MpInt&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

MpInt::~MpInt() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

MpInt MpInt::from_rat(const Rat& q, int prec) {
    MpInt r(prec);
    mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
    return r;
}

MpInt MpInt::from_int(long v, int prec) {
    MpInt r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

MpInt MpInt::from_double(double v, int prec) {
    MpInt r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

MpInt MpInt::pi(int prec) {
    MpInt r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

bool MpInt::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

MpInt MpInt::operator+(const MpInt& o) const {
    MpInt r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::operator-(const MpInt& o) const {
    MpInt r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

MpInt MpInt::operator-() const {
    MpInt r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

MpInt MpInt::operator*(const MpInt& o) const {
    MpInt r(std::max(prec_, o.prec_));
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_mul(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

MpInt MpInt::operator/(const MpInt& o) const {
    if (o.contains_zero()) throw DomainError("MpInt: division by interval containing zero");
    MpInt r(std::max(prec_, o.prec_));
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDD);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDD);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDD);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[2], MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c[3], MPFR_RNDD);
    mpfr_div(c[0], lo_, o.lo_, MPFR_RNDU);
    mpfr_div(c[1], lo_, o.hi_, MPFR_RNDU);
    mpfr_div(c[2], hi_, o.lo_, MPFR_RNDU);
    mpfr_div(c[3], hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, c[0], c[1], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[2], MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c[3], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

MpInt MpInt::mid() const {
    MpInt r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

MpInt MpInt::sym(const MpInt& r0) {
    MpInt r(r0.prec_);
    mpfr_neg(r.lo_, r0.hi_, MPFR_RNDD);
    mpfr_set(r.hi_, r0.hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::abs() const {
    MpInt r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::sqr() const {
    MpInt a = abs();
    MpInt r(prec_);
    mpfr_mul(r.lo_, a.lo_, a.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, a.hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw DomainError("MpInt::sqrt: negative interval");
    MpInt r(prec_);
    if (mpfr_sgn(lo_) > 0)
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    else
        mpfr_set_zero(r.lo_, 1);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::exp() const {
    MpInt r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::log() const {
    if (mpfr_sgn(lo_) <= 0) throw DomainError("MpInt::log: non-positive interval");
    MpInt r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

MpInt MpInt::mul_2exp(long e) const {
    MpInt r(prec_);
    mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

std::optional<bool> MpInt::le_rat(const Rat& q) const {
    if (mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.backend().data())) <= 0) return true;
    if (mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.backend().data())) > 0) return false;
    return std::nullopt;
}

std::optional<bool> MpInt::lt_rat(const Rat& q) const {
    if (mpfr_cmp_q(hi_, const_cast<mpq_ptr>(q.backend().data())) < 0) return true;
    if (mpfr_cmp_q(lo_, const_cast<mpq_ptr>(q.backend().data())) >= 0) return false;
    return std::nullopt;
}

std::optional<bool> MpInt::le(const MpInt& o) const {
    if (mpfr_cmp(hi_, o.lo_) <= 0) return true;
    if (mpfr_cmp(lo_, o.hi_) > 0) return false;
    return std::nullopt;
}

bool MpInt::within_rat(const Rat& q, const Rat& eps) const {
    Rat lo_bound = q - eps, hi_bound = q + eps;
    return mpfr_cmp_q(lo_, const_cast<mpq_ptr>(lo_bound.backend().data())) > 0 &&
           mpfr_cmp_q(hi_, const_cast<mpq_ptr>(hi_bound.backend().data())) < 0;
}

MpInt min_mp(const MpInt& a, const MpInt& b) {
    MpInt r(std::max(a.prec_, b.prec_));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

MpInt max_mp(const MpInt& a, const MpInt& b) {
    MpInt r(std::max(a.prec_, b.prec_));
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

}  // namespace arakelov
