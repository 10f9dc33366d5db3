#include "arakelov/ring.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace arakelov {

namespace {

// ---------------------------------------------------------------------------
// integer / rational polynomial helpers (coefficients low-to-high)
// ---------------------------------------------------------------------------

std::vector<Rat> rat_derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * p[k]);
    return d;
}

void rat_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> rat_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        rat_trim(a);
        if (a.size() >= b.size() && !a.empty() && a.back() == 0) rat_trim(a);
    }
    return a;
}

int rat_poly_gcd_degree(std::vector<Rat> a, std::vector<Rat> b) {
    rat_trim(a);
    rat_trim(b);
    while (!b.empty()) {
        auto r = rat_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

// monic / monic division over Z; true iff remainder is zero
bool int_poly_divides(const std::vector<Int>& g, const std::vector<Int>& p) {
    std::vector<Int> r = p;
    const size_t dg = g.size() - 1;
    if (r.size() < g.size()) return false;
    for (size_t top = r.size(); top-- > dg;) {
        Int f = r[top];
        if (f == 0) continue;
        size_t off = top - dg;
        for (size_t k = 0; k < g.size(); ++k) r[off + k] -= f * g[k];
    }
    return std::all_of(r.begin(), r.end(), [](const Int& c) { return c == 0; });
}

// Horner evaluation of an Int-coefficient polynomial over complex intervals.
CDInt horner_d(const std::vector<Int>& coeffs, const CDInt& z) {
    CDInt acc{DInt::exact(0.0), DInt::exact(0.0)};
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + DInt::from_rat(Rat(coeffs[k]));
    }
    return acc;
}

CMpInt horner_mp(const std::vector<Int>& coeffs, const CMpInt& z, int prec) {
    CMpInt acc{MpInt(prec), MpInt(prec)};
    for (size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + MpInt::from_rat(Rat(coeffs[k]), prec);
    }
    return acc;
}

std::vector<Int> int_derivative(const std::vector<Int>& p) {
    std::vector<Int> d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Int(static_cast<long>(k)) * p[k]);
    return d;
}

std::vector<std::complex<double>> initial_roots(const std::vector<Int>& poly) {
    const int d = static_cast<int>(poly.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -to_double(poly[i]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

std::shared_ptr<const NumberRing> NumberRing::build(std::vector<Int> poly, int precision_bits) {
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.size() < 2) throw DomainError("build_ring: degree must be >= 1");
    if (poly.back() != 1) throw DomainError("build_ring: polynomial must be monic");
    const int d = static_cast<int>(poly.size()) - 1;
    if (d > 8) throw DomainError("build_ring: degree > 8 not supported");
    if (precision_bits < 16) precision_bits = default_precision_bits();

    // squarefree over Q
    {
        std::vector<Rat> p(poly.size());
        for (size_t k = 0; k < poly.size(); ++k) p[k] = Rat(poly[k]);
        if (rat_poly_gcd_degree(p, rat_derivative(p)) > 0)
            throw DomainError("build_ring: polynomial is not squarefree");
    }

    auto ring = std::shared_ptr<NumberRing>(new NumberRing());
    ring->poly_ = poly;
    ring->degree_ = d;
    ring->precision_bits_ = precision_bits;

    // approximate roots, conjugate pairing
    auto approx = initial_roots(poly);
    std::sort(approx.begin(), approx.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    const double imag_tol = 1e-7 * (1.0 + std::abs(approx.back()));
    std::vector<int> used(d, 0);
    std::vector<Embedding> emb;
    std::vector<std::pair<int, int>> pair_of;  // indices into emb
    for (int i = 0; i < d; ++i) {
        if (used[i]) continue;
        if (std::abs(approx[i].imag()) <= imag_tol) {
            used[i] = 1;
            emb.push_back({{approx[i].real(), 0.0}, 0.0, true, static_cast<int>(emb.size())});
        } else {
            // find the closest conjugate
            int best = -1;
            double bd = 1e300;
            for (int j = 0; j < d; ++j) {
                if (used[j] || j == i) continue;
                double dist = std::abs(approx[j] - std::conj(approx[i]));
                if (dist < bd) { bd = dist; best = j; }
            }
            if (best < 0) throw PrecisionError("build_ring: cannot pair conjugate roots");
            used[i] = used[best] = 1;
            auto zi = approx[i].imag() > 0 ? approx[i] : approx[best];
            int a = static_cast<int>(emb.size());
            emb.push_back({zi, 0.0, false, a + 1});
            emb.push_back({std::conj(zi), 0.0, false, a});
        }
    }
    ring->emb_ = std::move(emb);
    ring->r1_ = 0;
    ring->r2_ = 0;
    for (const auto& e : ring->emb_) (e.is_real ? ring->r1_ : ring->r2_)++;
    ring->r2_ /= 2;
    if (ring->r1_ + 2 * ring->r2_ != d)
        throw PrecisionError("build_ring: signature classification failed");

    // certify at the requested precision; fills err fields via roots_mp
    const auto& certified = ring->roots_mp(precision_bits);
    for (int i = 0; i < d; ++i) {
        DInt re = certified[i].re.to_dint(), im = certified[i].im.to_dint();
        ring->emb_[i].approx = {re.mid(), im.mid()};
        ring->emb_[i].err = std::max(re.width(), im.width());
    }

    // pairwise disjointness of the certified disks (rigorous via DInt)
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            DInt dre = certified[i].re - certified[j].re;
            DInt dim = certified[i].im - certified[j].im;
            DInt dist_sq = dre.sqr() + dim.sqr();
            if (!(dist_sq.lo > 0))
                throw PrecisionError("build_ring: root disks not separated; raise precision");
        }

    // irreducibility: no proper subset of roots multiplies to an integer factor
    {
        int prec = std::max(64, precision_bits);
        for (;;) {
            const auto& roots = ring->roots_mp(prec);
            bool ambiguous = false;
            for (unsigned mask = 1; mask + 1 < (1u << d) && !ambiguous; ++mask) {
                // expand prod_{i in mask} (x - root_i)
                std::vector<CMpInt> c{CMpInt{MpInt::from_int(1, prec), MpInt::from_int(0, prec)}};
                for (int i = 0; i < d; ++i) {
                    if (!(mask >> i & 1u)) continue;
                    CMpInt mz{-roots[i].re, -roots[i].im};
                    std::vector<CMpInt> nc(c.size() + 1, CMpInt{MpInt(prec), MpInt(prec)});
                    for (size_t k = 0; k < c.size(); ++k) {
                        nc[k + 1] = nc[k + 1] + c[k];
                        nc[k] = nc[k] + c[k] * mz;
                    }
                    c = std::move(nc);
                }
                std::vector<Int> cand(c.size());
                bool possible = true;
                for (size_t k = 0; k + 1 < c.size() && possible; ++k) {
                    DInt re = c[k].re.to_dint(), im = c[k].im.to_dint();
                    if (im.lo > 0.0 || im.hi < 0.0) { possible = false; break; }
                    double fl = std::floor(re.hi);
                    if (fl < re.lo) { possible = false; break; }  // no integer inside
                    if (std::floor(re.lo) < fl && re.lo != fl) {
                        // more than one integer candidate or too wide
                        if (re.hi - re.lo >= 1.0) { ambiguous = true; break; }
                    }
                    cand[k] = Int(static_cast<long long>(std::llround(re.mid())));
                    if (std::abs(re.mid() - std::llround(re.mid())) + re.width() > 0.49) {
                        if (re.width() > 0.49) { ambiguous = true; break; }
                        possible = false;  // clearly not an integer
                    }
                }
                cand.back() = 1;
                if (ambiguous || !possible) continue;
                if (int_poly_divides(cand, poly))
                    throw DomainError("build_ring: polynomial is reducible");
            }
            if (!ambiguous) break;
            prec *= 2;
            if (prec > precision_cap_bits())
                throw PrecisionError("build_ring: irreducibility test needs too much precision");
        }
    }

    // Minkowski matrix and its determinant
    {
        std::vector<std::vector<DInt>> rows;
        for (int i = 0; i < d; ++i) {
            const auto& e = ring->emb_[i];
            if (!e.is_real && e.conj < i) continue;  // one representative per pair
            CDInt theta{DInt::hull(certified[i].re.lo_d(), certified[i].re.hi_d()),
                        DInt::hull(certified[i].im.lo_d(), certified[i].im.hi_d())};
            if (e.is_real) theta.im = DInt::exact(0.0);
            CDInt pw{DInt::exact(1.0), DInt::exact(0.0)};
            std::vector<DInt> re_row(d), im_row(d);
            for (int k = 0; k < d; ++k) {
                re_row[k] = pw.re;
                im_row[k] = pw.im;
                pw = pw * theta;
            }
            rows.push_back(re_row);
            if (!e.is_real) rows.push_back(im_row);
        }
        ring->minkowski_.assign(d, std::vector<double>(d));
        ring->minkowski_err_ = 0.0;
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                ring->minkowski_[i][k] = rows[i][k].mid();
                ring->minkowski_err_ = std::max(ring->minkowski_err_, 0.5 * rows[i][k].width());
            }
        // |det| via interval gaussian elimination
        auto m = rows;
        DInt det = DInt::exact(1.0);
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            int piv = -1;
            double best = 0.0;
            for (int i = k; i < d; ++i) {
                double mag = std::min(std::abs(m[i][k].lo), std::abs(m[i][k].hi));
                if (m[i][k].contains_zero()) mag = 0.0;
                if (mag > best) { best = mag; piv = i; }
            }
            if (piv < 0) { ok = false; break; }
            if (piv != k) { std::swap(m[piv], m[k]); det = -det; }
            det = det * m[k][k];
            for (int i = k + 1; i < d; ++i) {
                DInt f = m[i][k] / m[k][k];
                for (int j = k; j < d; ++j) m[i][j] = m[i][j] - f * m[k][j];
            }
        }
        if (!ok) throw PrecisionError("build_ring: Minkowski determinant not resolvable");
        ring->mink_det_ = det.abs();
        if (!(ring->mink_det_.lo > 0))
            throw PrecisionError("build_ring: Minkowski determinant straddles zero");
    }

    // classes: real embeddings then pair representatives
    for (int i = 0; i < d; ++i)
        if (ring->emb_[i].is_real || ring->emb_[i].conj > i) ring->classes_.push_back(i);

    {
        std::ostringstream os;
        os << "poly:";
        for (size_t k = 0; k < poly.size(); ++k) os << (k ? "," : "") << poly[k];
        ring->id_ = os.str();
        if (auto bi = builtin_ring_id(*ring)) ring->id_ = *bi;
    }
    return ring;
}

const std::vector<CMpInt>& NumberRing::roots_mp(int prec) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = root_cache_.lower_bound(prec);
    if (it != root_cache_.end() && it->first >= prec) return it->second;

    const int d = degree_;
    const auto dpoly = int_derivative(poly_);
    std::vector<CMpInt> out;
    out.reserve(d);
    for (int i = 0; i < d; ++i) {
        // start from the best cached midpoint (or the double approximation)
        CMpInt z{MpInt::from_double(emb_[i].approx.real(), prec),
                 MpInt::from_double(emb_[i].approx.imag(), prec)};
        if (!root_cache_.empty()) {
            const auto& best = root_cache_.rbegin()->second[i];
            z = CMpInt{best.re.mid(), best.im.mid()};
        }
        const int iters = 8 + static_cast<int>(std::ceil(std::log2(static_cast<double>(prec))));
        for (int t = 0; t < iters; ++t) {
            CMpInt pz = horner_mp(poly_, z, prec);
            CMpInt dz = horner_mp(dpoly, z, prec);
            if (dz.abs_sq().contains_zero())
                throw PrecisionError("roots_mp: derivative vanishes near root");
            CMpInt step = pz / dz;
            z = CMpInt{(z.re - step.re).mid(), (z.im - step.im).mid()};
            if (emb_[i].is_real) z.im = MpInt::from_int(0, prec);
        }
        CMpInt pz = horner_mp(poly_, z, prec);
        CMpInt dz = horner_mp(dpoly, z, prec);
        if (dz.abs_sq().contains_zero())
            throw PrecisionError("roots_mp: cannot certify root (derivative interval has zero)");
        MpInt radius = (pz.abs_sq().sqrt() / dz.abs_sq().sqrt()) * MpInt::from_int(d, prec);
        MpInt spread = MpInt::sym(radius);
        CMpInt cert{z.re + spread, emb_[i].is_real ? MpInt::from_int(0, prec) : z.im + spread};
        out.push_back(cert);
    }
    auto [pos, inserted] = root_cache_.emplace(prec, std::move(out));
    return pos->second;
}

// ---------------------------------------------------------------------------
// embeddings
// ---------------------------------------------------------------------------

CDInt NumberRing::embed_dint(int i, const RingElement& x) const {
    const auto& e = emb_[i];
    CDInt theta{DInt::hull(e.approx.real() - e.err, e.approx.real() + e.err),
                e.is_real ? DInt::exact(0.0)
                          : DInt::hull(e.approx.imag() - e.err, e.approx.imag() + e.err)};
    return horner_d(x, theta);
}

CMpInt NumberRing::embed_mp(int i, const RingElement& x, int prec) const {
    const auto& roots = roots_mp(prec);
    return horner_mp(x, roots[i], prec);
}

DInt NumberRing::abs_sq_dint(int i, const RingElement& x) const {
    return embed_dint(i, x).abs_sq();
}

MpInt NumberRing::abs_sq_mp(int i, const RingElement& x, int prec) const {
    return embed_mp(i, x, prec).abs_sq();
}

CDInt NumberRing::root_dint(int i) const {
    const auto& e = emb_[i];
    return CDInt{DInt::hull(e.approx.real() - e.err, e.approx.real() + e.err),
                 e.is_real ? DInt::exact(0.0)
                           : DInt::hull(e.approx.imag() - e.err, e.approx.imag() + e.err)};
}

std::optional<Rat> NumberRing::abs_sq_exact(int i, const RingElement& x) const {
    if (degree_ == 1) return Rat(x[0]) * Rat(x[0]);
    if (degree_ == 2 && r1_ == 0) {
        // imaginary quadratic: |sigma(x)|^2 = N(x) = a^2 - c1 a b + c0 b^2
        const Rat a(x[0]), b(x[1]), c1(poly_[1]), c0(poly_[0]);
        return a * a - c1 * a * b + c0 * b * b;
    }
    (void)i;
    return std::nullopt;
}

// sign of theta_i - r0 for a real embedding; exact (theta is irrational).
int NumberRing::theta_cmp(int i, const Rat& r0) const {
    {
        DInt diff = root_dint(i).re - DInt::from_rat(r0);
        if (diff.lo > 0) return 1;
        if (diff.hi < 0) return -1;
    }
    for (int prec = 64;; prec *= 2) {
        if (prec > precision_cap_bits())
            throw PrecisionError("theta_cmp: cannot separate root from rational");
        const auto& roots = roots_mp(prec);
        auto le = roots[i].re.le_rat(r0);
        auto lt = roots[i].re.lt_rat(r0);
        if (lt && *lt) return -1;
        if (le && !*le) return 1;
    }
}

bool NumberRing::abs_sq_le(int i, const RingElement& x, const Rat& t, bool strict) const {
    bool zero = std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
    if (zero) return strict ? (t > 0) : (t >= 0);
    if (t < 0) return false;
    if (auto ex = abs_sq_exact(i, x)) return strict ? (*ex < t) : (*ex <= t);

    {
        DInt diff = abs_sq_dint(i, x) - DInt::from_rat(t);
        if (diff.hi < 0) return true;
        if (diff.lo > 0) return false;
    }

    // Real embedding: sigma(x)^2 = sigma(x^2); ties against t are decidable.
    if (emb_[i].is_real) {
        RingElement y = mul(x, x);
        if (degree_ == 2) {
            // sigma(y) = y0 + y1 * theta; theta irrational, so compare exactly
            Rat y0(y[0]), y1(y[1]);
            if (y1 == 0) return strict ? (y0 < t) : (y0 <= t);
            int c = theta_cmp(i, (t - y0) / y1);
            int sign = (y1 > 0) ? c : -c;  // sign of sigma(y) - t
            return sign < 0 || (!strict && sign == 0);
        }
        auto tie = real_eigenvalue_tie(i, y, t);
        if (tie.has_value() && *tie) return !strict;
        // otherwise sigma_i(x)^2 != t and interval refinement separates
    }

    for (int prec = 64;; prec *= 2) {
        if (prec > precision_cap_bits())
            throw PrecisionError("abs_sq_le: undecidable at precision cap");
        MpInt v = abs_sq_mp(i, x, prec);
        auto le = v.le_rat(t);
        auto lt = v.lt_rat(t);
        if (strict) {
            if (lt) return *lt;
        } else {
            if (le) return *le;
            if (lt && *lt) return true;
        }
    }
}

// Is sigma_i(y) exactly equal to t? (real embedding, rational t)
// Returns nullopt when sigma_i(y) != t (caller separates by refinement).
std::optional<bool> NumberRing::real_eigenvalue_tie(int i, const RingElement& y,
                                                    const Rat& t) const {
    auto my = mult_matrix(y);
    const int d = degree_;
    RatMat a(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a.at(r, c) = Rat(my[r][c]) - (r == c ? t : Rat(0));
    if (a.det() != 0) return std::nullopt;  // t is not an eigenvalue of M_y at all
    const int mult = d - a.rank();
    // refine until exactly `mult` conjugate values hug t; those are equal to t
    for (int prec = 64;; prec *= 2) {
        if (prec > precision_cap_bits())
            throw PrecisionError("abs_sq_le: eigenvalue tie unresolved at precision cap");
        int hugging = 0;
        bool ours = false;
        for (int j = 0; j < d; ++j) {
            CMpInt v = embed_mp(j, y, prec);
            bool im_zero = v.im.contains_zero();
            auto le = v.re.le_rat(t);
            auto lt = v.re.lt_rat(t);
            bool hug = im_zero && !(lt && *lt) && !(le && !*le);
            if (hug) {
                ++hugging;
                if (j == i) ours = true;
            }
        }
        if (hugging == mult) return ours;
    }
}

// ---------------------------------------------------------------------------
// ring arithmetic
// ---------------------------------------------------------------------------

RingElement NumberRing::one() const {
    RingElement e(degree_, Int(0));
    e[0] = 1;
    return e;
}

RingElement NumberRing::mul(const RingElement& a, const RingElement& b) const {
    const int d = degree_;
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    // reduce by the monic defining polynomial
    for (int k = 2 * d - 2; k >= d; --k) {
        Int f = prod[k];
        if (f == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < d; ++j) prod[k - d + j] -= f * poly_[j];
    }
    prod.resize(d);
    return prod;
}

std::vector<std::vector<Int>> NumberRing::mult_matrix(const RingElement& x) const {
    const int d = degree_;
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
    RingElement col(d, Int(0));
    std::copy(x.begin(), x.end(), col.begin());
    RingElement basis(d, Int(0));
    for (int j = 0; j < d; ++j) {
        std::fill(basis.begin(), basis.end(), Int(0));
        basis[j] = 1;
        RingElement xj = mul(x, basis);
        for (int i = 0; i < d; ++i) m[i][j] = xj[i];
    }
    return m;
}

// ---------------------------------------------------------------------------
// dual coefficients: solve V^T psi = phi with V the complex Vandermonde of roots
// ---------------------------------------------------------------------------

namespace {
template <typename CI, typename MakeExact>
std::vector<CI> solve_vandermonde_t(const std::vector<CI>& roots, const std::vector<Int>& phi,
                                    MakeExact mk) {
    const int d = static_cast<int>(roots.size());
    // M[r][c] = roots[r]^c gives V; we need V^T psi = phi, i.e. sum_r psi_r roots[r]^c = phi_c.
    std::vector<std::vector<CI>> m(d, std::vector<CI>(d + 1, CI{mk(0), mk(0)}));
    for (int r = 0; r < d; ++r) {
        CI pw{mk(1), mk(0)};
        for (int c = 0; c < d; ++c) {
            m[c][r] = pw;
            pw = pw * roots[r];
        }
    }
    for (int c = 0; c < d; ++c) m[c][d] = CI{mk(phi[c]), mk(0)};

    for (int k = 0; k < d; ++k) {
        int piv = -1;
        double best = -1.0;
        for (int i = k; i < d; ++i) {
            auto q = m[i][k].abs_sq();
            double lo;
            if constexpr (std::is_same_v<decltype(q), DInt>)
                lo = q.lo;
            else
                lo = q.lo_d();
            if (lo > best) { best = lo; piv = i; }
        }
        if (best <= 0.0) throw PrecisionError("dual_coefficients: singular Vandermonde interval");
        std::swap(m[k], m[piv]);
        for (int i = 0; i < d; ++i) {
            if (i == k) continue;
            CI f = m[i][k] / m[k][k];
            for (int j = k; j <= d; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    std::vector<CI> psi;
    psi.reserve(d);
    for (int k = 0; k < d; ++k) psi.push_back(m[k][d] / m[k][k]);
    return psi;
}
}  // namespace

std::vector<CDInt> NumberRing::dual_coefficients(const std::vector<Int>& phi) const {
    std::vector<CDInt> roots;
    for (int i = 0; i < degree_; ++i) roots.push_back(root_dint(i));
    auto mk = [](auto v) { return DInt::from_rat(Rat(v)); };
    auto psi = solve_vandermonde_t(roots, phi, mk);
    std::vector<CDInt> out;
    for (int i : classes_) out.push_back(psi[i]);
    return out;
}

std::vector<CMpInt> NumberRing::dual_coefficients_mp(const std::vector<Int>& phi, int prec) const {
    const auto& roots = roots_mp(prec);
    auto mk = [prec](auto v) { return MpInt::from_rat(Rat(v), prec); };
    auto psi = solve_vandermonde_t(roots, phi, mk);
    std::vector<CMpInt> out;
    for (int i : classes_) out.push_back(psi[i]);
    return out;
}

std::optional<Rat> NumberRing::dual_coeff_abs_sq_exact(int cls, const std::vector<Int>& phi) const {
    if (degree_ == 1) return Rat(phi[0]) * Rat(phi[0]);
    if (degree_ == 2 && r1_ == 0) {
        // psi = (phi1 - conj(theta) phi0)/(theta - conj(theta)), theta = u + iv
        const Rat c1(poly_[1]), c0(poly_[0]);
        const Rat u = -c1 / 2, v_sq = c0 - c1 * c1 / 4;
        const Rat p0(phi[0]), p1(phi[1]);
        Rat num = (p1 - u * p0) * (p1 - u * p0) + v_sq * p0 * p0;
        (void)cls;
        return num / (4 * v_sq);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// exact dual-norm comparison for d <= 2 (quadratic field arithmetic)
// ---------------------------------------------------------------------------

namespace {
struct QuadElem {  // a + b*theta, theta^2 = -c1 theta - c0
    Rat a, b;
};
}  // namespace

std::optional<bool> NumberRing::dual_norm_le_exact(const std::vector<Int>& phi,
                                                   const std::vector<Rat>& exp_w_class,
                                                   const Rat& bound, bool strict) const {
    if (degree_ == 1) {
        Rat v = Rat(phi[0] < 0 ? -phi[0] : phi[0]) * exp_w_class[0];
        return strict ? (v < bound) : (v <= bound);
    }
    if (degree_ != 2) return std::nullopt;
    if (r1_ == 0) {
        auto q = dual_coeff_abs_sq_exact(0, phi);
        // value = 2 sqrt(q) * w ; compare against bound via squares
        Rat lhs = 4 * (*q) * exp_w_class[0] * exp_w_class[0];
        if (bound < 0) return false;
        Rat rhs = bound * bound;
        return strict ? (lhs < rhs) : (lhs <= rhs);
    }
    // totally real quadratic: psi is a field element E with sigma_j(E) = psi_j
    const Rat c1(poly_[1]), c0(poly_[0]);
    const Rat p0(phi[0]), p1(phi[1]);
    auto qmul = [&](const QuadElem& x, const QuadElem& y) {
        return QuadElem{x.a * y.a - x.b * y.b * c0, x.a * y.b + x.b * y.a - x.b * y.b * c1};
    };
    auto qdiv = [&](const QuadElem& x, const QuadElem& y) {
        QuadElem ybar{y.a - y.b * c1, -y.b};
        Rat n = y.a * y.a - c1 * y.a * y.b + c0 * y.b * y.b;
        QuadElem t = qmul(x, ybar);
        return QuadElem{t.a / n, t.b / n};
    };
    auto qconj = [&](const QuadElem& x) { return QuadElem{x.a - x.b * c1, -x.b}; };
    auto sign_at = [&](const QuadElem& x, int emb) -> int {
        if (x.b == 0) return x.a == 0 ? 0 : (x.a > 0 ? 1 : -1);
        int c = theta_cmp(emb, -x.a / x.b);
        return x.b > 0 ? c : -c;
    };
    // E = (phi1 + c1 phi0 + theta phi0) / (2 theta + c1)
    QuadElem e = qdiv(QuadElem{p1 + c1 * p0, p0}, QuadElem{c1, Rat(2)});
    int s0 = sign_at(e, 0), s1 = sign_at(qconj(e), 0);  // sigma_1(E) sign via conj at emb 0
    // value = |sigma_0(E)| w0 + |sigma_1(E)| w1 = sigma_0(H),
    // H = s0 w0 E + s1 w1 conj(E)
    QuadElem h{Rat(s0) * exp_w_class[0] * e.a, Rat(s0) * exp_w_class[0] * e.b};
    QuadElem g = qconj(e);
    h.a += Rat(s1) * exp_w_class[1] * g.a;
    h.b += Rat(s1) * exp_w_class[1] * g.b;
    // compare sigma_0(H) <= bound
    QuadElem diff{h.a - bound, h.b};
    int s = sign_at(diff, 0);
    return strict ? (s < 0) : (s <= 0);
}

// ---------------------------------------------------------------------------
// builtins
// ---------------------------------------------------------------------------

RingPtr builtin_ring(const std::string& id) {
    if (id == "Q" || id == "Z") return NumberRing::build({Int(-1), Int(1)}, 0);
    if (id == "Q(i)" || id == "Z[i]") return NumberRing::build({Int(1), Int(0), Int(1)}, 0);
    if (id == "Q(sqrt2)" || id == "Z[sqrt2]")
        return NumberRing::build({Int(-2), Int(0), Int(1)}, 0);
    throw ParseError("unknown ring id '" + id + "'");
}

std::optional<std::string> builtin_ring_id(const NumberRing& ring) {
    const auto& p = ring.poly();
    if (p == std::vector<Int>{Int(-1), Int(1)}) return "Q";
    if (p == std::vector<Int>{Int(1), Int(0), Int(1)}) return "Q(i)";
    if (p == std::vector<Int>{Int(-2), Int(0), Int(1)}) return "Q(sqrt2)";
    return std::nullopt;
}

}  // namespace arakelov
