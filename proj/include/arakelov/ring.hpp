#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arakelov/interval.hpp"
#include "arakelov/numeric.hpp"
#include "arakelov/ratmat.hpp"

namespace arakelov {

using RingElement = std::vector<Int>;  // coordinates in the power basis 1, theta, ..., theta^{d-1}

// Order Z[theta] for theta a root of a monic irreducible integer polynomial.
// Embeddings are certified: each stored approximation comes with a radius that
// provably contains exactly one root, and conjugate pairs are identified.
class NumberRing {
  public:
    struct Embedding {
        std::complex<double> approx;
        double err;    // |approx - root| <= err
        bool is_real;
        int conj;      // index of the conjugate embedding (self for real ones)
    };

    // poly = c0, c1, ..., c_{d-1}, 1 (monic). Throws DomainError for reducible
    // or non-squarefree input, PrecisionError if certification fails.
    static std::shared_ptr<const NumberRing> build(std::vector<Int> poly, int precision_bits);

    int degree() const { return degree_; }
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    const std::vector<Int>& poly() const { return poly_; }
    int precision_bits() const { return precision_bits_; }
    const std::string& id() const { return id_; }
    const std::vector<Embedding>& embeddings() const { return emb_; }

    // sigma_i(x) as a certified interval.
    CDInt embed_dint(int i, const RingElement& x) const;
    CMpInt embed_mp(int i, const RingElement& x, int prec) const;

    // |sigma_i(x)|^2 intervals.
    DInt abs_sq_dint(int i, const RingElement& x) const;
    MpInt abs_sq_mp(int i, const RingElement& x, int prec) const;

    // Exact value of |sigma_i(x)|^2 when the field structure provides one
    // (d = 1, or an imaginary quadratic field).
    std::optional<Rat> abs_sq_exact(int i, const RingElement& x) const;

    // Decides |sigma_i(x)|^2 <= t (or <) exactly. Escalates precision; for
    // d <= 2 boundary ties are resolved algebraically, otherwise a genuine tie
    // raises PrecisionError at the precision cap.
    bool abs_sq_le(int i, const RingElement& x, const Rat& t, bool strict) const;

    // Ring arithmetic on the power basis.
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement one() const;
    std::vector<std::vector<Int>> mult_matrix(const RingElement& x) const;

    // Real Minkowski matrix: one row sigma(theta^k) per real embedding, then
    // rows Re sigma(theta^k), Im sigma(theta^k) per conjugate pair.
    const std::vector<std::vector<double>>& minkowski() const { return minkowski_; }
    double minkowski_entry_err() const { return minkowski_err_; }
    DInt minkowski_abs_det() const { return mink_det_; }

    // Representative embedding indices: all real ones, then one per pair.
    const std::vector<int>& embedding_classes() const { return classes_; }

    // Coefficients psi (one per embedding class) expressing the standard inner
    // product against an integer vector phi:
    //   phi . y = sum_real psi_r sigma_r(y) + sum_pairs 2 Re(psi_p sigma_p(y)).
    std::vector<CDInt> dual_coefficients(const std::vector<Int>& phi) const;
    std::vector<CMpInt> dual_coefficients_mp(const std::vector<Int>& phi, int prec) const;

    // |psi_class|^2 exactly, available for d <= 2.
    std::optional<Rat> dual_coeff_abs_sq_exact(int cls, const std::vector<Int>& phi) const;

    // Exact decision of sum_classes mult_cls |psi_cls| exp_w_cls <= bound for
    // d <= 2 (mult is 1 for real classes, 2 for pairs). nullopt when no exact
    // path exists at this degree.
    std::optional<bool> dual_norm_le_exact(const std::vector<Int>& phi,
                                           const std::vector<Rat>& exp_w_class, const Rat& bound,
                                           bool strict) const;

    // Certified interval for the i-th root.
    CDInt root_dint(int i) const;

    ~NumberRing() = default;

  private:
    NumberRing() = default;

    // sign of theta_i - r0 for a real embedding (exact; theta is irrational)
    int theta_cmp(int i, const Rat& r0) const;
    // is sigma_i(y) == t for rational t? nullopt means "provably not equal"
    std::optional<bool> real_eigenvalue_tie(int i, const RingElement& y, const Rat& t) const;

    // certified roots at >= prec bits (midpoint+radius as CMpInt); cached
    const std::vector<CMpInt>& roots_mp(int prec) const;

    std::vector<Int> poly_;
    int degree_ = 0;
    int r1_ = 0, r2_ = 0;
    int precision_bits_ = 128;
    std::string id_;
    std::vector<Embedding> emb_;
    std::vector<int> classes_;
    std::vector<std::vector<double>> minkowski_;
    double minkowski_err_ = 0.0;
    DInt mink_det_{};

    mutable std::mutex cache_mutex_;
    mutable std::map<int, std::vector<CMpInt>> root_cache_;
};

using RingPtr = std::shared_ptr<const NumberRing>;

// Builtin ring ids: "Q" (x-1), "Q(i)" (x^2+1), "Q(sqrt2)" (x^2-2).
RingPtr builtin_ring(const std::string& id);
std::optional<std::string> builtin_ring_id(const NumberRing& ring);

}  // namespace arakelov
