#include "qkflow/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace qkflow::symfun {

namespace {

// S_0..S_m of the entries as given (no reordering here).
Eigen::VectorXd esf_of(const Eigen::VectorXd& v)
{
    const int m = static_cast<int>(v.size());
    Eigen::VectorXd s = Eigen::VectorXd::Zero(m + 1);
    s(0) = 1.0;
    for (int i = 0; i < m; ++i) {
        // reverse order so s(j-1) is still the previous pass
        for (int j = std::min(i + 1, m); j >= 1; --j) {
            s(j) += v(i) * s(j - 1);
        }
    }
    return s;
}

Eigen::VectorXd sorted_descending(const Eigen::VectorXd& lambda)
{
    std::vector<double> v(lambda.data(), lambda.data() + lambda.size());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Entries of lambda with index p removed, in canonical (descending) order.
Eigen::VectorXd esf_excluding(const Eigen::VectorXd& lambda, int p)
{
    const int n = static_cast<int>(lambda.size());
    Eigen::VectorXd reduced(n - 1);
    int j = 0;
    for (int i = 0; i < n; ++i) {
        if (i != p) reduced(j++) = lambda(i);
    }
    return esf_of(sorted_descending(reduced));
}

double binom(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

void check_k_range(const Eigen::VectorXd& lambda, int k, int k_min)
{
    const int n = static_cast<int>(lambda.size());
    if (n < 1) throw DomainError("symfun: lambda must have n >= 1 entries");
    if (k < k_min || k > n) {
        std::ostringstream os;
        os << "symfun: k = " << k << " out of range [" << k_min << ", " << n << "]";
        throw DomainError(os.str());
    }
}

// Throws when S_{k-1} is degenerate relative to the all-|lambda| scale.
double checked_denominator(const Eigen::VectorXd& lambda, int k)
{
    const Eigen::VectorXd s = all_elementary_symmetric(lambda);
    const double denom = s(k - 1);
    const double scale = elementary_symmetric(lambda.cwiseAbs(), k - 1);
    if (denom <= kDenominatorTol * std::max(1.0, scale)) {
        std::ostringstream os;
        os << "symfun: S_" << (k - 1) << " = " << denom << " is degenerate";
        throw DegenerateDenominatorError(os.str(), lambda);
    }
    return denom;
}

} // namespace

Eigen::VectorXd all_elementary_symmetric(const CurvatureVector& lambda)
{
    if (lambda.size() < 1) throw DomainError("symfun: lambda must have n >= 1 entries");
    return esf_of(sorted_descending(lambda));
}

double elementary_symmetric(const CurvatureVector& lambda, int k)
{
    check_k_range(lambda, k, 0);
    return all_elementary_symmetric(lambda)(k);
}

double qk_quotient(const CurvatureVector& lambda, int k)
{
    check_k_range(lambda, k, 1);
    const double denom = checked_denominator(lambda, k);
    return all_elementary_symmetric(lambda)(k) / denom;
}

SymQuotientJet qk_gradient(const CurvatureVector& lambda, int k)
{
    check_k_range(lambda, k, 1);
    const int n = static_cast<int>(lambda.size());
    const double denom = checked_denominator(lambda, k);

    SymQuotientJet jet;
    jet.k = k;
    jet.value = all_elementary_symmetric(lambda)(k) / denom;
    jet.gradient.resize(n);
    for (int p = 0; p < n; ++p) {
        if (n == 1) {
            // Q_1 = lambda_1 in dimension one
            jet.gradient(p) = 1.0;
            continue;
        }
        const Eigen::VectorXd sp = esf_excluding(lambda, p);
        const double s_km1_p = sp(k - 1);
        const double s_k_p = (k <= n - 1) ? sp(k) : 0.0;
        const double s_km2_p = (k >= 2) ? sp(k - 2) : 0.0; // S_{-1} := 0
        jet.gradient(p) = (s_km1_p * s_km1_p - s_k_p * s_km2_p) / (denom * denom);
    }
    return jet;
}

double dieter_lower_bound(const CurvatureVector& lambda, int k, int p)
{
    check_k_range(lambda, k, 1);
    const int n = static_cast<int>(lambda.size());
    const double denom = checked_denominator(lambda, k);
    const double s_km1_p = (n == 1) ? 1.0 : esf_excluding(lambda, p)(k - 1);
    const double ratio = s_km1_p / denom;
    return static_cast<double>(n) / (static_cast<double>(k) * static_cast<double>(n - k + 1)) * ratio * ratio;
}

PositivityIdentity positivity_identity_check(const CurvatureVector& lambda, int k)
{
    const SymQuotientJet jet = qk_gradient(lambda, k);
    const int n = static_cast<int>(lambda.size());
    PositivityIdentity out;
    out.lhs = (jet.gradient.array() * lambda.array().square()).sum();
    out.rhs = static_cast<double>(k) / static_cast<double>(n - k + 1) * jet.value * jet.value;
    return out;
}

double qk_axisymmetric(double kr, double kt, int n, int k)
{
    if (n < 1 || k < 1 || k > n) throw DomainError("qk_axisymmetric: k out of range");
    if (k == 1) return kr + static_cast<double>(n - 1) * kt;
    // S_j = kt^{j-1} (C(n-1,j-1) kr + C(n-1,j) kt); the kt^{k-2} factor cancels.
    const double num = binom(n - 1, k - 1) * kr + binom(n - 1, k) * kt;
    const double den = binom(n - 1, k - 2) * kr + binom(n - 1, k - 1) * kt;
    if (den <= 0.0) return 0.0; // fully degenerate node: flat, no motion
    return kt * num / den;
}

} // namespace qkflow::symfun
