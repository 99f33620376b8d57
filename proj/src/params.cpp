#include "sho/params.hpp"

namespace sho {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Parameters::Parameters(int p, int m, std::vector<int> t) : p_(p), m_(m), t_(std::move(t)) {
    if (!is_prime(p_) || p_ <= 3)
        throw config_error("p must be a prime greater than 3, got " + std::to_string(p_));
    if (m_ < 2)
        throw config_error("m must be at least 2, got " + std::to_string(m_));
    if (static_cast<int>(t_.size()) != m_)
        throw config_error("t must have exactly m entries");
    xi_ = 0;
    for (int ti : t_) {
        if (ti < 1) throw config_error("entries of t must be positive");
        long long q = 1;
        for (int k = 0; k < ti; ++k) q *= p_;
        pi_.push_back(q - 1);
        xi_ += q;
    }
    // xi = |pi| + m
    long long abs_pi = 0;
    for (long long v : pi_) abs_pi += v;
    if (xi_ != abs_pi + m_) throw config_error("internal: xi != |pi| + m");
}

bool Parameters::unit_t() const {
    for (int ti : t_)
        if (ti != 1) return false;
    return true;
}

ParamsPtr make_parameters(int p, int m, std::vector<int> t) {
    return std::make_shared<const Parameters>(p, m, std::move(t));
}

}  // namespace sho
