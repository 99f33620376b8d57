#ifndef SHO_PARAMS_HPP
#define SHO_PARAMS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sho {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of O(m,m;t): characteristic p > 3, m even and m odd variables,
/// height tuple t. Derived data: pi_i = p^{t_i} - 1 caps the even exponents,
/// xi = sum p^{t_i} is the top Z-degree of O.
class Parameters {
public:
    Parameters(int p, int m, std::vector<int> t);

    int p() const { return p_; }
    int m() const { return m_; }
    const std::vector<int>& t() const { return t_; }
    long long pi(int i) const { return pi_[i]; }
    long long xi() const { return xi_; }
    bool unit_t() const;

    // variables are indexed 0..2m-1: 0..m-1 even, m..2m-1 odd
    int nvars() const { return 2 * m_; }
    bool is_even_index(int j) const { return j < m_; }
    int mu(int j) const { return j < m_ ? 0 : 1; }           // parity of x_j
    int partner(int j) const { return j < m_ ? j + m_ : j - m_; }  // involution j'

    bool operator==(const Parameters& other) const {
        return p_ == other.p_ && m_ == other.m_ && t_ == other.t_;
    }

private:
    int p_;
    int m_;
    std::vector<int> t_;
    std::vector<long long> pi_;
    long long xi_;
};

using ParamsPtr = std::shared_ptr<const Parameters>;

ParamsPtr make_parameters(int p, int m, std::vector<int> t);

inline void ensure_same(const ParamsPtr& a, const ParamsPtr& b) {
    if (a != b && !(*a == *b))
        throw config_error("operands built over different Parameters");
}

}  // namespace sho

#endif
