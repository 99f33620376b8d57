#ifndef SHO_GF_HPP
#define SHO_GF_HPP

#include <cstdint>
#include <stdexcept>

namespace sho::gf {

// residues are kept in [0, p)
inline int norm(long long a, int p) {
    a %= p;
    if (a < 0) a += p;
    return static_cast<int>(a);
}

inline int add(int a, int b, int p) { return (a + b) % p; }
inline int sub(int a, int b, int p) { return (a - b + p) % p; }
inline int mul(int a, int b, int p) { return static_cast<int>((static_cast<long long>(a) * b) % p); }
inline int neg(int a, int p) { return a == 0 ? 0 : p - a; }

inline int pow(int a, long long e, int p) {
    int r = 1 % p;
    int base = norm(a, p);
    while (e > 0) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline int inv(int a, int p) {
    a = norm(a, p);
    if (a == 0) throw std::domain_error("gf::inv: zero has no inverse");
    return pow(a, p - 2, p);
}

// C(n, k) mod p by Lucas' theorem
inline int binom(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    int result = 1;
    while (n > 0 || k > 0) {
        int nd = static_cast<int>(n % p);
        int kd = static_cast<int>(k % p);
        if (kd > nd) return 0;
        // C(nd, kd) with nd, kd < p
        int c = 1;
        for (int i = 0; i < kd; ++i)
            c = mul(c, mul(nd - i, inv(i + 1, p), p), p);
        result = mul(result, c, p);
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace sho::gf

#endif
