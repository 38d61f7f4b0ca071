#pragma once

#include "acb/linear_algebra.hpp"
#include "acb/structure.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace acb::test {

inline constexpr int kCases = 200;

struct RandomCase {
    Manifold m;
    std::string seed_info;
};

inline std::array<long, 3> cross(const std::array<long, 3>& u, const std::array<long, 3>& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline long levi_civita_symbol(std::size_t i, std::size_t j, std::size_t k)
{
    return static_cast<long>((static_cast<int>(j) - static_cast<int>(i)) * (static_cast<int>(k) - static_cast<int>(i))
                             * (static_cast<int>(k) - static_cast<int>(j)))
        / 2;
}

/// 3-dim Lie algebra in class A/B normal form: c_ij^l = ε_ijk n^{kl} + δ_j^l a_i - δ_i^l a_j
/// with n symmetric and n a = 0, so Jacobi holds. `scale` multiplies every constant.
inline LieAlgebra random_algebra(std::mt19937& rng, const ParameterSet& params, const Scalar& scale)
{
    std::uniform_int_distribution<long> small(-2, 2);
    std::array<long, 3> a{};
    if (rng() % 2)
        a = {small(rng), small(rng), small(rng)};
    long n[3][3] = {};
    for (int r = 0; r < 2; ++r) {
        std::array<long, 3> v{small(rng), small(rng), small(rng)};
        if (a != std::array<long, 3>{})
            v = cross(a, v);
        const long alpha = small(rng);
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                n[k][l] += alpha * v[k] * v[l];
    }
    LieAlgebra alg(3, params);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t l = 0; l < 3; ++l) {
                long c = 0;
                for (std::size_t k = 0; k < 3; ++k)
                    c += levi_civita_symbol(i, j, k) * n[k][l];
                c += (j == l ? a[i] : 0) - (i == l ? a[j] : 0);
                alg.structure(i, j, l) = scale * Scalar(c);
            }
    return alg;
}

/// Standard structure g = diag(1,1,-1), φe_1 = e_2, φe_2 = -e_1, ξ = e_0,
/// moved by a random invertible integer change of frame P.
inline AcbStructure random_structure(std::mt19937& rng)
{
    std::uniform_int_distribution<long> small(-2, 2);
    Matrix g(3, 3), phi(3, 3);
    g(0, 0) = g(1, 1) = 1;
    g(2, 2) = -1;
    phi(2, 1) = 1;
    phi(1, 2) = -1;
    Matrix p(3, 3);
    for (;;) {
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                p(r, c) = Scalar(small(rng));
        if (rank(p) == 3)
            break;
    }
    const Matrix pi = inverse(p);
    AcbStructure s;
    s.g = p.transposed() * g * p;
    s.phi = pi * phi * p;
    s.xi = apply_matrix(pi, Vec{1, 0, 0});
    s.eta = apply_matrix(p.transposed(), Vec{1, 0, 0});
    return s;
}

inline std::vector<RandomCase> make_cases()
{
    std::vector<RandomCase> out;
    std::mt19937 rng(7031);
    const ParameterSet none;
    const ParameterSet with_p{{"p"}};
    for (int i = 0; i < kCases; ++i) {
        // every fourth case carries a symbolic scale p
        const bool symbolic = i % 4 == 3;
        const ParameterSet& ps = symbolic ? with_p : none;
        Manifold m;
        m.params = ps;
        m.algebra = random_algebra(rng, ps, symbolic ? Scalar::parameter(with_p, 0) : Scalar(1));
        m.structure = random_structure(rng);
        out.push_back({std::move(m), "case " + std::to_string(i)});
    }
    return out;
}

inline const std::vector<RandomCase>& random_cases()
{
    static const std::vector<RandomCase> all = make_cases();
    return all;
}

} // namespace acb::test
