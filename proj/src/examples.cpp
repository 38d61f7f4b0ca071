#include "acb/examples.hpp"

#include "acb/errors.hpp"

namespace acb {

namespace {

Manifold sasaki5()
{
    Manifold m;
    m.params = ParameterSet({"p", "q"});
    const Scalar p = Scalar::parameter(m.params, 0);
    const Scalar q = Scalar::parameter(m.params, 1);
    m.algebra = LieAlgebra(5, m.params);
    m.algebra.set_bracket(0, 1, {0, 0, p, 1, q});
    m.algebra.set_bracket(0, 2, {0, -p, 0, -q, 1});
    m.algebra.set_bracket(0, 3, {0, -1, -q, 0, p});
    m.algebra.set_bracket(0, 4, {0, q, -1, -p, 0});

    auto& s = m.structure;
    s.g = Matrix(5, 5);
    s.g(0, 0) = 1;
    s.g(1, 1) = 1;
    s.g(2, 2) = 1;
    s.g(3, 3) = -1;
    s.g(4, 4) = -1;
    s.phi = Matrix(5, 5);
    s.phi(3, 1) = 1;  // φe_1 = e_3
    s.phi(4, 2) = 1;  // φe_2 = e_4
    s.phi(1, 3) = -1; // φe_3 = -e_1
    s.phi(2, 4) = -1; // φe_4 = -e_2
    s.xi = basis_vector(5, 0);
    s.eta = lower_xi(s);
    return m;
}

Manifold f5dim3()
{
    Manifold m;
    m.params = ParameterSet({"p"});
    const Scalar p = Scalar::parameter(m.params, 0);
    m.algebra = LieAlgebra(3, m.params);
    m.algebra.set_bracket(0, 1, {0, p, 0});
    m.algebra.set_bracket(0, 2, {0, 0, p});

    auto& s = m.structure;
    s.g = Matrix(3, 3);
    s.g(0, 0) = 1;
    s.g(1, 1) = 1;
    s.g(2, 2) = -1;
    s.phi = Matrix(3, 3);
    s.phi(2, 1) = 1;  // φe_1 = e_2
    s.phi(1, 2) = -1; // φe_2 = -e_1
    s.xi = basis_vector(3, 0);
    s.eta = lower_xi(s);
    return m;
}

Manifold flat3()
{
    Manifold m;
    m.algebra = LieAlgebra(3, m.params);
    auto& s = m.structure;
    s.g = Matrix(3, 3);
    s.g(0, 0) = 1;
    s.g(1, 1) = 1;
    s.g(2, 2) = -1;
    s.phi = Matrix(3, 3);
    s.phi(2, 1) = 1;
    s.phi(1, 2) = -1;
    s.xi = basis_vector(3, 0);
    s.eta = lower_xi(s);
    return m;
}

} // namespace

const std::vector<std::string>& builtin_example_names()
{
    static const std::vector<std::string> names{"sasaki5", "f5dim3", "flat3"};
    return names;
}

Manifold builtin_example(std::string_view name)
{
    if (name == "sasaki5")
        return sasaki5();
    if (name == "f5dim3")
        return f5dim3();
    if (name == "flat3")
        return flat3();
    std::string known;
    for (const auto& n : builtin_example_names())
        known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown example '" + std::string(name) + "' (available: " + known + ")");
}

} // namespace acb
