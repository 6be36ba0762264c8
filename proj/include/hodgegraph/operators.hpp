#pragma once

#include <Eigen/Dense>

#include "hodgegraph/fields.hpp"

namespace hodgegraph {

enum class OperatorRole { Gradient, Divergence, Laplacian, FirstOrder, Adjoint, Projector, Curl, Greens };

std::string_view to_string(OperatorRole role);

/// Dense operator with rows/columns in canonical vertex or directed-edge order.
struct OperatorMatrix {
  OperatorRole role;
  Eigen::MatrixXd matrix;
};

// Matrices are memoized per graph. All of them require a connected graph.

/// 2|E| x |V|: row u has +1 at tip(u), -1 at base(u).
OperatorMatrix gradient_matrix(const Graph& g);
/// |V| x 2|E|, the transpose of the gradient.
OperatorMatrix divergence_matrix(const Graph& g);
/// div o grad; equals 2 (degree - adjacency).
OperatorMatrix laplacian_matrix(const Graph& g);
/// |V| x |V| matrix of phi -> X phi.
OperatorMatrix first_order_matrix(const VectorField& x);
/// Matrix of X*, built as X-bar + m(div X).
OperatorMatrix adjoint_matrix(const VectorField& x);
/// p_grad = grad o Laplacian^{-1} o div, the orthogonal projector onto im(grad).
OperatorMatrix helmholtz_projector(const Graph& g);
/// Column j is the Green's function with pole at the j-th vertex.
OperatorMatrix greens_matrix(const Graph& g);

/// d phi(u) = phi(tip u) - phi(base u).
VectorField gradient(const ScalarField& phi);
/// div X(i) = sum over base(u) = i of X(sigma u) - X(u).
ScalarField divergence(const VectorField& x);
/// Laplacian phi(i) = -2 sum over base(u) = i of d phi(u).
ScalarField laplacian_apply(const ScalarField& phi);
/// X phi(i) = sum over base(u) = i of X(u) d phi(u).
ScalarField first_order_apply(const VectorField& x, const ScalarField& phi);

/// Mean-zero psi with Laplacian psi = phi. Throws Errc::NotMeanZero.
ScalarField laplacian_solve(const ScalarField& phi);

/// G_i = Laplacian^{-1}(e_i - 1/|V|). Throws Errc::UnknownVertex.
ScalarField greens_function(const Graph& g, Vertex pole);

struct HelmholtzSplit {
  VectorField gradient_part;
  VectorField divfree_part;
};

/// X = p_grad X + (X - p_grad X); the second part is divergence-free.
HelmholtzSplit helmholtz_split(const VectorField& x);

}  // namespace hodgegraph
