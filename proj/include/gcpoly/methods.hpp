#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gcpoly/assigning.hpp"
#include "gcpoly/cycles.hpp"
#include "gcpoly/errors.hpp"
#include "gcpoly/multigraph.hpp"
#include "gcpoly/polynomial.hpp"

namespace gcpoly {

/// Collects non-fatal notes, e.g. a theorem-backed method run on an
/// assigning that was never shown to be induced.
struct Diagnostics {
  std::vector<std::string> warnings;
};

// P(G, a; k) = sum over a-compatible spanning subgraphs H of
// (-1)^|E(H)| k^c(H).
IntPolynomial poly_subgraph(const MultiGraph& g, const Assigning& a, const Budget& budget = {});

// tau(G, a; k): the same sum with k^(r(G) - r(H)).
IntPolynomial tau_subgraph(const MultiGraph& g, const Assigning& a, const Budget& budget = {});

/// tau by deletion and contraction: loops first, then bridges, then the
/// smallest remaining edge id. Subproblems are memoized on (graph,
/// assigning).
IntPolynomial tau_delcon(const MultiGraph& g, const Assigning& a);
IntPolynomial poly_delcon(const MultiGraph& g, const Assigning& a);

/// w_i = number of i-edge spanning forests containing no broken a-compatible
/// cycle, for i = 0..r(G).
std::vector<BigInt> broken_cycle_counts(const MultiGraph& g, const Assigning& a,
                                        const LinearOrder& ord, const Budget& budget = {});

/// sum_i (-1)^i w_i k^(|V| - i). Exact when a is induced by some f.
IntPolynomial poly_broken(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                          const Budget& budget = {}, Diagnostics* diag = nullptr);

/// Sum over bond-compatible X of delta(X) (-1)^|X| (k-1)^(r(G) - r(X)).
/// Exact when a is induced by some f.
IntPolynomial tau_bond(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                       const Budget& budget = {}, Diagnostics* diag = nullptr);
IntPolynomial poly_bond(const MultiGraph& g, const Assigning& a, const LinearOrder& ord,
                        const Budget& budget = {}, Diagnostics* diag = nullptr);

/// Product over components of the subgraph polynomial.
IntPolynomial decompose(const MultiGraph& g, const Assigning& a, const Budget& budget = {});

/// Unsigned coefficients read off P: w_i = (-1)^i [k^(|V| - i)] P, for
/// i = 0..|V|.
std::vector<BigInt> unsigned_coefficients(const IntPolynomial& p, std::size_t num_vertices);

enum class Method { subgraph, delcon, broken, bond, decompose };

/// Throws InputError for an unknown name.
Method parse_method(std::string_view name);
std::string_view method_name(Method m);

/// P(G, a; k) by the chosen method.
IntPolynomial cycle_assigning_polynomial(const MultiGraph& g, const Assigning& a, Method method,
                                         const LinearOrder& ord, const Budget& budget = {},
                                         Diagnostics* diag = nullptr);
/// tau(G, a; k) = P / k^c(G) by the chosen method.
IntPolynomial alpha_assigning_polynomial(const MultiGraph& g, const Assigning& a, Method method,
                                         const LinearOrder& ord, const Budget& budget = {},
                                         Diagnostics* diag = nullptr);

/// Classical chromatic polynomial by deletion and contraction on the
/// underlying simple graph. Any loop gives 0.
IntPolynomial chromatic_polynomial(const MultiGraph& g);

}  // namespace gcpoly
