#pragma once

#include <string>
#include <vector>

#include "symforge/determinant.hpp"
#include "symforge/graph.hpp"

namespace symforge {

/// det(A) det(A[i,j]) == det(A[i]) det(A[j]) - det(A[i;j]) det(A[j;i]) with
/// 0-based i != j. Throws IndexError on bad indices.
bool dodgson_determinant_check(const PolyMatrix& a, std::size_t i, std::size_t j);

/// Two regular edges e_a = {v_i, v_k} and e_b = {v_j, v_k} meeting only at v_k.
struct DodgsonSetup {
    FeynGraph graph;
    std::string ea;
    std::string eb;
    std::string vi;
    std::string vj;
    std::string vk;

    /// Derives the vertex roles from the edge endpoints. Throws InvalidSetup.
    static DodgsonSetup make(const FeynGraph& g, const std::string& ea, const std::string& eb);
};

/// All setups on g, one per unordered pair of edges.
std::vector<DodgsonSetup> enumerate_dodgson_setups(const FeynGraph& g);

/// The four minors entering both identities.
struct DodgsonMinors {
    FeynGraph contract_a_delete_b;  // G/e_a - e_b
    FeynGraph contract_b_delete_a;  // G/e_b - e_a
    FeynGraph delete_both;          // G - e_a - e_b
    FeynGraph contract_both;        // G/e_a/e_b
};

DodgsonMinors dodgson_minors(const DodgsonSetup& s);

struct DodgsonUResult {
    Poly lhs;
    Poly delta1_quotient;  // Delta1 / (x_a x_b)
    bool holds = false;
};

/// calU(G/a-b) calU(G/b-a) - calU(G-a-b) calU(G/a/b) == (Delta1 / (x_a x_b))^2.
/// The left side uses the tree sums directly, so disconnected minors
/// contribute 0. Throws NotDivisible if x_a x_b does not divide Delta1.
DodgsonUResult dodgson_u_identity(const DodgsonSetup& s);

struct DodgsonMixedResult {
    Poly lhs;
    Poly delta2_quotient;  // Delta2 / (x_a x_b), extracted by exact division
    bool holds = false;
};

/// Four-term calU/calF0 combination == 2 (Delta1 / x_a x_b)(Delta2 / x_a x_b).
/// Delta2 / (x_a x_b) is obtained by exact division; the identity holds when
/// that division is exact and Delta2 is multilinear. Leg-free graphs hold
/// trivially with a zero quotient. Throws DegenerateDelta1 when Delta1 == 0.
DodgsonMixedResult dodgson_mixed_identity(const DodgsonSetup& s);

}  // namespace symforge
