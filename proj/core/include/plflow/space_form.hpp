#pragma once

namespace plflow {

// Trigonometry of the model space M_K with constant sectional curvature K.
// sk is the generalized sine, ck the generalized cosine and fk(r) the
// integral of sk from 0 to r.  Exact K = 0 uses the Euclidean closed forms;
// any nonzero K uses the circular/hyperbolic branch.  All three are total
// functions of (K, t).
double sk(double K, double t);
double ck(double K, double t);
double fk(double K, double r);

// Strict realizability of a geodesic triangle with side lengths a, b, c in
// M_K.  For K <= 0 this is the strict triangle inequality; for K > 0 the
// sides must additionally fit on the sphere of radius 1/sqrt(K):
// each side < pi/sqrt(K) and perimeter < 2*pi/sqrt(K).
bool triangle_valid(double K, double a, double b, double c);

// Interior angle at the vertex between sides b and c, opposite side `opp`,
// of a geodesic triangle in M_K.  Throws InvalidTriangle when the sides do
// not form a strictly valid triangle.  Result lies in (0, pi).
double face_angle(double K, double opp, double b, double c);

}  // namespace plflow
