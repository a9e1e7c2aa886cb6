# The Clifford layer: products, interior products, and the commutator
# operators ad_phi that drive the curvature term construction.
#
# The algebra lives on the subset basis of the exterior algebra with the
# convention e.w = e ^ w - i_e(w), so generators square to -1.

import numpy as np

import doubleforms as df
from doubleforms import clifford as cl

ctx = df.AlgebraContext(4)
e1, e2, e3 = (cl.basis_vector(ctx, i) for i in (1, 2, 3))

print("== products of generators ==")
print("e1.e1 ->", cl.clifford_mul(e1, e1).coeffs[0], "(scalar -1)")
e12 = cl.clifford_mul(e1, e2)
print("e1.e2 is the basis bivector e1^e2:",
      np.array_equal(e12.coeffs, cl.basis_element(ctx, (1, 2)).coeffs))
print("(e1.e2)^2 ->", cl.clifford_mul(e12, e12).coeffs[0], "(scalar -1)")

print("\n== recovering the wedge ==")
# Antisymmetrizing products of distinct generators reproduces the wedge;
# with three generators there are 3! = 6 signed words.
from itertools import permutations
from math import factorial

acc = cl.zero_element(ctx)
for perm in permutations((1, 2, 3)):
    sign = 1
    for a in range(3):
        for b in range(a + 1, 3):
            if perm[a] > perm[b]:
                sign = -sign
    word = cl.basis_vector(ctx, perm[0])
    for i in perm[1:]:
        word = cl.clifford_mul(word, cl.basis_vector(ctx, i))
    acc = acc + sign * word
recovered = (1.0 / factorial(3)) * acc
print("antisymmetrized e-words == e1^e2^e3:",
      np.array_equal(recovered.coeffs, cl.basis_element(ctx, (1, 2, 3)).coeffs))

print("\n== interior product ==")
a = cl.basis_element(ctx, (1, 2))
print("i_{e1}(e1^e2) = e2:", np.array_equal(cl.interior(1, a).coeffs, e2.coeffs))
print("i_{e2}(e1^e2) = -e1:", np.array_equal(cl.interior(2, a).coeffs, -e1.coeffs))

print("\n== the commutator operators ==")
# ad_phi(psi) = phi.psi - psi.phi.  For phi = e_i.e_j and a basis word,
# the result is 0 unless exactly one of i, j occurs in the word, in which
# case it is twice the product.  The sum of these squared commutators,
# weighted by a curvature tensor, is the definitional curvature term.
phi = e12
print("ad(e1.e2) on e1^e2 (both present)  ->", cl.ad(phi, a).norm())
print("ad(e1.e2) on e3    (none present)  ->", cl.ad(phi, e3).norm())
got = cl.ad(phi, e1)
print("ad(e1.e2) on e1    (one present)   -> 2 e2:",
      np.array_equal(got.coeffs, 2.0 * e2.coeffs))

print("\nassociativity on random elements:")
rng = np.random.default_rng(1)
x, y, z = (cl.CliffordElement(rng.standard_normal(16), ctx) for _ in range(3))
resid = (cl.clifford_mul(cl.clifford_mul(x, y), z)
         - cl.clifford_mul(x, cl.clifford_mul(y, z))).norm()
print("  ||(xy)z - x(yz)|| =", resid)
