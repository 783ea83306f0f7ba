"""Walkthrough: the explicit isomorphism G_{4,1} = G_{4,2}.

The groups G_{n,r} and G_{n,s} are isomorphic exactly when
gcd(n-1, r) = gcd(n-1, s).  Here n = 4, and gcd(3, 1) = gcd(3, 2) = 1,
so G_{4,1} = G_{4,2} even though the root counts differ.

Run with:  python3 demos/demo_isomorphism.py
"""

from thompson_leavitt import iso, thompson

f = iso.group_iso(4, 1, 2)
print("plan: multiply the matrix size by l =", f.plan.l,
      "then apply", f.plan.shift_steps, "size shifts")

a = thompson.random_symbol(4, 1, depth=3, seed=7)
b = thompson.random_symbol(4, 1, depth=3, seed=8)

print("\nan element a of G_{4,1}:")
print(a.text())
print("its image f(a) in G_{4,2}:")
print(f(a).text())

print("f is a homomorphism:",
      thompson.equals(f(thompson.compose(a, b)),
                      thompson.compose(f(a), f(b))))
print("f maps the identity to the identity:",
      thompson.equals(f(thompson.identity_symbol(4, 1)),
                      thompson.identity_symbol(4, 2)))

# A size-changing example with an explicit two-sided inverse.
g = iso.group_iso(3, 1, 3)
h = iso.group_iso(3, 3, 1)
c = thompson.random_symbol(3, 1, depth=4, seed=9)
print("\nG_{3,1} -> G_{3,3} and back:", thompson.equals(h(g(c)), c))
