"""Walkthrough: group elements as symbols, and their matrix shadows.

Run with:  python3 demos/demo_symbols_and_matrices.py
"""

from thompson_leavitt import correspondence, thompson

# A random element of G_{2,1} (classic Thompson's V) and its inverse.
a = thompson.random_symbol(2, 1, depth=4, seed=42)
print("a random element of G_{2,1}:")
print(a.text())

b = thompson.invert(a)
print("its inverse:")
print(b.text())

print("composition with the inverse reduces to the identity:")
print(thompson.compose(a, b).text())

# The same element as a 1x1 unitary matrix over the Leavitt algebra L_2.
U = correspondence.symbol_to_matrix(a)
print("as a unitary over L_2:")
print("  ", U.base[0, 0].text())
print("U U* is the identity:", (U * U.star()).base
      == correspondence.matrices.identity(1, 2))

# And back again: the matrix alone determines the group element.
back = correspondence.matrix_to_symbol(U)
print("decoding the matrix recovers a:", thompson.equals(back, a))
