"""
Sign sequences and the coded points of z**2 - 2
================================================

At c = -2 every sign sequence codes the point 2 cos(pi t) for an exact
rational angle t, and a few pairs of sequences land on the same point.
For c < -2 the coding is injective.
"""

from quadpre import SignSequence, enumerate_sequences, psi
from quadpre.symdyn import angle_minus2, collides_at_minus2, count_X_minus2

for text in ["|+", "|-", "-|+", "+-|+", "++-|+", "+--|+"]:
    s = SignSequence.parse(text)
    print(f"{text:>6}  t = {str(angle_minus2(s)):>5}  psi = {psi(-2, s):+.12f}")

a, b = SignSequence.parse("++-|+"), SignSequence.parse("+--|+")
print("\n++-|+ and +--|+ collide:", collides_at_minus2(a, b))

# distinct points per (k, p) against the counting formula
for k, p in [(0, 3), (1, 2), (2, 2), (3, 3)]:
    n = len({angle_minus2(s) for s in enumerate_sequences(k, p)})
    print(f"k={k} p={p}: {n} distinct points, formula {count_X_minus2(k, p)}")

# just below -2 the same two sequences separate
print("\nat c = -2.001:", psi(-2.001, a), psi(-2.001, b))
