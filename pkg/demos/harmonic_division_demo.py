"""How the distance ratio XA/XB behaves along the line through A and B.

Sliding X along the line, the ratio runs from 1 (far left) down to 0 at
A, back up through 1 at the midpoint, blows up near B, and decays back
toward 1 on the far right.  Every ratio other than 1 is therefore hit
twice: once inside the segment and once outside -- the harmonic
conjugate pair.
"""

from loci2d import Point, Ratio, dist, harmonic_conjugates, ratio_at

A = Point(0.0, 0.0)
B = Point(5.0, 0.0)
span = dist(A, B)

print("ratio profile along the line (x is the coordinate of X):")
for x in (-5000.0, -50.0, -5.0, -1.0, 0.0, 1.0, 2.5, 4.0, 4.9, 5.1, 7.0, 15.0, 50.0, 5000.0):
    if abs(x - B.x) < 1e-9:
        continue
    r = ratio_at(A, B, Point(x, 0.0))
    marker = "  <- midpoint" if x == 2.5 else ("  <- at A" if x == 0.0 else "")
    print(f"  x = {x:>8.1f}   XA/XB = {r:.6f}{marker}")
print()

for m, n in ((3, 2), (2, 5)):
    pair = harmonic_conjugates(A, B, Ratio(m, n))
    p, q = pair.internal, pair.external
    print(f"conjugate pair for ratio {m}/{n}:")
    print(f"  internal P = ({p.x:+.6f}, {p.y:+.6f})   PA/PB = {ratio_at(A, B, p):.12f}")
    print(f"  external Q = ({q.x:+.6f}, {q.y:+.6f})   QA/QB = {ratio_at(A, B, q):.12f}")
    # the signed cross ratio of (A, B; P, Q) is -1
    sp, sq = p.x / (span - p.x), q.x / (span - q.x)
    print(f"  signed AP/PB = {sp:+.6f}, signed AQ/QB = {sq:+.6f}  (sum {sp + sq:+.3g})")
    print()
