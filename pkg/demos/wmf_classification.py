"""Weight multiplicity free representations and the exceptional dimensions.

Sweeping all simple types up to rank 8 (plus the exceptional groups) finds
every irreducible whose weights all have multiplicity one, computes its
Frobenius-Schur type by locating the trivial constituent in the symmetric
or exterior square, and recovers the two exceptional dimension sets S-/S+
that govern when a theta divisor's Tannaka group could be smaller than the
full symplectic/orthogonal group.
"""

from thetacycles.lierep import classify_wmf
from thetacycles.schottky import s_sets, s_sets_from_classification

rows = classify_wmf(8, 600)
print(f"{len(rows)} weight multiplicity free irreducibles with dim <= 600\n")

print("the non-symmetric-power entries:")
print(f"{'type':>5} {'weight':>20} {'dim':>5} {'minuscule':>9} {'fs':>12}  group")
for r in rows:
    if r.family == "A-sym":
        continue
    print(
        f"{r.letter}{r.rank:>4} {str(r.weight):>20} {r.dim:>5} "
        f"{str(r.minuscule):>9} {r.fs:>12}  {r.group}"
    )

sm, sp = s_sets(600)
print("\nS- (symplectic minuscule dims, standards excluded):", sm)
print("S+ (orthogonal wmf dims, standards excluded):     ", sp)
sm2, sp2 = s_sets_from_classification(600, 9)
assert (sm, sp) == (sm2, sp2)
print("formula and sweep extraction agree.")
