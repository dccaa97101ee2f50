"""Scratch scan for the C4 eight-cross preset (not part of the package)."""
import numpy as np
from cylknot.census import build_c4_eightcross
from cylknot.topomatrix import chirality_matrix, ring_matrix
from cylknot.invariants import det_exact, invariant
from cylknot import catalog as cat
from cylknot.errors import CylknotError

hits = []
tilts = (-0.6, -0.35, -0.15, -0.07, 0.07, 0.15, 0.35, 0.6)
radii = (0.3, 0.7, 1.2)
gaps = (0.03, 0.12, 0.35, 0.9)
twists = np.linspace(0, 2 * np.pi, 48, endpoint=False)
for tu in tilts:
    for tl in tilts:
        for ru in radii:
            for rl in radii:
                for gap in gaps:
                    for twist in twists:
                        try:
                            c = build_c4_eightcross(tu, tl, ru, rl, float(twist), gap)
                            P = chirality_matrix(c)
                            if det_exact(P) != 1625:
                                continue
                            R = ring_matrix(c)
                            exact = R == cat.R8
                            inv = invariant(P, R)
                            hits.append((round(inv, 6), exact, tu, tl, ru, rl,
                                         round(float(twist), 4), gap))
                            if exact and abs(inv - 23.304029304) < 1e-5:
                                print('EXACT MATCH:', hits[-1], flush=True)
                        except CylknotError:
                            continue
summary = {}
for h in hits:
    summary.setdefault((h[0], h[1]), h)
for k in sorted(summary):
    print(k, '->', summary[k])
print('total det-1625 hits:', len(hits))
