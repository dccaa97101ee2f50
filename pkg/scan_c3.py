"""Scratch scan for C3 six-cross class presets (not part of the package)."""
import numpy as np
from cylknot.census import build_c3_sixcross
from cylknot.topomatrix import chirality_matrix, ring_matrix
from cylknot.invariants import det_exact, invariant, invariant_n
from cylknot.errors import CylknotError

seen = {}
tilts_u = (0.15, 0.35, 0.6, 0.9, 1.2)
tilts_l = (-1.2, -0.9, -0.6, -0.35, -0.15, -0.07, 0.07, 0.15, 0.35, 0.6, 0.9, 1.2)
radii = (0.3, 0.7, 1.2)
gaps = (0.03, 0.12, 0.35, 0.9, 2.0)
twists = np.linspace(0, 2 * np.pi / 3, 24, endpoint=False)
count = 0
for tu in tilts_u:
    for tl in tilts_l:
        for ru in radii:
            for rl in radii:
                for gap in gaps:
                    for twist in twists:
                        count += 1
                        try:
                            c = build_c3_sixcross(tu, tl, ru, rl, float(twist), gap)
                            P = chirality_matrix(c)
                            if det_exact(P) != -125:
                                continue
                            R = ring_matrix(c)
                            inv = invariant(P, R)
                            pn, pnm = invariant_n(P, R), invariant_n(-P, R)
                            key = (round(inv, 5), round(min(pn, pnm), 5),
                                   round(max(pn, pnm), 5))
                            if key not in seen:
                                seen[key] = (tu, tl, ru, rl, round(float(twist), 4), gap)
                                print(key, '->', seen[key], flush=True)
                        except CylknotError:
                            continue
print('done,', count, 'builds,', len(seen), 'classes')
