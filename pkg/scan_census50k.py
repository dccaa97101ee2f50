"""Scratch: three full-size census runs for the acceptance thresholds."""
import time
from cylknot.census import census_run

APPENDIX3 = [9.66667, 5.89286, 11.68421, 7.33333, 10.2, 3.67925]

for seed in (0, 1, 2):
    t0 = time.time()
    recs = census_run(n=6, trials=50000, det_target=-125, seed=seed)
    dt = time.time() - t0
    print(f"--- seed {seed}: {dt:.0f}s, {len(recs)} classes")
    print("top 10:")
    for r in recs[:10]:
        print(f"  {r.invariant:10.5f} count={r.count:5d} knottable={r.knottable} "
              f"pn=({r.invariant_n:.5f},{r.invariant_n_mirror:.5f}) sum={r.pair_sum:.5f}")
    values = {round(r.invariant, 5) for r in recs}
    for want in APPENDIX3:
        hits = [r.count for r in recs if abs(r.invariant - want) < 1e-4]
        print(f"  class {want}: counts {hits}")
    nines = [r for r in recs if abs(r.invariant - 9.66667) < 1e-4]
    print("  9.66667 pair sums:", [round(r.pair_sum, 5) for r in nines],
          "knottable:", [r.knottable for r in nines])
    others_knottable = [r.invariant for r in recs if r.knottable and abs(r.invariant - 9.66667) > 1e-4]
    print("  knottable outside 9.66667:", others_knottable, flush=True)
