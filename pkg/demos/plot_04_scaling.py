"""
Measuring how run time grows with n
===================================

Time isomorphic pairs at doubling sizes and fit a line in log-log space.
"""

import matplotlib.pyplot as plt
import numpy as np

from weightiso.bench import run_bench

###############################################################################
# Exact arithmetic up to n = 64, fingerprints above.
out = run_bench([8, 16, 32, 64, 128], instances=3, seed=0, fingerprint_above=64)
for row in out["rows"]:
    print(row["n"], row["mode"], f"{row['median_s'] * 1e3:.1f} ms")
print("slope:", round(out["fit"]["slope"], 2))

###############################################################################
ns = np.array([r["n"] for r in out["rows"]])
ts = np.array([r["median_s"] for r in out["rows"]])
fit = out["fit"]
plt.loglog(ns, ts, "o")
plt.loglog(ns, 10 ** fit["intercept"] * ns ** fit["slope"], "--")
plt.xlabel("n")
plt.ylabel("median seconds")
plt.show()
