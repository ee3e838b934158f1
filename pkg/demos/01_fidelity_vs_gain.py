"""
Fidelity as a function of gain
==============================

Sweep the gain for each input class and watch where the peak sits.
"""

# %%
# Closed-form fidelities are vectorized over the gain.
import numpy as np

from cvgain import Coherent, SinglePhoton, Vacuum, sample_curve

g = np.linspace(0, 2, 9)
for inp in (Vacuum(), Coherent(1.0), SinglePhoton()):
    curve = sample_curve(inp, 0.5, (0, 2), 401)
    g_peak, f_peak = curve.argmax()
    print(f"{type(inp).__name__:>12}: peak F={f_peak:.4f} at g={g_peak:.3f}")

# %%
# The vacuum peak tracks the entanglement exactly.
for q in (0.0, 0.25, 0.5, 0.75, 0.99):
    print(q, sample_curve(Vacuum(), q, (0, 2), 201).argmax())

# %%
# Without entanglement the single-photon curve is even in g, with twin
# peaks at +-1/sqrt(2).
c = sample_curve(SinglePhoton(), 0.0, (-2, 2), 401)
inner = (c.F[1:-1] > c.F[:-2]) & (c.F[1:-1] > c.F[2:])
print("photon peaks at", c.g[1:-1][inner])
