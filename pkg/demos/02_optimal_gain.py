"""
Optimal gain
============

Solve for the fidelity-maximizing gain and tabulate the improvement over
unit gain, first for coherent inputs and then for the photonic qubit.
"""

# %%
import numpy as np

from cvgain.gainopt import CoherentFixedAmp, PhotonicQubit, improvement_table, optimal_gain_coherent, optimal_gain_joint
from cvgain.gainopt import optimal_gain_vs_intensity, rule_of_thumb_gain

r = optimal_gain_coherent(0.5, 1.0)
print(f"coherent |a|^2=1, q=0.5: g_opt={r.g_opt:.5f} F_opt={r.F_opt:.5f} F(1)={r.F_unit:.5f}")

# %%
# Brighter inputs push the optimum toward unit gain.
intensities = [0, 1, 4, 12, 100]
for a2, row in zip(intensities, optimal_gain_vs_intensity(0.5, intensities)):
    print(f"|a|^2={a2:>3}: g_opt={row.g_opt:.4f}")

# %%
# Improvement table across entanglement.
for row in improvement_table(CoherentFixedAmp(1.0), np.arange(0, 1, 0.1)):
    print("q={:.1f} g_opt={:.4f} F_opt={:.4f} F_unit={:.4f} dF={:.4f}".format(*row.row()))

# %%
# The qubit optimum and its linear approximation.
for q in np.arange(0, 1, 0.1):
    r = optimal_gain_joint(q)
    print(f"q={q:.1f} g_opt={r.g_opt:.4f} 0.6+0.4q={rule_of_thumb_gain(q):.4f} F_opt={r.F_opt:.4f}")

print(improvement_table(PhotonicQubit(), [0.0])[0])
