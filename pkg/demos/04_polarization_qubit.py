"""
Teleporting a polarization qubit
================================

Two identical teleporters, one per polarization mode, share a gain. The
numerical joint fidelity should not care which polarization was sent.
"""

# %%
import numpy as np

from cvgain import fidelity_joint
from cvgain.polarization import joint_fidelity_numeric, random_qubits, two_mode_normalization
from cvgain.transfer import TeleportParams

p = TeleportParams(0.5, 0.79)
vals = np.array([joint_fidelity_numeric(s, p) for s in random_qubits(10, seed=0)])
print("10 random qubits:", vals.round(10))
print("spread:", np.ptp(vals), " F0*F1:", fidelity_joint(0.5, 0.79))

# %%
# Outcome probabilities over both measurement planes still sum to one.
print(two_mode_normalization(random_qubits(1, seed=1)[0], p))
