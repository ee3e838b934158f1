"""
Cross-checking the closed forms
===============================
"""

# %%
# Quadrature over the measurement plane against the closed-form fidelity.
from cvgain import Coherent, SinglePhoton, Vacuum, fidelity, fidelity_oracle
from cvgain.fidelity import normalization_oracle
from cvgain.quadrature import QuadratureSpec

spec = QuadratureSpec(points=48)
for inp in (Vacuum(), SinglePhoton(), Coherent(1.0)):
    for q, g in ((0.25, 0.7), (0.75, 1.3)):
        exact, numeric = fidelity(inp, q, g), fidelity_oracle(inp, q, g, spec)
        print(f"{type(inp).__name__:>12} q={q} g={g}: {exact:.12f} {abs(exact - numeric):.1e}")

# %%
# Outcome probabilities integrate to one.
print(normalization_oracle(SinglePhoton(), 0.5, 0.8, spec))

# %%
# The truncated Fock-space transfer matrix reproduces the closed-form outputs.
import numpy as np

from cvgain.fock import coherent_state
from cvgain.transfer import TeleportParams, output_coherent, render, transfer_operator

p, beta, alpha, dim = TeleportParams(0.5, 0.8), 0.3 - 0.4j, 0.9j, 80
matrix = transfer_operator(p, beta, dim) @ coherent_state(alpha, dim)
closed = render(output_coherent(p, beta, alpha), dim)
print("max entry error:", np.max(np.abs(matrix.amplitudes - closed.amplitudes)))

# %%
# The full set of checks, as run by ``cvgain verify``.
from cvgain.verify import run_suite

for check in run_suite("all"):
    print(check.line())
