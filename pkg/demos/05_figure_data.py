"""
Figure data from the command line
=================================

Each figure id emits a CSV table; here the CLI is driven in-process.
"""

# %%
from cvgain.cli import main

main(["figure", "6", "--steps", "11"])

# %%
main(["optimal-gain", "--family", "coherent", "--alpha-sq", "1", "--q-grid", "0:0.9:0.3"])

# %%
main(["curve", "--input", "photon", "--q", "0", "--gain-range=-2:2", "--steps", "9", "--format", "json"])
