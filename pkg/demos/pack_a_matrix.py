"""Realize a ternary weight matrix, pack it into bitplanes and run the
select-add kernel next to the dense product.

    python demos/pack_a_matrix.py
"""

import numpy as np

from btrnn.numerics import RngStream
from btrnn.packed import (SaturationCounter, dequantize, footprint_table, pack, packed_matvec,
                          plane_bits, quantize_activations)
from btrnn.quantize import glorot_alpha, normalize, sample_ternary

rows, cols = 6, 70  # 70 columns spill into a second 64-bit word
alpha = glorot_alpha(cols, rows)
w = np.random.default_rng(0).uniform(-alpha, alpha, (rows, cols))
s = sample_ternary(normalize(w, alpha), RngStream(seed=1, stream_id=0))

p = pack(s, alpha, "ternary")
print(f"alpha = {alpha:.4f}, {p.words_per_row} words per row and plane")
print("row 0 mask :", plane_bits(p.mask_plane[:1], cols))
print("row 0 sign :", plane_bits(p.sign_plane[:1], cols))

x = np.random.default_rng(2).normal(size=cols)
print("packed  :", np.round(packed_matvec(p, x), 6))
print("dense   :", np.round((alpha * s) @ x, 6))

# the same product with Q4.8 activations, as the inference engine sees it
counter = SaturationCounter()
q = quantize_activations(x, counter)
print("Q4.8    :", np.round(packed_matvec(p, q, counter), 6))
print(f"largest activation rounding error {np.max(np.abs(dequantize(q) - x)):.2e}, "
      f"saturated {counter.activations}")

print("\nweight memory of a 1000-unit character LSTM over 49 symbols")
for r in footprint_table({"d_x": 49, "d_h": 1000}):
    print(f"  {r.precision:8s} {r.weights:>9,d} weights  {r.headline_bytes / 1000:>8,.0f} KB")
