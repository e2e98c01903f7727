"""Throughput, per-timestep latency and weight traffic of the low-power and
high-speed engines on the two reference workloads.

    python demos/engine_costs.py
"""

from btrnn import accel

engines, workloads = accel.default_bench()
print(f"{'engine':24s} {'workload':14s} {'GOps/s':>7s} {'latency':>10s} {'bound':>8s} "
      f"{'weights':>10s}")
for spec in engines:
    for wl in workloads[:2]:
        lat = accel.latency_per_timestep(spec, wl)
        print(f"{spec.name:24s} {wl.name:14s} {accel.throughput(spec) / 1e9:7.0f} "
              f"{lat.seconds * 1e6:8.3f}us {lat.bound:>8s} {wl.weight_bytes(spec.weight_bits):10,.0f}B")

ptb = workloads[1]
base = accel.engine("high-speed", "full")
for precision in ("binary", "ternary"):
    fast = accel.engine("high-speed", precision)
    print(f"{precision}: {accel.speedup(base, fast, ptb):.0f}x faster per timestep, "
          f"{accel.bandwidth_saving(ptb.weight_bytes(12), ptb.weight_bytes(fast.weight_bits)):.0f}x "
          "less weight traffic than 12-bit weights")
