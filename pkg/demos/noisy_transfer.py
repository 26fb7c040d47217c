"""State transfer through noise on the 3-wing butterfly networks.

Takes the best placement (wing ends 5 and 6) on the butterflies grown
from the 2-path and the 3-path, sends the walker through each channel
family, and compares fidelity and coherence against the clean evolution.
Per-step series land in CSV files next to this script for plotting.

Run:  python demos/noisy_transfer.py
"""

from pathlib import Path

import numpy as np

from qwbutterfly import (
    NoiseSpec,
    ScenarioConfig,
    build_butterfly,
    build_path,
    export,
    run_scenario,
)

OUT_DIR = Path(__file__).resolve().parent / "output"
OUT_DIR.mkdir(exist_ok=True)

CHANNELS = {
    "rtn": NoiseSpec.rtn(0.1, 0.01),
    "oun": NoiseSpec.oun(1.0, 0.05),
    "nmad": NoiseSpec.nmad(0.001, 5.0),
}


def noisy_story(graph, label, sender=5, receiver=6, steps=200):
    print()
    print(f"=== {label}: s={sender}, r={receiver}, T={steps} ===")
    clean = run_scenario(ScenarioConfig(graph=graph, sender=sender, receiver=receiver,
                                        steps=steps))
    print(f"  clean:  avg {clean.summary.average_fidelity:.4f}  "
          f"max {clean.summary.max_fidelity:.4f} at t={clean.summary.argmax_t}  "
          f"final coherence {clean.coherence[-1]:.3f}")
    for name, spec in CHANNELS.items():
        res = run_scenario(ScenarioConfig(graph=graph, sender=sender, receiver=receiver,
                                          steps=steps, noise=spec))
        corr = np.corrcoef(res.fidelity, res.fidelity_noisy)[0, 1]
        csv_path = OUT_DIR / f"{label.replace(' ', '_')}_{name}.csv"
        export(res, csv_path=csv_path)
        print(f"  {name:4s}:  avg {res.summary.average_fidelity:.4f}  "
              f"max {res.summary.max_fidelity:.4f} at t={res.summary.argmax_t}  "
              f"corr with clean {corr:+.3f}  final coherence {res.coherence_noisy[-1]:.3f}"
              f"   -> {csv_path.name}")
    return clean


noisy_story(build_butterfly(build_path(2), 3), "3-wing from 2-path")
noisy_story(build_butterfly(build_path(3), 3), "3-wing from 3-path")

print()
print("The two Weyl-pair channels barely disturb the peak structure (their")
print("kernels stay near 1 for long stretches and only mix in a diagonal")
print("phase operator), while amplitude damping visibly suppresses the")
print("revivals and drags coherence down: dissipation, not just dephasing.")
print(f"Series written under {OUT_DIR}/ for external plotting.")
