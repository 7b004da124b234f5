#!/usr/bin/env python3
"""Smoke test for the gl3moments Python bindings.

Builds the cdylib with cargo, copies it next to this script under the
importable module name, and exercises a few operations end to end.

Usage: python3 python/smoke_test.py [--release]
"""

import math
import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_module(release: bool) -> pathlib.Path:
    cmd = ["cargo", "build", "-p", "gl3moments-py"]
    profile = "debug"
    if release:
        cmd.append("--release")
        profile = "release"
    subprocess.run(cmd, cwd=ROOT, check=True)
    built = ROOT / "target" / profile / "libgl3moments_py.so"
    if not built.exists():  # e.g. macOS
        built = ROOT / "target" / profile / "libgl3moments_py.dylib"
    dest = pathlib.Path(__file__).resolve().parent / "gl3moments_py.so"
    shutil.copyfile(built, dest)
    return dest


def main() -> int:
    release = "--release" in sys.argv
    build_module(release)
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
    import gl3moments_py as g

    # exact exponential sums
    assert g.ramanujan_sum(1, 3) == -1
    assert g.ramanujan_sum(2, 4) == -2
    v = g.kloosterman_tilde(2, 2, 1, 2, 2)
    assert abs(v - 2) < 1e-9, v
    o = g.kloosterman_oracle("tilde", [2, 2, 1], 2, 2)
    assert abs(v - o) < 1e-9
    b = g.kloosterman_big(2, 3, 1, 1, 3, 3)
    ob = g.kloosterman_oracle("big", [2, 3, 1, 1], 3, 3)
    assert abs(b - ob) < 1e-9
    a = g.asum_vanishing(1, 1, 2, 3, 1)
    assert abs(a) < 1e-8

    # gamma and zeta machinery
    assert abs(g.zeta(2 + 0j) - math.pi**2 / 6) < 1e-10
    assert abs(g.log_gamma(1 + 0j)) < 1e-12
    lg = g.log_gamma(0.5 + 10j)
    expected = math.sqrt(math.pi / math.cosh(10 * math.pi))
    assert abs(math.exp(lg.real) - expected) < 1e-10 * expected
    assert abs(g.gamma_r(2 + 0j) - 1 / math.pi) < 1e-12

    # spectral domain
    mu = g.SpectralTriple.imaginary(7.0, 3.0)
    assert abs(sum(mu.mu())) < 1e-12
    sd = g.spec_density(mu)
    assert sd.imag == 0 or abs(sd.imag) < 1e-9 * abs(sd)

    # dual representations of the w4 kernel
    km = g.k_w4(100.0, mu, "mellin")
    kb = g.k_w4(100.0, mu, "bessel")
    assert abs(km - kb) < 1e-5 * abs(km), (km, kb)

    # AFE weight in its flat regime
    mu2 = g.SpectralTriple.imaginary(16.8, 7.2)
    w = g.afe_weight("w", 0.1, 0.0, mu2, 1.0)
    assert abs(w - 1) < 0.01, w

    # mollifier coefficients
    x = g.mollifier_x(10.0)  # 1-indexed table, x[0] unused
    assert x[6] == 1.0  # x_6 = mobius(6)
    assert abs(x[30] + math.log(100.0 / 30.0) / math.log(10.0)) < 1e-12

    # weighted argument principle on a quadratic fixture
    res = g.argument_principle_residual([0.3 + 0.1j, 0.55 - 0.25j], 0.0, 1.0, 0.5)
    assert res < 1e-8, res

    # first zeta zero
    gamma1 = g.zeta_zero_near(14.0, 14.3)
    assert abs(gamma1 - 14.134725) < 1e-5

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
