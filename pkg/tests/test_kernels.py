import subprocess
import sys

import dncat._maxcliques_py as pure
from dncat.edges import compatibility_masks
from dncat.kernels import BACKEND, maximal_cliques


def test_backend_selected():
    assert BACKEND in ("python", "cython")


def test_kernels_agree_on_small_graphs():
    # triangle plus an isolated vertex
    masks = [0b0110, 0b0101, 0b0011, 0b0000]
    expected = [(0, 1, 2), (3,)]
    assert pure.maximal_cliques(masks, 4) == expected
    assert maximal_cliques(masks, 4) == expected


def test_kernels_agree_on_compatibility_graphs():
    for n in (4, 5, 6, 7):
        masks = list(compatibility_masks(n))
        assert maximal_cliques(masks, len(masks)) == pure.maximal_cliques(
            masks, len(masks))


def test_pure_fallback_env_switch():
    code = (
        "import dncat.kernels as k\n"
        "assert k.BACKEND == 'python', k.BACKEND\n"
        "masks = [0b110, 0b101, 0b011]\n"
        "assert k.maximal_cliques(masks, 3) == [(0, 1, 2)]\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", code],
        env={"DNCAT_PURE": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
