import random

import pytest

from lyndex import kernels
from lyndex.lyndon import is_lyndon

needs_ext = pytest.mark.skipif(kernels.cython_backend is None, reason="extension not built")


def lyndon_texts(count, seed=7):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 300)
        t = [rng.randint(1, rng.choice((2, 4, 26))) for _ in range(n)]
        yield t if is_lyndon(t) else [0] + t


def test_backend_name_consistent():
    assert kernels.BACKEND in ("cython", "python")
    if kernels.BACKEND == "python":
        assert kernels.lyndon_slp is kernels.python_backend.lyndon_slp


@needs_ext
def test_tree_backends_agree():
    py, cy = kernels.python_backend, kernels.cython_backend
    for t in lyndon_texts(200):
        assert [list(a) for a in cy.lyndon_tree(t)] == [list(a) for a in py.lyndon_tree(t)]


@needs_ext
def test_slp_and_fingerprint_backends_agree():
    py, cy = kernels.python_backend, kernels.cython_backend
    rng = random.Random(3)
    for t in lyndon_texts(200, seed=11):
        a, b = py.lyndon_slp(t), cy.lyndon_slp(t)
        assert [list(x) for x in a] == [list(x) for x in b]
        left, right, char, length, _ = a
        base = rng.randrange(2, (1 << 61) - 2)
        fa = py.fingerprints(left, right, char, length, base)
        fb = cy.fingerprints(left, right, char, length, base)
        assert [list(x) for x in fa] == [list(x) for x in fb]


def test_python_kernel_multiple_roots_for_non_lyndon():
    *_, roots = kernels.python_backend.lyndon_tree([2, 1])
    assert len(roots) == 2


def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    mod = runpy.run_path(str(script))
    mod["main"](["--sizes", "500", "--repeat", "1"])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("n\tg\tkernel")
    assert len(lines) == 4
