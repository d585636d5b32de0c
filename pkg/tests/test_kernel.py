import random

import pytest
from hypothesis import given, strategies as st

from youngwalls import _kernel
from youngwalls._signature_py import reduce_signature as reduce_py


def brute(classes, eps, phi, tail_plus):
    """Literal string cancellation, kept deliberately naive."""
    s = [("+", -1)] * tail_plus
    for k, c in enumerate(classes):
        s += [("-", k)] * eps[c] + [("+", k)] * phi[c]
    changed = True
    while changed:
        changed = False
        for j in range(len(s) - 1):
            if s[j][0] == "+" and s[j + 1][0] == "-":
                del s[j:j + 2]
                changed = True
                break
    minus = [o for sign, o in s if sign == "-"]
    plus = [o for sign, o in s if sign == "+"]
    return len(minus), len(plus), plus[0] if plus else -2, minus[-1] if minus else -2


tables = st.integers(1, 15).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 3), min_size=n, max_size=n),
    st.lists(st.integers(0, 3), min_size=n, max_size=n),
    st.lists(st.integers(0, n - 1), max_size=30),
    st.integers(0, 2)))


@given(tables)
def test_python_kernel_matches_bruteforce(data):
    eps, phi, classes, tail = data
    assert reduce_py(bytes(classes), bytes(eps), bytes(phi), tail) == \
        brute(classes, eps, phi, tail)


@pytest.mark.skipif(_kernel.BACKEND != "cython", reason="extension not built")
@given(tables)
def test_cython_matches_python(data):
    eps, phi, classes, tail = data
    args = (bytes(classes), bytes(eps), bytes(phi), tail)
    assert _kernel.reduce_signature(*args) == reduce_py(*args)


def test_long_wall():
    rng = random.Random(7)
    eps = bytes(rng.randrange(3) for _ in range(8))
    phi = bytes(rng.randrange(3) for _ in range(8))
    classes = bytes(rng.randrange(8) for _ in range(400))
    assert _kernel.reduce_signature(classes, eps, phi, 1) == brute(list(classes), eps, phi, 1)


@pytest.mark.parametrize("classes, expected", [
    (b"", (0, 1, -1, -2)),
    (bytes([0, 1]), (1, 0, -2, 1)),
])
def test_known_values(classes, expected):
    assert _kernel.reduce_signature(classes, bytes([1, 2]), bytes([1, 0]), 1) == expected


def test_backend_name():
    assert _kernel.BACKEND in ("cython", "python")


def test_pure_python_selected_by_env():
    import subprocess
    import sys
    env = {"YOUNGWALLS_PURE_PYTHON": "1", "PATH": ""}
    code = "from youngwalls import _kernel; print(_kernel.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
