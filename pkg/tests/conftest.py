import math
import random

import pytest

SAMPLE = b"aababaababb"

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def random_text(rng: random.Random, sigma: int, n: int) -> bytes:
    letters = b"abcdefghijklmnopqrstuvwxyz"[:sigma]
    return bytes(rng.choice(letters) for _ in range(n))


def log_uniform(rng: random.Random, lo: int, hi: int) -> int:
    return int(round(math.exp(rng.uniform(math.log(lo), math.log(hi)))))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[label]
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[ok]
        terminalreporter.write_line(f"{status}  criterion {label}: {detail}")
