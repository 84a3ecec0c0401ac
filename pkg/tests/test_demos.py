import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"

SCRIPTS = [
    "quadratic_subfields_tour.py",
    "cubic_subfields_tour.py",
    "ramified_primes_shortcut.py",
    "certificates_and_verification.py",
    "stretch_degree128.py",   # cheap phases only without --full
]


@pytest.mark.parametrize("script", SCRIPTS)
def test_demo_runs(script):
    proc = subprocess.run([sys.executable, str(DEMOS / script)],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
