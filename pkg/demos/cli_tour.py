"""
Driving the command line from a script
======================================

"""

import json
import subprocess
import sys


def qprime(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "qprime.cli", *args],
        capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout


# expand a second derivative: coefficients are n^2 sigma_1(n)
code, out = qprime("expand", "D^2 G2", "--precision", "6")
print("expand D^2 G2 ->", json.loads(out)["coeffs"])

# membership decisions double as exit codes, handy in shell pipelines
for spec in ("H8", "G4", "DELTA"):
    code, out = qprime("decide", spec, "--bound", "100")
    verdict = json.loads(out)["verdict"]["verdict"]
    print(f"decide {spec:<6} -> {verdict:<14} exit {code}")

# the partition table as CSV
code, out = qprime("macmahon", "--bound", "8", "--format", "csv")
print("\n" + out.strip())
