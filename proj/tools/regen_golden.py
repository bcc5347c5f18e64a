#!/usr/bin/env python3
"""Rewrites data/golden/*.out from the built CLI. Run from the repository root
after an intentional report change: tools/regen_golden.py build/tools/coxwalls"""
import json
import subprocess
import sys

binary = sys.argv[1] if len(sys.argv) > 1 else "build/tools/coxwalls"
cases = json.load(open("data/golden/cases.json"))
for case in cases:
    result = subprocess.run([binary] + case["args"], capture_output=True)
    with open(f"data/golden/{case['name']}.out", "wb") as out:
        out.write(result.stdout)
    case["exit"] = result.returncode
with open("data/golden/cases.json", "w") as f:
    f.write("[\n" + ",\n".join("  " + json.dumps(c) for c in cases) + "\n]\n")
