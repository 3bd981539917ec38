"""
Driving the ``hypercut`` command from Python
============================================

The console script reads a plain text format: a header ``n N k K`` then one
edge per line with 1-based vertices, optionally suffixed ``:+`` or ``:-``.
"""

import json
import tempfile
from pathlib import Path

from hypercut.cli import main

workdir = Path(tempfile.mkdtemp())
src = workdir / "example.hg"
src.write_text("n 6 k 3\n1 2 3\n3 4 5\n4 5 6\n")

main(["info", str(src)])
main(["cheeger", "--tsv", str(src)])

# verify cross-checks everything it can and exits 1 on any failure
expect = workdir / "expect.json"
expect.write_text(json.dumps({"methods.exact.h": 0.5}))
print("exit code", main(["verify", str(src), "--expect", str(expect)]))

# gen is deterministic for a fixed seed
main(["gen", "8", "3", "6", "--seed", "2", "--connected", "--out", str(workdir / "r.hg")])
print((workdir / "r.hg").read_text())
