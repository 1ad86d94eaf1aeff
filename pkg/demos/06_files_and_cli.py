"""Canonical files and the command-line tool.

The same steps are available from a shell as ``trigenus info``,
``trigenus trisect`` and so on.
"""
import tempfile
from pathlib import Path

from trigenus import boundary_5simplex, find_colouring, write_colouring
from trigenus.cli import main
from trigenus.io import save_triangulation, write_triangulation

tri = boundary_5simplex()
text = write_triangulation(tri)
print(text, end="")
print(write_colouring(find_colouring(tri)), end="")

with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "s4.tri"
    save_triangulation(tri, path)
    for argv in (["info", str(path)],
                 ["trisect", str(path), "--auto"],
                 ["bounds", "--chi", "26", "--b1", "24", "--b2", "72", "--sigma", "14400",
                  "--not-s4"]):
        print("$ trigenus " + " ".join(argv))
        main(argv)
