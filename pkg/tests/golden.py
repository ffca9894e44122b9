"""CLI invocations whose output is frozen under tests/data/cli."""
from pathlib import Path

DATA = Path(__file__).parent / "data"
LINKS = "links.txt"  # commands run with DATA as working directory

GOLDEN = {
    "parse_rl": ["parse", "RL"],
    "parse_ladder": ["parse", "L^10R^2L^10R^2L^10R^6", "--json"],
    "bounds_ladder": ["bounds", "L^10R^2L^10R^2L^10R^6", "--json"],
    "bounds_family": ["bounds", "L^13RL^7RLR"],
    "bounds_file": ["bounds", "--file", LINKS, "--json"],
    "xy_5_2": ["xy", "--slope", "5/2"],
    "xy_7_4": ["xy", "--slope", "7/4", "--json"],
    "lr_from_xy": ["lr-from-xy", "YXXYXXYXYXX", "--case", "same"],
    "linear_example": ["linear", "LLRRLLRRLRLLRR", "--json"],
    "linear_winding": ["linear", "LRRRRRRRL"],
    "winding_l6r6": ["winding", "L^6R^6", "--json"],
    "walk_lr7l": ["walk", "LRRRRRRRL", "--json"],
    "annulus": ["annulus", "aBaBaBaba", "--json"],
    "annulus_pair": ["annulus", "Ba", "BaBa"],
    "classify": ["classify", "--file", LINKS, "--json"],
}

# the walk command also writes this figure
SVG_COMMAND = ["walk", "LRRRRRRRL", "--svg"]


def run(argv, cwd=DATA):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "modlink", *argv], cwd=cwd, capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr
