"""
The command-line interface
==========================

``orichrom`` prints a JSON report (or a graph in graph6, digraph6 or DOT).
This script drives it in-process, the same as typing the commands in a shell.
"""

from orichrom.cli import main

commands = [
    "family circulant:7,1-2-3 --format digraph6",
    "chi-o-plus --graph cycle:3 --max-order 5",
    "chi-o --graph bipartite:2,3 --witness",
    "hom --from dpath:6 --to dcycle:3 --witness",
    "construct --which bipartite --m 2 --format dot",
    "moon-bounds 6",
    "verify --theorem t7-grid",
    "epsilon 5",
]
for line in commands:
    print(f"$ orichrom {line}")
    code = main(line.split())
    print(f"[exit {code}]\n")
