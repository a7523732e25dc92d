"""critlab: exact chromatic numbers, K_l-criticality and counterexample search."""

import sys


__version__ = "0.1.0"

# tomllib arrived in 3.11
if sys.version_info[:2] < (3, 11):
    print(
        "Warning: critlab needs Python 3.11 or newer, found {ver}".format(
            ver=".".join(map(str, sys.version_info[:3]))
        ),
        file=sys.stderr,
    )
