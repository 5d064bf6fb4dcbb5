#!/usr/bin/env python

""" Minimal script to test that gnk is installed and running well.

Usage example:
    pip install -U .
    ./tools/check_install.py
"""

import gnk


def check_install():
    # The pure braid s2^2 on 3 strands is not trivial.
    braid = gnk.parse_braid("s2 s2", 3)
    return gnk.Phi(braid, gnk.CommutationMode.ORDERED)


if __name__ == "__main__":
    print(check_install())
    print("gnk executed OK.")
